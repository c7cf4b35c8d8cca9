#pragma once

#include "arith.hpp"
#include "certify.hpp"
#include "document.hpp"
#include "error.hpp"
#include "eta.hpp"
#include "etaforms.hpp"
#include "expr.hpp"
#include "hecke.hpp"
#include "ntt.hpp"
#include "qseries.hpp"
#include "regpart.hpp"
#include "ring.hpp"
#include "series_cache.hpp"
