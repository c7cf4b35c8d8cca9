#pragma once

// Eta quotients prod_{delta | N} eta(delta z)^{r_delta} and their q-expansions.

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "qseries.hpp"

namespace regulus {

class eta_quotient {
public:
    using exponent_map = std::map<u64, i64>;

    /// Zero exponents are dropped; every remaining delta must divide the level.
    eta_quotient(u64 level, const exponent_map& exponents) : level_(level) {
        if (level == 0) throw std::invalid_argument("eta_quotient: level must be positive");
        for (const auto& [delta, r] : exponents) {
            if (delta == 0) throw std::invalid_argument("eta_quotient: delta must be positive");
            if (level % delta != 0) {
                throw std::invalid_argument("eta_quotient: delta " + std::to_string(delta) + " does not divide level " +
                                            std::to_string(level));
            }
            if (r != 0) exponents_[delta] = r;
        }
        if (exponents_.empty()) throw std::invalid_argument("eta_quotient: exponent map is empty");
    }

    /// Uses the least common multiple of the deltas as level.
    static eta_quotient minimal_level(const exponent_map& exponents) {
        u64 level = 1;
        for (const auto& [delta, r] : exponents) {
            if (r != 0 && delta != 0) level = std::lcm(level, delta);
        }
        return eta_quotient(level, exponents);
    }

    u64 level() const noexcept { return level_; }
    const exponent_map& exponents() const noexcept { return exponents_; }

    /// sum delta * r_delta: the leading exponent times 24.
    i64 offset24() const {
        i64 s = 0;
        for (const auto& [delta, r] : exponents_) s += static_cast<i64>(delta) * r;
        return s;
    }

    i64 exponent_sum() const {
        i64 s = 0;
        for (const auto& [delta, r] : exponents_) s += r;
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [delta, r] : exponents_) {
            if (!first) os << " * ";
            first = false;
            os << "eta(" << (delta == 1 ? "" : std::to_string(delta)) << "z)";
            if (r != 1) os << "^" << r;
        }
        return os.str();
    }

    friend bool operator==(const eta_quotient&, const eta_quotient&) = default;

private:
    u64 level_;
    exponent_map exponents_;
};

/// Signed exponents of prod_{n >= 1} (1 - q^{dilation * n}) below `precision`:
/// the generalized pentagonal numbers k(3k-1)/2 scaled by dilation, sign (-1)^k.
inline std::vector<std::pair<std::size_t, int>> pentagonal_exponents(std::size_t precision, u64 dilation = 1) {
    std::vector<std::pair<std::size_t, int>> out;
    if (precision == 0) return out;
    out.emplace_back(0, 1);
    for (u64 k = 1;; ++k) {
        const u64 e1 = dilation * (k * (3 * k - 1) / 2);
        const u64 e2 = dilation * (k * (3 * k + 1) / 2);
        const int sign = (k & 1) ? -1 : 1;
        if (e1 >= precision) break;
        out.emplace_back(e1, sign);
        if (e2 < precision) out.emplace_back(e2, sign);
    }
    return out;
}

template <class Ring>
std::vector<term<typename Ring::value_type>> pentagonal_terms(const Ring& ring, std::size_t precision, u64 dilation = 1) {
    std::vector<term<typename Ring::value_type>> out;
    for (const auto& [e, s] : pentagonal_exponents(precision, dilation)) out.push_back({e, ring.from_int(s)});
    return out;
}

/// prod_{n >= 1} (1 - q^{dilation * n}) to `precision`, with no q^(1/24) prefactor.
template <class Ring>
basic_qseries<Ring> euler_product(const Ring& ring, std::size_t precision, u64 dilation = 1) {
    const auto t = pentagonal_terms(ring, precision, dilation);
    return basic_qseries<Ring>::from_terms(ring, precision, t);
}

/// Expansion of an eta quotient: offset24 = sum delta r_delta and integral part
/// prod (1 - q^{delta n})^{r_delta}. Unit exponents stay on the sparse pentagonal
/// path; larger exponents go through pow.
template <class Ring>
basic_qseries<Ring> eta_quotient_series(const eta_quotient& eq, std::size_t precision, const Ring& ring,
                                        const series_options& opts = {}) {
    if (precision == 0) throw std::invalid_argument("eta_quotient_series: precision must be at least 1");
    auto result = basic_qseries<Ring>::one(ring, precision);
    for (const auto& [delta, r] : eq.exponents()) {
        if (r <= 0) continue;
        const auto factor = euler_product(ring, precision, delta);
        result = mul(result, r == 1 ? factor : pow(factor, r, opts), opts);
    }
    for (const auto& [delta, r] : eq.exponents()) {
        if (r >= 0) continue;
        const auto factor = euler_product(ring, precision, delta);
        if (-r <= 8) {
            for (i64 i = 0; i < -r; ++i) result = divide(result, factor, opts);
        } else {
            result = divide(result, pow(factor, -r, opts), opts);
        }
    }
    return result.shifted24(eq.offset24());
}

inline qseries eta_quotient_series(const eta_quotient& eq, std::size_t precision, u32 modulus,
                                   const series_options& opts = {}) {
    return eta_quotient_series(eq, precision, zp(modulus), opts);
}

inline zseries eta_quotient_series_exact(const eta_quotient& eq, std::size_t precision) {
    return eta_quotient_series(eq, precision, zz{});
}

}  // namespace regulus
