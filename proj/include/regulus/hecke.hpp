#pragma once

// Operators on q-expansions: U(j), V(j) and the prime-index Hecke operator T(l).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "arith.hpp"
#include "eta.hpp"
#include "etaforms.hpp"
#include "qseries.hpp"

namespace regulus {

/// sum a(n) q^n  ->  sum a(jn) q^n. The input must have integral exponents; the
/// result has offset 0 and precision ceil(P/j) over the normalized input.
template <class Ring>
basic_qseries<Ring> U(const basic_qseries<Ring>& f, u64 j) {
    if (j == 0) throw std::invalid_argument("U: index must be positive");
    const auto g = f.normalized();
    const std::size_t P = g.precision();
    const std::size_t out_len = P == 0 ? 0 : (P - 1) / j + 1;
    std::vector<typename Ring::value_type> c(out_len);
    for (std::size_t n = 0; n < out_len; ++n) c[n] = g[n * j];
    return basic_qseries<Ring>(g.ring(), std::move(c), 0);
}

/// q -> q^j: coefficient n moves to jn; offset and precision scale by j.
template <class Ring>
basic_qseries<Ring> V(const basic_qseries<Ring>& f, u64 j) {
    if (j == 0) throw std::invalid_argument("V: index must be positive");
    std::vector<typename Ring::value_type> c(f.precision() * j, f.ring().zero());
    for (std::size_t n = 0; n < f.precision(); ++n) c[n * j] = f[n];
    return basic_qseries<Ring>(f.ring(), std::move(c), f.offset24() * static_cast<i64>(j));
}

/// a(n) -> a(ln) + chi(l) l^{k-1} a(n/l) for prime l and weight k, with
/// chi(l) = (D | l) and a(n/l) = 0 unless l | n. Precision ceil(P/l).
template <class Ring>
basic_qseries<Ring> hecke_T(const basic_qseries<Ring>& f, u64 l, i64 weight, i64 descriptor) {
    if (!is_prime(l)) throw std::invalid_argument("hecke_T: index " + std::to_string(l) + " is not prime");
    if (weight < 1) throw std::invalid_argument("hecke_T: weight must be at least 1");
    const auto g = f.normalized();
    const auto& ring = g.ring();
    const int chi = character_eval(descriptor, static_cast<i64>(l));

    typename Ring::value_type twist;
    if constexpr (std::is_same_v<Ring, zp>) {
        const u32 p = ring.modulus();
        u64 lk = 0;
        if (l % p != 0) lk = powmod(l % p, static_cast<u64>(weight - 1) % (p - 1), p);
        else lk = weight == 1 ? 1 : 0;
        twist = ring.from_int(chi * static_cast<i64>(lk));
    } else {
        twist = boost::multiprecision::pow(boost::multiprecision::cpp_int(l), static_cast<unsigned>(weight - 1)) * chi;
    }

    const std::size_t P = g.precision();
    const std::size_t out_len = P == 0 ? 0 : (P - 1) / l + 1;
    std::vector<typename Ring::value_type> c(out_len);
    for (std::size_t n = 0; n < out_len; ++n) {
        c[n] = g[n * l];
        if (n % l == 0) c[n] = ring.add(c[n], ring.mul(twist, g[n / l]));
    }
    return basic_qseries<Ring>(ring, std::move(c), 0);
}

struct frobenius_check {
    bool agree = false;
    std::size_t precision = 0;
    std::string diagnostic;
};

/// Expands both eta quotients mod m to precision P and compares them
/// coefficientwise. Differing leading exponents are reported as a failure.
inline frobenius_check verify_frobenius_reduction(const eta_quotient& lhs, const eta_quotient& rhs, u32 m,
                                                  std::size_t precision, const series_options& opts = {}) {
    frobenius_check out;
    out.precision = precision;
    if (lhs.offset24() != rhs.offset24()) {
        out.diagnostic = "offset mismatch: " + std::to_string(lhs.offset24()) + "/24 vs " +
                         std::to_string(rhs.offset24()) + "/24";
        return out;
    }
    const auto a = eta_quotient_series(lhs, precision, m, opts);
    const auto b = eta_quotient_series(rhs, precision, m, opts);
    for (std::size_t n = 0; n < precision; ++n) {
        if (a[n] != b[n]) {
            out.diagnostic = "coefficients differ at index " + std::to_string(n) + ": " + std::to_string(a[n]) +
                             " vs " + std::to_string(b[n]);
            return out;
        }
    }
    out.agree = true;
    return out;
}

}  // namespace regulus
