#pragma once

// k-regular partitions, progression checks, and the series
// F_m = sum_n b_5((mn - 1)/6) q^n together with the eta quotient f(m; z).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "arith.hpp"
#include "error.hpp"
#include "eta.hpp"
#include "hecke.hpp"
#include "qseries.hpp"

namespace regulus {

inline void require_prime_modulus(u64 m, const char* who) {
    if (m < 5 || !is_prime(m)) throw std::invalid_argument(std::string(who) + ": m must be a prime >= 5");
}

/// sum b_k(n) q^n = prod (1 - q^{kn}) / (1 - q^n): a sparse pentagonal numerator
/// solved against a sparse pentagonal denominator. Offset 0.
template <class Ring>
basic_qseries<Ring> bk_series(u64 k, std::size_t precision, const Ring& ring, const series_options& opts = {}) {
    if (k < 2) throw std::invalid_argument("bk_series: k must be > 1");
    if (precision == 0) throw std::invalid_argument("bk_series: precision must be at least 1");
    const auto numerator = pentagonal_terms(ring, precision, k);
    const auto denominator = pentagonal_terms(ring, precision, 1);
    if constexpr (std::is_same_v<Ring, zp>) {
        auto c = detail::solve_mod(ring.modulus(), denominator, precision, detail::sparse_init(numerator), opts.threads);
        return qseries(ring, std::move(c), 0);
    } else {
        std::vector<typename Ring::value_type> rhs(precision, 0);
        for (const auto& t : numerator) rhs[t.index] = t.value;
        return basic_qseries<Ring>(ring, detail::solve_exact(denominator, rhs, precision), 0);
    }
}

inline qseries bk_series(u64 k, std::size_t precision, u32 modulus, const series_options& opts = {}) {
    return bk_series(k, precision, zp(modulus), opts);
}

inline zseries bk_series_exact(u64 k, std::size_t precision) { return bk_series(k, precision, zz{}); }

struct progression_report {
    u64 A = 0;
    u64 B = 0;
    u32 m = 0;
    u64 n_checked = 0;
    std::optional<u64> first_violation;
    bool all_zero = false;
};

/// Scans b_5(A n + B) mod m for n = 0..n_max in a precomputed b_5 series.
inline progression_report check_progression(u64 A, u64 B, u32 m, u64 n_max, const qseries& b5) {
    if (A < 1) throw std::invalid_argument("check_progression: A must be >= 1");
    if (b5.ring().modulus() != m) throw modulus_mismatch("check_progression: series modulus differs from m");
    if (A * n_max + B >= b5.precision()) throw std::invalid_argument("check_progression: b5 series too short");
    progression_report r{A, B, m, 0, std::nullopt, false};
    for (u64 n = 0; n <= n_max; ++n) {
        ++r.n_checked;
        if (b5[A * n + B] != 0) {
            r.first_violation = n;
            break;
        }
    }
    r.all_zero = !r.first_violation.has_value();
    return r;
}

/// Computes b_5 mod m to A n_max + B + 1 terms and scans the progression.
/// Throws resource_limit when that exceeds max_terms.
inline progression_report check_progression(u64 A, u64 B, u32 m, u64 n_max, u64 max_terms = 64'000'000,
                                            const series_options& opts = {}) {
    if (A < 1) throw std::invalid_argument("check_progression: A must be >= 1");
    const u128 need = u128{A} * n_max + B + 1;
    if (need > max_terms) {
        throw resource_limit("check_progression: needs " + std::to_string(static_cast<u64>(need)) +
                             " series terms, cap is " + std::to_string(max_terms));
    }
    return check_progression(A, B, m, n_max, bk_series(5, static_cast<std::size_t>(need), m, opts));
}

/// b_5 precision needed to build F_m to `precision` terms.
inline std::size_t b5_precision_for_Fm(u64 m, std::size_t precision) {
    if (precision <= 1) return 1;
    return static_cast<std::size_t>((m * (precision - 1) - 1) / 6 + 1);
}

/// F_m mod m from a b_5 series: coefficient n is b_5((mn - 1)/6) when that is a
/// nonnegative integer, else 0.
inline qseries build_Fm(u32 m, std::size_t precision, const qseries& b5) {
    require_prime_modulus(m, "build_Fm");
    if (b5.ring().modulus() != m) throw modulus_mismatch("build_Fm: b5 series is not reduced mod m");
    if (b5.precision() < b5_precision_for_Fm(m, precision)) {
        throw std::invalid_argument("build_Fm: b5 series has precision " + std::to_string(b5.precision()) + ", need " +
                                    std::to_string(b5_precision_for_Fm(m, precision)));
    }
    std::vector<u32> c(precision, 0);
    // mn = 1 (mod 6) exactly when n = m (mod 6)
    for (std::size_t n = m % 6; n < precision; n += 6) c[n] = b5[(u64{m} * n - 1) / 6];
    return qseries(b5.ring(), std::move(c), 0);
}

inline qseries build_Fm(u32 m, std::size_t precision, const series_options& opts = {}) {
    require_prime_modulus(m, "build_Fm");
    return build_Fm(m, precision, bk_series(5, b5_precision_for_Fm(m, precision), m, opts));
}

/// f(m; z) = eta(5z)/eta(z) * eta(5mz)^a * eta(mz)^b with m' = m mod 6,
/// a = 5 - m', b = m' - 1, and its reduction eta(5z)^{am+1} eta(z)^{bm-1} mod m.
struct fm_construction {
    u32 m;
    u32 m_prime;
    i64 a;
    i64 b;
    eta_quotient f;        // level 30m
    eta_quotient reduced;  // level 5
};

inline fm_construction build_f_mz(u32 m) {
    require_prime_modulus(m, "build_f_mz");
    const u32 mp = m % 6;
    const i64 a = 5 - static_cast<i64>(mp);
    const i64 b = static_cast<i64>(mp) - 1;
    eta_quotient::exponent_map f{{1, -1}, {5, 1}};
    f[5 * u64{m}] += a;
    f[m] += b;
    eta_quotient::exponent_map reduced{{5, a * m + 1}, {1, b * m - 1}};
    return {m, mp, a, b, eta_quotient(30 * u64{m}, f), eta_quotient(5, reduced)};
}

/// Frobenius congruence f(m; z) = eta(5z)^{am+1} eta(z)^{bm-1} (mod m), checked to `precision`.
inline frobenius_check verify_frobenius_reduction(u32 m, std::size_t precision, const series_options& opts = {}) {
    const auto fm = build_f_mz(m);
    return verify_frobenius_reduction(fm.f, fm.reduced, m, precision, opts);
}

/// F_m rebuilt through the eta chain: expand f(m; z), apply U(m), divide out
/// prod (1 - q^{5n})^a (1 - q^n)^b (the U-twist step), substitute q -> q^6 and
/// drop the leading q^s with s = (5a + b)/4.
inline qseries build_Fm_via_eta(u32 m, std::size_t precision, const series_options& opts = {}) {
    const auto fm = build_f_mz(m);
    const i64 s = (5 * fm.a + fm.b) / 4;
    const i64 c0 = fm.f.offset24() / 24;
    const std::size_t J = (precision - 1 + static_cast<std::size_t>(s)) / 6 + 1;
    const i64 f_len = static_cast<i64>(m) * static_cast<i64>(J - 1) + 1 - c0;
    const std::size_t f_precision = static_cast<std::size_t>(std::max<i64>(f_len, 1));

    const zp ring(m);
    const auto f = eta_quotient_series(fm.f, f_precision, ring, opts);
    const auto u = U(f, m).truncated(J);
    auto twist = qseries::one(ring, J);
    if (fm.a > 0) twist = mul(twist, pow(euler_product(ring, J, 5), fm.a, opts), opts);
    if (fm.b > 0) twist = mul(twist, pow(euler_product(ring, J, 1), fm.b, opts), opts);
    const auto g = divide(u, twist, opts);
    return V(g, 6).shifted24(-24 * s).normalized().truncated(precision);
}

}  // namespace regulus
