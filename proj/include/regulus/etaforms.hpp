#pragma once

// Modularity data of eta quotients: the Gordon-Hughes conditions, the
// Nebentypus character, Martin's cusp orders, and Sturm bounds.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "arith.hpp"
#include "eta.hpp"

namespace regulus {

using rational = boost::rational<i64>;

/// Character value chi(n) = (D | n), Kronecker symbol.
inline int character_eval(i64 descriptor, i64 n) { return kronecker(descriptor, n); }

struct cusp {
    i64 c = 1;
    u64 d = 1;
};

enum class form_class { cusp_form, holomorphic_form, not_holomorphic };

inline const char* to_string(form_class k) {
    switch (k) {
        case form_class::cusp_form: return "cusp_form";
        case form_class::holomorphic_form: return "holomorphic_form";
        case form_class::not_holomorphic: return "not_holomorphic";
    }
    return "?";
}

struct classification {
    form_class kind;
    std::vector<std::pair<cusp, rational>> cusp_orders;  // one per divisor d of N
};

struct form_meta {
    i64 weight;
    u64 level;
    /// Signed squarefree kernel of (-1)^k prod delta^{r_delta}.
    i64 character;
    classification cusps;

    bool is_cusp_form() const { return cusps.kind == form_class::cusp_form; }
};

enum class eta_condition { sum_delta_r, sum_level_over_delta_r, integral_weight };

inline const char* to_string(eta_condition c) {
    switch (c) {
        case eta_condition::sum_delta_r: return "sum delta*r_delta = 0 mod 24";
        case eta_condition::sum_level_over_delta_r: return "sum (N/delta)*r_delta = 0 mod 24";
        case eta_condition::integral_weight: return "sum r_delta even";
    }
    return "?";
}

struct eta_condition_error : std::domain_error {
    eta_condition which;
    eta_condition_error(eta_condition c, const std::string& detail)
        : std::domain_error(std::string("eta quotient fails ") + to_string(c) + ": " + detail), which(c) {}
};

/// Order of vanishing at the cusp c/d:
/// (N/24) sum_delta r_delta gcd(d^2, delta^2) / (delta gcd(d^2, N)). Depends only on d.
inline rational cusp_order(const eta_quotient& eq, const cusp& at) {
    const u64 N = eq.level();
    const u64 d = at.d;
    if (d == 0 || N % d != 0) {
        throw std::invalid_argument("cusp_order: d = " + std::to_string(d) + " does not divide N = " + std::to_string(N));
    }
    const u64 d2 = d * d;
    const u64 g_dN = std::gcd(d2, N);
    rational sum(0);
    for (const auto& [delta, r] : eq.exponents()) {
        sum += rational(r * static_cast<i64>(std::gcd(d2, delta * delta)), static_cast<i64>(delta * g_dN));
    }
    return rational(static_cast<i64>(N), 24) * sum;
}

/// Classifies by cusp orders at one representative 1/d per divisor d of N.
/// Does not re-check the Gordon-Hughes conditions.
inline classification classify(const eta_quotient& eq) {
    classification out{form_class::cusp_form, {}};
    bool all_positive = true, all_nonnegative = true;
    for (u64 d : divisors(eq.level())) {
        const cusp c{1, d};
        const rational ord = cusp_order(eq, c);
        all_positive = all_positive && ord > 0;
        all_nonnegative = all_nonnegative && ord >= 0;
        out.cusp_orders.emplace_back(c, ord);
    }
    out.kind = all_positive ? form_class::cusp_form
               : all_nonnegative ? form_class::holomorphic_form
                                 : form_class::not_holomorphic;
    return out;
}

/// Character descriptor for weight k: the signed squarefree kernel of
/// (-1)^k prod delta^{r_delta}. Negative exponents contribute like positive
/// ones since only the class modulo squares matters.
inline i64 character_descriptor(const eta_quotient& eq, i64 weight) {
    u64 kernel = 1;
    for (const auto& [delta, r] : eq.exponents()) {
        if (r % 2 != 0) kernel = squarefree_kernel(kernel * squarefree_kernel(delta));
    }
    const i64 sign = (weight % 2 == 0) ? 1 : -1;
    return sign * static_cast<i64>(kernel);
}

/// Checks the three Gordon-Hughes conditions and returns weight, level,
/// character and cusp classification.
inline form_meta gordon_hughes_meta(const eta_quotient& eq) {
    const u64 N = eq.level();
    i64 s1 = 0, s2 = 0, s3 = 0;
    for (const auto& [delta, r] : eq.exponents()) {
        s1 += static_cast<i64>(delta) * r;
        s2 += static_cast<i64>(N / delta) * r;
        s3 += r;
    }
    if (residue(s1, 24) != 0) throw eta_condition_error(eta_condition::sum_delta_r, "sum is " + std::to_string(s1));
    if (residue(s2, 24) != 0) {
        throw eta_condition_error(eta_condition::sum_level_over_delta_r, "sum is " + std::to_string(s2));
    }
    if (s3 % 2 != 0) throw eta_condition_error(eta_condition::integral_weight, "sum is " + std::to_string(s3));
    const i64 k = s3 / 2;
    return form_meta{k, N, character_descriptor(eq, k), classify(eq)};
}

/// floor((k N / 12) prod_{p | N} (1 + 1/p)), in exact integer arithmetic.
inline u64 sturm_bound(u64 weight, u64 level) {
    if (weight < 1 || level < 1) throw std::invalid_argument("sturm_bound: weight and level must be positive");
    u128 num = u128{weight} * level;
    u128 den = 12;
    for (u64 p : prime_factors(level)) {
        num *= (p + 1);
        den *= p;
    }
    return static_cast<u64>(num / den);
}

}  // namespace regulus
