#pragma once

// Sturm-certified vanishing of F_m | T(l) mod m, the Ramanujan-type
// progressions it implies, the residue-class criterion scan, and prime searches.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "etaforms.hpp"
#include "hecke.hpp"
#include "regpart.hpp"

namespace regulus {

struct progression {
    u64 A = 0;
    u64 B = 0;
    u32 m = 0;

    friend bool operator==(const progression&, const progression&) = default;
};

enum class certificate_status { certified, failed, insufficient_precision };

inline const char* to_string(certificate_status s) {
    switch (s) {
        case certificate_status::certified: return "certified";
        case certificate_status::failed: return "failed";
        case certificate_status::insufficient_precision: return "insufficient_precision";
    }
    return "?";
}

struct nonzero_coefficient {
    u64 index = 0;
    u32 residue = 0;

    friend bool operator==(const nonzero_coefficient&, const nonzero_coefficient&) = default;
};

struct congruence_certificate {
    u32 m = 0;
    u64 l = 0;
    i64 weight = 0;
    u64 level = 180;
    i64 character = 5;
    u64 sturm_bound = 0;
    u64 coefficients_checked = 0;
    certificate_status status = certificate_status::failed;
    std::optional<nonzero_coefficient> first_nonzero;
    std::vector<progression> progressions;
    /// b_5 terms the computation needs; set for every status.
    u64 required_precision = 0;
    /// Wall-clock milliseconds per stage, in execution order.
    std::vector<std::pair<std::string, double>> timings;

    bool certified() const { return status == certificate_status::certified; }

    friend bool operator==(const congruence_certificate&, const congruence_certificate&) = default;
};

/// Supplies b_5 mod m to at least the requested precision.
using b5_provider = std::function<qseries(std::size_t precision, u32 m)>;

struct certify_options {
    /// Ceiling on b_5 terms a single certification may materialize.
    u64 max_b5_terms = 8'000'000;
    series_options series;
    /// Defaults to computing the series directly.
    b5_provider provider;
};

/// Ceiling used behind --extended; enough for (13, 16519) at about 31M terms.
inline constexpr u64 extended_b5_terms = 40'000'000;

namespace detail {

class stopwatch {
public:
    stopwatch() : start_(clock::now()) {}
    double lap_ms() {
        const auto now = clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_;
};

inline qseries provide_b5(const certify_options& opts, std::size_t precision, u32 m) {
    if (opts.provider) {
        auto s = opts.provider(precision, m);
        if (s.precision() < precision) throw std::logic_error("b5 provider returned a short series");
        return s;
    }
    return bk_series(5, precision, m, opts.series);
}

inline void require_admissible(u32 m, u64 l) {
    require_prime_modulus(m, "certify");
    if (!is_prime(l)) throw std::invalid_argument("certify: l = " + std::to_string(l) + " is not prime");
    if ((30 * u64{m}) % l == 0) {
        throw std::invalid_argument("certify: l = " + std::to_string(l) + " divides 30m and is not admissible");
    }
}

}  // namespace detail

/// For certified (m, l): with n0 = ml mod 6 and t* the class with 6t* + n0 = 0 (mod l),
/// emits A = m l^2, B = (m l (6c + n0) - 1)/6 for every c in [0, l) other than t*.
inline std::vector<progression> derive_progressions(u32 m, u64 l) {
    detail::require_admissible(m, l);
    const u64 ml = u64{m} * l;
    const u64 n0 = ml % 6;
    const u64 inv6 = invmod_prime(6 % l, l);
    const u64 t_star = mulmod((l - n0 % l) % l, inv6, l);
    std::vector<progression> out;
    out.reserve(l - 1);
    const u64 A = ml * l;
    for (u64 c = 0; c < l; ++c) {
        if (c == t_star) continue;
        out.push_back({A, (ml * (6 * c + n0) - 1) / 6, m});
    }
    return out;
}

/// Sturm bound of S_{2m-2}(Gamma_0(180), chi_5).
inline u64 certificate_sturm_bound(u32 m) { return sturm_bound(2 * u64{m} - 2, 180); }

/// Certifies F_m | T(l) = 0 (mod m) on all coefficients up to the Sturm bound.
inline congruence_certificate certify_pair(u32 m, u64 l, const certify_options& opts = {}) {
    detail::require_admissible(m, l);
    congruence_certificate cert;
    cert.m = m;
    cert.l = l;
    cert.weight = 2 * static_cast<i64>(m) - 2;
    cert.level = 180;
    cert.character = 5;
    cert.sturm_bound = certificate_sturm_bound(m);

    const u64 bound = cert.sturm_bound;
    const std::size_t f_precision = static_cast<std::size_t>(l * bound + 1);
    const std::size_t b5_precision = b5_precision_for_Fm(m, f_precision);
    cert.required_precision = b5_precision;
    if (b5_precision > opts.max_b5_terms) {
        cert.status = certificate_status::insufficient_precision;
        return cert;
    }

    detail::stopwatch sw;
    qseries F = [&] {
        const qseries b5 = detail::provide_b5(opts, b5_precision, m);
        cert.timings.emplace_back("b5_series", sw.lap_ms());
        auto f = build_Fm(m, f_precision, b5);
        cert.timings.emplace_back("build_Fm", sw.lap_ms());
        return f;
    }();
    const qseries image = hecke_T(F, l, cert.weight, cert.character);
    cert.timings.emplace_back("hecke_T", sw.lap_ms());

    const u64 checked = std::min<u64>(image.precision(), bound + 1);
    cert.coefficients_checked = checked;
    for (u64 n = 0; n < checked; ++n) {
        if (image[n] != 0) {
            cert.first_nonzero = nonzero_coefficient{n, image[n]};
            break;
        }
    }
    cert.timings.emplace_back("sturm_scan", sw.lap_ms());
    const bool enough = checked >= bound;
    cert.status = !enough               ? certificate_status::insufficient_precision
                  : cert.first_nonzero ? certificate_status::failed
                                       : certificate_status::certified;
    if (cert.certified()) {
        cert.progressions = derive_progressions(m, l);
        cert.timings.emplace_back("progressions", sw.lap_ms());
    }
    return cert;
}

struct criterion_result {
    u32 m = 0;
    bool found = false;
    std::optional<u64> k;
    std::optional<u32> e;
    /// A nonzero value first seen at 10(m-1) <= k < 12(m-1), outside the stated range.
    std::optional<u64> discrepancy_k;
};

/// Smallest k in [0, 10(m-1)) with b_5(mk + (m^2-1)/6) != 0 (mod m). The scan
/// continues to 12(m-1) so a first hit beyond the stated range is reported.
inline criterion_result criterion_scan(u32 m, const certify_options& opts = {}) {
    require_prime_modulus(m, "criterion_scan");
    const u64 stated = 10 * (u64{m} - 1);
    const u64 extended = 12 * (u64{m} - 1);
    const u64 base = (u64{m} * m - 1) / 6;
    const qseries b5 = detail::provide_b5(opts, static_cast<std::size_t>(m * (extended - 1) + base + 1), m);
    criterion_result r;
    r.m = m;
    for (u64 k = 0; k < extended; ++k) {
        const u32 v = b5[m * k + base];
        if (v == 0) continue;
        if (k < stated) {
            r.found = true;
            r.k = k;
            r.e = v;
        } else {
            r.discrepancy_k = k;
        }
        break;
    }
    return r;
}

struct scan_options {
    u64 prefilter_bound = 60;
    /// Restrict to l = -1 (mod 180 m).
    bool serre_only = false;
};

struct scan_entry {
    u64 l;
    congruence_certificate certificate;
};

/// Certified primes l <= l_max (l not dividing 30m), ascending. Candidates are
/// first screened on a(ln) for n <= prefilter_bound with gcd(n, l) = 1.
inline std::vector<scan_entry> scan_l(u32 m, u64 l_max, const scan_options& sopts = {},
                                      const certify_options& opts = {}) {
    require_prime_modulus(m, "scan_l");
    std::vector<u64> candidates;
    for (u64 l = 2; l <= l_max; ++l) {
        if (!is_prime(l) || (30 * u64{m}) % l == 0) continue;
        if (sopts.serre_only && (l + 1) % (180 * u64{m}) != 0) continue;
        candidates.push_back(l);
    }
    if (candidates.empty()) return {};

    // one shared series, grown on demand
    auto shared = std::make_shared<std::optional<qseries>>();
    certify_options inner = opts;
    inner.provider = [shared, opts](std::size_t precision, u32 mod) {
        if (!*shared || (*shared)->precision() < precision) *shared = detail::provide_b5(opts, precision, mod);
        return (*shared)->truncated(precision);
    };

    const std::size_t pre_precision = static_cast<std::size_t>((u64{m} * candidates.back() * sopts.prefilter_bound) / 6 + 1);
    const qseries pre = inner.provider(pre_precision, m);
    std::vector<u64> survivors;
    for (u64 l : candidates) {
        bool pass = true;
        for (u64 n = 1; n <= sopts.prefilter_bound && pass; ++n) {
            if (n % l == 0) continue;
            const u64 num = u64{m} * l * n - 1;
            if (num % 6 == 0 && pre[num / 6] != 0) pass = false;
        }
        if (pass) survivors.push_back(l);
    }

    std::vector<scan_entry> out;
    for (u64 l : survivors) {
        auto cert = certify_pair(m, l, inner);
        if (cert.certified()) out.push_back({l, std::move(cert)});
    }
    return out;
}

struct factorization_check {
    bool ok = false;
    qseries g;
    std::string diagnostic;
};

/// Expands eta(5z)^{am+1} eta(z)^{bm-1} mod m to precision mP, applies T(m) in
/// weight 2m with character (5|.), and divides by eta(5z)^4 eta(z)^4. Succeeds
/// when the quotient is a power series (nonnegative leading exponent).
inline factorization_check verify_eta_factorization(u32 m, std::size_t precision, const series_options& opts = {}) {
    const auto fm = build_f_mz(m);
    const zp ring(m);
    factorization_check out{false, qseries::zero(ring, 0), ""};
    const auto big = eta_quotient_series(fm.reduced, u64{m} * precision, ring, opts);
    const auto image = hecke_T(big, m, 2 * static_cast<i64>(m), 5);
    const auto delta = eta_quotient_series(eta_quotient(5, {{1, 4}, {5, 4}}), image.precision(), ring, opts);
    const auto quotient = divide(image, delta, opts);
    try {
        out.g = quotient.normalized();
    } catch (const std::domain_error& e) {
        out.diagnostic = std::string("quotient has a pole at infinity: ") + e.what();
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace regulus
