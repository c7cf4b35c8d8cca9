// Command-line front end: expansions, eta-quotient metadata, certificates and scans.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <regulus/regulus.hpp>

namespace {

using namespace regulus;

enum exit_code : int { ok = 0, math_failure = 1, usage = 2, resource = 3 };

struct global_flags {
    bool no_cache = false;
    unsigned threads = 1;
};

series_options series_opts(const global_flags& g) {
    series_options o;
    o.threads = std::max(1u, g.threads);
    return o;
}

b5_provider make_provider(const global_flags& g) {
    if (g.no_cache) return {};
    auto dir = cache::default_directory();
    auto opts = series_opts(g);
    return [dir, opts](std::size_t precision, u32 m) {
        try {
            return cache::series_cache(dir, opts).get(5, m, precision);
        } catch (const std::filesystem::filesystem_error& e) {
            std::cerr << "warning: cache unavailable (" << e.what() << "), computing directly\n";
            return bk_series(5, precision, m, opts);
        }
    };
}

std::string rational_string(const rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string offset_string(i64 nu) {
    if (nu % 24 == 0) return std::to_string(nu / 24);
    const i64 g = std::gcd(nu < 0 ? -nu : nu, i64{24});
    return std::to_string(nu / g) + "/" + std::to_string(24 / g);
}

int cmd_expand(const std::string& expr, std::size_t precision, std::optional<u32> modulus, bool integral_only,
               std::optional<u64> level, const global_flags& g) {
    const auto eq = parse_eta_quotient(expr, level);
    auto print = [&](const auto& s) {
        if (integral_only) {
            for (std::size_t n = 0; n < s.precision(); ++n) std::cout << (n ? ", " : "") << s[n];
            std::cout << "\n";
            return;
        }
        std::cout << "eta quotient: " << eq.to_string() << " (level " << eq.level() << ")\n";
        std::cout << "leading exponent: " << offset_string(s.offset24()) << " (offset24 = " << s.offset24() << ")\n";
        std::cout << "integral part: " << format(s.shifted24(-s.offset24()), precision) << "\n";
    };
    if (modulus) print(eta_quotient_series(eq, precision, *modulus, series_opts(g)));
    else print(eta_quotient_series_exact(eq, precision));
    return ok;
}

int cmd_meta(const std::string& expr, std::optional<u64> level) {
    const auto eq = parse_eta_quotient(expr, level);
    std::cout << "eta quotient: " << eq.to_string() << "\n";
    std::cout << "level: " << eq.level() << "\n";
    std::optional<form_meta> meta;
    try {
        meta = gordon_hughes_meta(eq);
    } catch (const eta_condition_error& e) {
        std::cout << "modularity conditions: FAILED (" << e.what() << ")\n";
    }
    const auto cls = meta ? meta->cusps : classify(eq);
    if (meta) {
        std::cout << "modularity conditions: hold\n";
        std::cout << "weight: " << meta->weight << "\n";
        std::cout << "character: (" << meta->character << " | n)" << (meta->character == 1 ? " (trivial)" : "") << "\n";
    }
    std::cout << "classification: " << to_string(cls.kind) << "\n";
    std::cout << "cusp orders:\n";
    for (const auto& [c, ord] : cls.cusp_orders) {
        std::cout << "  1/" << c.d << ": " << rational_string(ord) << "\n";
    }
    if (meta) std::cout << "sturm bound: " << sturm_bound(static_cast<u64>(std::max<i64>(meta->weight, 1)), eq.level()) << "\n";
    return meta ? ok : math_failure;
}

int cmd_certify(u32 m, u64 l, bool extended, const std::string& json_path, const global_flags& g) {
    if (m < 5 || !is_prime(m)) {
        std::cerr << "error: -m must be a prime >= 5\n";
        return usage;
    }
    if (!is_prime(l) || (30 * u64{m}) % l == 0) {
        std::cerr << "error: l = " << l << " is not an admissible prime (l must be prime and not divide 30m)\n";
        return usage;
    }
    certify_options opts;
    opts.max_b5_terms = extended ? extended_b5_terms : certify_options{}.max_b5_terms;
    opts.series = series_opts(g);
    opts.provider = make_provider(g);
    certificate_document doc;
    doc.certificate = certify_pair(m, l, opts);
    const auto& c = doc.certificate;

    std::cout << "m = " << m << ", l = " << l << ": " << to_string(c.status) << "\n";
    std::cout << "  space: S_" << c.weight << "(Gamma0(" << c.level << "), (" << c.character << "|.)), Sturm bound "
              << c.sturm_bound << "\n";
    std::cout << "  coefficients checked: " << c.coefficients_checked << "\n";
    if (c.first_nonzero) {
        std::cout << "  first nonzero: index " << c.first_nonzero->index << ", residue " << c.first_nonzero->residue << "\n";
    }
    if (c.status == certificate_status::insufficient_precision) {
        std::cout << "  needs " << c.required_precision << " b5 terms, cap is " << opts.max_b5_terms
                  << (extended ? "" : " (use --extended to raise it)") << "\n";
    }
    if (!c.progressions.empty()) {
        std::cout << "  progressions: " << c.progressions.size() << " with A = " << c.progressions.front().A << "\n";
        const std::size_t shown = std::min<std::size_t>(c.progressions.size(), 5);
        for (std::size_t i = 0; i < shown; ++i) {
            std::cout << "    b5(" << c.progressions[i].A << "n + " << c.progressions[i].B << ") = 0 (mod " << m << ")\n";
        }
        if (shown < c.progressions.size()) std::cout << "    ...\n";
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "error: cannot write " << json_path << "\n";
            return usage;
        }
        out << serialize(doc) << "\n";
    }
    switch (c.status) {
        case certificate_status::certified: return ok;
        case certificate_status::failed: return math_failure;
        case certificate_status::insufficient_precision: return resource;
    }
    return math_failure;
}

int cmd_check(u64 A, u64 B, u32 m, u64 n_max, const global_flags& g) {
    if (A < 1 || m < 2 || !is_prime(m) || m > zp::max_modulus) {
        std::cerr << "error: need A >= 1 and a prime modulus\n";
        return usage;
    }
    const u128 need = u128{A} * n_max + B + 1;
    constexpr u64 cap = 64'000'000;
    if (need > cap) {
        std::cerr << "error: needs " << static_cast<u64>(need) << " series terms, cap is " << cap << "\n";
        return resource;
    }
    const auto provider = make_provider(g);
    const auto b5 = (provider && m < 256) ? provider(static_cast<std::size_t>(need), m)
                                          : bk_series(5, static_cast<std::size_t>(need), m, series_opts(g));
    const auto r = check_progression(A, B, m, n_max, b5);
    std::cout << "b5(" << A << "n + " << B << ") mod " << m << ", n = 0.." << n_max << ": ";
    if (r.all_zero) {
        std::cout << "all_zero (" << r.n_checked << " checked)\n";
        return ok;
    }
    std::cout << "violation at n = " << *r.first_violation << " (b5(" << A * *r.first_violation + B
              << ") = " << b5[A * *r.first_violation + B] << " mod " << m << ")\n";
    return math_failure;
}

int cmd_scan_l(u32 m, u64 l_max, bool serre, u64 prefilter, const global_flags& g) {
    if (m < 5 || !is_prime(m)) {
        std::cerr << "error: -m must be a prime >= 5\n";
        return usage;
    }
    certify_options opts;
    opts.series = series_opts(g);
    opts.provider = make_provider(g);
    scan_options sopts;
    sopts.serre_only = serre;
    sopts.prefilter_bound = prefilter;
    const auto found = scan_l(m, l_max, sopts, opts);
    std::cout << "m = " << m << ", primes l <= " << l_max << ": " << found.size() << " certified\n";
    for (const auto& e : found) {
        const auto& p = e.certificate.progressions.front();
        std::cout << "  l = " << e.l << "  (e.g. b5(" << p.A << "n + " << p.B << ") = 0 mod " << m << ")\n";
    }
    return ok;
}

std::optional<std::pair<u32, u32>> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    auto num = [](std::string_view v) -> std::optional<u32> {
        u32 x = 0;
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc{} || p != v.data() + v.size()) return std::nullopt;
        return x;
    };
    if (dots == std::string::npos) {
        auto a = num(s);
        if (!a) return std::nullopt;
        return std::make_pair(*a, *a);
    }
    auto a = num(std::string_view(s).substr(0, dots));
    auto b = num(std::string_view(s).substr(dots + 2));
    if (!a || !b || *a > *b) return std::nullopt;
    return std::make_pair(*a, *b);
}

int cmd_scan_criterion(const std::string& range, const global_flags& g) {
    const auto r = parse_range(range);
    if (!r) {
        std::cerr << "error: range must look like 7..40\n";
        return usage;
    }
    certify_options opts;
    opts.series = series_opts(g);
    opts.provider = make_provider(g);
    bool all_found = true;
    std::cout << "m\tfound\tk\te\n";
    for (u32 m = std::max<u32>(r->first, 5); m <= r->second; ++m) {
        if (!is_prime(m)) continue;
        const auto res = criterion_scan(m, opts);
        all_found = all_found && res.found;
        std::cout << m << "\t" << (res.found ? "true" : "false") << "\t" << (res.k ? std::to_string(*res.k) : "-") << "\t"
                  << (res.e ? std::to_string(*res.e) : "-");
        if (res.discrepancy_k) std::cout << "\t(first nonzero at k = " << *res.discrepancy_k << " >= 10(m-1))";
        std::cout << "\n";
    }
    return all_found ? ok : math_failure;
}

int cmd_bk(u64 k, std::size_t precision, std::optional<u32> modulus, const global_flags& g) {
    if (k < 2 || precision == 0) {
        std::cerr << "error: need k > 1 and precision >= 1\n";
        return usage;
    }
    auto print = [](const auto& s) {
        for (std::size_t n = 0; n < s.precision(); ++n) std::cout << (n ? ", " : "") << s[n];
        std::cout << "\n";
    };
    if (!modulus) {
        print(bk_series_exact(k, precision));
    } else if (!g.no_cache && *modulus < 256) {
        print(cache::series_cache(cache::default_directory(), series_opts(g)).get(k, *modulus, precision));
    } else {
        print(bk_series(k, precision, *modulus, series_opts(g)));
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regulus: q-series, eta quotients and Sturm-certified congruences for 5-regular partitions"};
    app.require_subcommand(1);
    global_flags g;
    app.add_flag("--no-cache", g.no_cache, "Recompute series instead of using the disk cache");
    app.add_option("--threads", g.threads, "Worker threads for series solves")->check(CLI::Range(1u, 256u));

    std::string expr;
    std::size_t precision = 20;
    std::optional<u32> modulus;
    std::optional<u64> level;
    bool integral_only = false;
    auto* expand = app.add_subcommand("expand", "Expand an eta quotient");
    expand->add_option("expression", expr, "e.g. \"eta(5z)^4 * eta(z)^4\"")->required();
    expand->add_option("-p,--precision", precision, "Number of coefficients")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 26));
    expand->add_option("-m,--modulus", modulus, "Reduce modulo this prime");
    expand->add_option("--level", level, "Level N (default: lcm of the dilations)");
    expand->add_flag("--integral-part", integral_only, "Print only the integral-part coefficients");

    auto* meta = app.add_subcommand("meta", "Modularity data of an eta quotient");
    meta->add_option("expression", expr)->required();
    meta->add_option("--level", level, "Level N (default: lcm of the dilations)");

    u32 m = 0;
    u64 l = 0;
    bool extended = false;
    std::string json_path;
    auto* certify = app.add_subcommand("certify", "Certify F_m | T(l) = 0 (mod m) up to the Sturm bound");
    certify->add_option("-m,--modulus", m)->required();
    certify->add_option("-l,--prime", l)->required();
    certify->add_flag("--extended", extended, "Raise the series memory cap (needed for l in the thousands)");
    certify->add_option("--json", json_path, "Write the certificate document here");

    u64 A = 0, B = 0, n_max = 0;
    auto* check = app.add_subcommand("check", "Check b5(An + B) = 0 (mod m) for n = 0..n_max");
    check->add_option("-A", A)->required();
    check->add_option("-B", B)->required();
    check->add_option("-m,--modulus", m)->required();
    check->add_option("-n,--n-max", n_max)->required();

    u64 l_max = 0, prefilter = 60;
    bool serre = false;
    auto* scanl = app.add_subcommand("scan-l", "Search primes l with a certified T(l) congruence");
    scanl->add_option("-m,--modulus", m)->required();
    scanl->add_option("--l-max", l_max)->required();
    scanl->add_option("--prefilter", prefilter, "Coefficients screened before full certification");
    scanl->add_flag("--serre", serre, "Only l = -1 (mod 180m)");

    std::string range;
    auto* scanc = app.add_subcommand("scan-criterion", "Residue-class criterion for each prime m in a range");
    scanc->add_option("range", range, "e.g. 7..40")->required();

    u64 k = 5;
    auto* bk = app.add_subcommand("bk", "Coefficients of the k-regular partition series");
    bk->add_option("-k", k, "k > 1");
    bk->add_option("-p,--precision", precision, "Number of coefficients");
    bk->add_option("-m,--modulus", modulus, "Reduce modulo this prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*expand) return cmd_expand(expr, precision, modulus, integral_only, level, g);
        if (*meta) return cmd_meta(expr, level);
        if (*certify) return cmd_certify(m, l, extended, json_path, g);
        if (*check) return cmd_check(A, B, m, n_max, g);
        if (*scanl) return cmd_scan_l(m, l_max, serre, prefilter, g);
        if (*scanc) return cmd_scan_criterion(range, g);
        if (*bk) return cmd_bk(k, precision, modulus, g);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    } catch (const resource_limit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return resource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return math_failure;
    }
    return usage;
}
