#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <regulus/certify.hpp>
#include <regulus/oracle.hpp>

using namespace regulus;

namespace {

bool has_l(const std::vector<scan_entry>& v, u64 l) {
    return std::any_of(v.begin(), v.end(), [&](const scan_entry& e) { return e.l == l; });
}

// F_m | T(l) at weight 2m - 2 recomputed to `precision` terms.
qseries image_to(u32 m, u64 l, std::size_t precision) {
    const auto F = build_Fm(m, l * (precision - 1) + 1);
    return hecke_T(F, l, 2 * static_cast<i64>(m) - 2, 5);
}

}  // namespace

TEST(Certify, SevenSeventeen) {
    const auto c = certify_pair(7, 17);
    EXPECT_EQ(c.status, certificate_status::certified);
    EXPECT_EQ(c.sturm_bound, 432u);
    EXPECT_EQ(c.weight, 12);
    EXPECT_EQ(c.level, 180u);
    EXPECT_EQ(c.character, 5);
    EXPECT_EQ(c.coefficients_checked, 433u);
    EXPECT_FALSE(c.first_nonzero);
    ASSERT_EQ(c.progressions.size(), 16u);
    EXPECT_EQ(c.progressions.front(), (progression{2023, 99, 7}));
    EXPECT_EQ(c.required_precision, b5_precision_for_Fm(7, 17 * 432 + 1));
    ASSERT_FALSE(c.timings.empty());
    EXPECT_EQ(c.timings.front().first, "b5_series");
}

TEST(Certify, ElevenFortyOne) {
    const auto c = certify_pair(11, 41);
    EXPECT_EQ(c.status, certificate_status::certified);
    EXPECT_EQ(c.sturm_bound, 720u);
    EXPECT_EQ(c.weight, 20);
    ASSERT_EQ(c.progressions.size(), 40u);
    EXPECT_EQ(c.progressions.front(), (progression{18491, 75, 11}));
}

TEST(Certify, SevenElevenOutcomeIsDecided) {
    const auto c = certify_pair(7, 11);
    ASSERT_NE(c.status, certificate_status::insufficient_precision);
    const auto img = image_to(7, 11, 433);
    const auto first = img.first_nonzero();
    if (c.certified()) {
        EXPECT_FALSE(first);
    } else {
        ASSERT_TRUE(c.first_nonzero);
        ASSERT_TRUE(first);
        EXPECT_EQ(c.first_nonzero->index, *first);
        EXPECT_EQ(c.first_nonzero->residue, img[*first]);
        EXPECT_TRUE(c.progressions.empty());
    }
}

TEST(Certify, ThirteenLargePrimeNeedsExtendedCap) {
    const auto c = certify_pair(13, 16519);
    EXPECT_EQ(c.status, certificate_status::insufficient_precision);
    EXPECT_EQ(c.sturm_bound, 864u);
    EXPECT_GT(c.required_precision, certify_options{}.max_b5_terms);
    EXPECT_LE(c.required_precision, extended_b5_terms);
    EXPECT_EQ(c.coefficients_checked, 0u);
}

TEST(Certify, ModFiveIsIdenticallyZero) {
    for (u64 l : {7u, 11u, 13u, 17u}) {
        const auto c = certify_pair(5, l);
        EXPECT_TRUE(c.certified()) << l;
        EXPECT_EQ(c.weight, 8);
    }
}

TEST(Certify, RejectsInadmissible) {
    for (u64 l : {2u, 3u, 5u, 7u, 4u, 1u, 0u}) EXPECT_THROW(certify_pair(7, l), std::invalid_argument) << l;
    EXPECT_THROW(certify_pair(9, 17), std::invalid_argument);
    EXPECT_THROW(certify_pair(3, 17), std::invalid_argument);
    EXPECT_THROW(derive_progressions(11, 11), std::invalid_argument);
}

TEST(Certify, VanishingExtendsPastTheBound) {
    // a Sturm certificate predicts zeros well beyond the checked range
    for (auto [m, l] : std::vector<std::pair<u32, u64>>{{7, 17}, {11, 41}}) {
        ASSERT_TRUE(certify_pair(m, l).certified());
        const std::size_t P = 3 * certificate_sturm_bound(m);
        EXPECT_TRUE(image_to(m, l, P).is_zero()) << m << " " << l;
    }
}

TEST(Certify, ProgressionsHoldOnSampledIndices) {
    const auto c = certify_pair(7, 17);
    ASSERT_TRUE(c.certified());
    const u64 A = c.progressions.front().A;
    const u64 n_max = 60;
    const auto b5 = bk_series(5, A * (n_max + 1), 7u);
    for (const auto& p : c.progressions) {
        EXPECT_TRUE(check_progression(p.A, p.B, 7, n_max, b5).all_zero) << p.B;
    }
    // the excluded class t* = 2 starts at b5(337), the image of a(17^2) = -(5|17) 17^11 a(1) != 0 (mod 7)
    EXPECT_EQ((u64{7} * 17 * 17 - 1) / 6, 337u);
    EXPECT_NE(b5[337], 0u);
}

TEST(DeriveProgressions, IndexAlgebra) {
    for (auto [m, l] : std::vector<std::pair<u32, u64>>{{7, 17}, {11, 41}, {13, 16519}, {7, 11}, {5, 7}, {23, 29}}) {
        const auto ps = derive_progressions(m, l);
        const u64 ml = u64{m} * l;
        ASSERT_EQ(ps.size(), l - 1);
        std::vector<u64> residues;
        for (const auto& p : ps) {
            EXPECT_EQ(p.A, ml * l);
            EXPECT_EQ(p.m, m);
            const u128 six_b = u128{6} * p.B + 1;
            ASSERT_EQ(six_b % ml, 0u);
            const u64 N = static_cast<u64>(six_b / ml);  // F_m index is l N with l not dividing N
            EXPECT_NE(N % l, 0u);
            EXPECT_LT(p.B, p.A);
            residues.push_back(N % l);
        }
        std::sort(residues.begin(), residues.end());
        EXPECT_EQ(std::unique(residues.begin(), residues.end()), residues.end());
    }
    EXPECT_EQ(derive_progressions(13, 16519).front(), (progression{3547405693ull, 35791, 13}));
}

TEST(Certify, CustomProviderGivesSameCertificate) {
    int calls = 0;
    certify_options opts;
    opts.provider = [&](std::size_t P, u32 m) {
        ++calls;
        return bk_series(5, P + 10, m);
    };
    auto a = certify_pair(7, 17, opts);
    auto b = certify_pair(7, 17);
    EXPECT_EQ(calls, 1);
    a.timings.clear();
    b.timings.clear();
    EXPECT_EQ(a, b);

    opts.provider = [](std::size_t P, u32 m) { return bk_series(5, P - 1, m); };
    EXPECT_THROW(certify_pair(7, 17, opts), std::logic_error);
}

TEST(Criterion, ModFiveHasNoWitness) {
    const auto r = criterion_scan(5);
    EXPECT_FALSE(r.found);
    EXPECT_FALSE(r.discrepancy_k);
}

TEST(Criterion, SevenAtZero) {
    const auto r = criterion_scan(7);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(*r.k, 0u);
    EXPECT_EQ(*r.e, oracle::b5_value(8) % 7);
    EXPECT_EQ(*r.e, 5u);
}

TEST(Criterion, AllPrimesSevenToThirtySeven) {
    for (u32 m : {7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        const auto r = criterion_scan(m);
        EXPECT_TRUE(r.found) << m;
        ASSERT_TRUE(r.k);
        EXPECT_LT(*r.k, 10u * (m - 1));
        const u64 base = (u64{m} * m - 1) / 6;
        const auto b5 = bk_series(5, m * *r.k + base + 1, m);
        EXPECT_EQ(b5[m * *r.k + base], *r.e);
        for (u64 k = 0; k < *r.k; ++k) EXPECT_EQ(b5[m * k + base], 0u) << m << " " << k;
    }
}

TEST(ScanL, FindsKnownPrimes) {
    const auto s7 = scan_l(7, 20);
    EXPECT_TRUE(has_l(s7, 17));
    for (const auto& e : s7) {
        EXPECT_TRUE(e.certificate.certified());
        EXPECT_EQ(e.certificate, [&] {
            auto c = certify_pair(7, e.l);
            c.timings = e.certificate.timings;
            return c;
        }());
    }
    EXPECT_TRUE(has_l(scan_l(11, 50), 41));
}

TEST(ScanL, OnlyCertifiedAndAdmissible) {
    for (const auto& e : scan_l(7, 13)) {
        EXPECT_TRUE(e.certificate.certified());
        EXPECT_NE(210 % e.l, 0u);
    }
    // the prefilter never discards a prime that certifies
    const auto loose = scan_l(7, 40, scan_options{0, false});
    const auto tight = scan_l(7, 40);
    ASSERT_EQ(loose.size(), tight.size());
    for (std::size_t i = 0; i < loose.size(); ++i) EXPECT_EQ(loose[i].l, tight[i].l);
    EXPECT_TRUE(scan_l(7, 100, scan_options{60, true}).empty());  // no l = -1 (mod 1260) below 100
}

TEST(EtaFactorization, QuotientIsHolomorphic) {
    for (u32 m : {7u, 11u}) {
        const auto r = verify_eta_factorization(m, 300);
        EXPECT_TRUE(r.ok) << m << ": " << r.diagnostic;
        EXPECT_GE(r.g.precision(), 250u);
    }
}

TEST(EtaFactorization, DivisionByItself) {
    const zp ring(7);
    const auto d = eta_quotient_series(eta_quotient(5, {{1, 4}, {5, 4}}), 200, ring);
    EXPECT_EQ(divide(d, d).normalized(), qseries::one(ring, 200));
}
