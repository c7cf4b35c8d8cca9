#include <gtest/gtest.h>

#include <random>

#include <regulus/etaforms.hpp>

using namespace regulus;

namespace {

// Sturm bound from the formula in floating point, as an independent check.
u64 sturm_float(u64 k, u64 N) {
    long double v = static_cast<long double>(k) * N / 12.0L;
    for (u64 p = 2; p <= N; ++p) {
        bool prime = true;
        for (u64 q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
        if (prime && N % p == 0) v *= 1.0L + 1.0L / p;
    }
    return static_cast<u64>(v + 1e-9L);
}

}  // namespace

TEST(GordonHughes, WeightFourLevelFive) {
    const eta_quotient eq(5, {{1, 4}, {5, 4}});
    const auto meta = gordon_hughes_meta(eq);
    EXPECT_EQ(meta.weight, 4);
    EXPECT_EQ(meta.level, 5u);
    EXPECT_EQ(meta.character, 1);  // 5^4 is a square
    EXPECT_TRUE(meta.is_cusp_form());
    for (i64 n = 1; n < 200; ++n) {
        if (n % 5 != 0) EXPECT_EQ(character_eval(meta.character, n), 1) << n;
    }
}

TEST(GordonHughes, ReducedQuotientForSeven) {
    const eta_quotient eq(5, {{5, 29}, {1, -1}});
    EXPECT_EQ(eq.offset24(), 144);
    const auto meta = gordon_hughes_meta(eq);
    EXPECT_EQ(meta.weight, 14);
    EXPECT_EQ(meta.character, 5);
    EXPECT_TRUE(meta.is_cusp_form());
}

TEST(GordonHughes, EtaAloneFails) {
    try {
        gordon_hughes_meta(eta_quotient(1, {{1, 1}}));
        FAIL() << "expected a condition failure";
    } catch (const eta_condition_error& e) {
        EXPECT_EQ(e.which, eta_condition::sum_delta_r);
    }
}

TEST(GordonHughes, IdentifiesEachCondition) {
    try {
        gordon_hughes_meta(eta_quotient(6, {{6, 4}}));  // 24, 4
        FAIL();
    } catch (const eta_condition_error& e) {
        EXPECT_EQ(e.which, eta_condition::sum_level_over_delta_r);
    }
    try {
        gordon_hughes_meta(eta_quotient(2, {{1, 16}, {2, 4}}));  // 24, 36
        FAIL();
    } catch (const eta_condition_error& e) {
        EXPECT_EQ(e.which, eta_condition::sum_level_over_delta_r);
    }
    EXPECT_NO_THROW(gordon_hughes_meta(eta_quotient(2, {{1, 8}, {2, 8}})));
    EXPECT_NO_THROW(gordon_hughes_meta(eta_quotient(3, {{1, 15}, {3, 3}})));
    try {
        gordon_hughes_meta(eta_quotient(4, {{1, 2}, {2, 7}, {4, 2}}));  // 24, 24, odd sum
        FAIL();
    } catch (const eta_condition_error& e) {
        EXPECT_EQ(e.which, eta_condition::integral_weight);
    }
}

TEST(GordonHughes, OddExponentSum) {
    // every solution in a box at N = 4 must be rejected on the weight
    bool found = false;
    for (i64 a = -24; a <= 24; ++a) {
        for (i64 b = -24; b <= 24; ++b) {
            for (i64 c = -24; c <= 24; ++c) {
                if (a == 0 || b == 0 || c == 0) continue;
                const i64 s1 = a + 2 * b + 4 * c, s2 = 4 * a + 2 * b + c;
                if (s1 % 24 == 0 && s2 % 24 == 0 && (a + b + c) % 2 != 0) {
                    found = true;
                    try {
                        gordon_hughes_meta(eta_quotient(4, {{1, a}, {2, b}, {4, c}}));
                        FAIL();
                    } catch (const eta_condition_error& e) {
                        EXPECT_EQ(e.which, eta_condition::integral_weight);
                    }
                }
            }
        }
    }
    EXPECT_TRUE(found);
}

TEST(CharacterEval, ChiFive) {
    EXPECT_EQ(character_eval(5, 2), -1);
    EXPECT_EQ(character_eval(5, 4), 1);
    EXPECT_EQ(character_eval(5, 3), -1);
    EXPECT_EQ(character_eval(5, 1), 1);
    EXPECT_EQ(character_eval(5, 10), 0);
    for (i64 n = 1; n < 100; ++n) {
        if (std::gcd(n, i64{36}) == 1) EXPECT_EQ(character_eval(1, n), 1);
    }
}

TEST(CharacterDescriptor, SquareFactorsIgnored) {
    // raising an exponent by 2 keeps the squarefree part
    const eta_quotient base(30, {{1, 3}, {2, 1}, {15, -1}});
    const i64 d0 = character_descriptor(base, 0);
    const eta_quotient bumped(30, {{1, 5}, {2, 1}, {15, -1}});
    EXPECT_EQ(std::abs(character_descriptor(bumped, 0)), std::abs(d0));
    EXPECT_EQ(std::abs(d0), 30);
}

TEST(CuspOrder, WeightFourLevelFive) {
    const eta_quotient eq(5, {{1, 4}, {5, 4}});
    EXPECT_EQ(cusp_order(eq, {1, 5}), rational(1));
    EXPECT_EQ(cusp_order(eq, {1, 1}), rational(1));
    EXPECT_THROW(cusp_order(eq, {1, 2}), std::invalid_argument);
}

TEST(CuspOrder, IndependentOfNumerator) {
    const eta_quotient eq(180, {{6, 4}, {30, 4}, {1, -2}, {9, 2}});
    for (u64 d : divisors(180)) {
        const rational base = cusp_order(eq, {1, d});
        for (i64 c = 1; c < 40; ++c) {
            if (std::gcd(c, static_cast<i64>(d)) == 1) EXPECT_EQ(cusp_order(eq, {c, d}), base);
        }
    }
}

TEST(CuspOrder, InfinityMatchesLeadingExponent) {
    std::mt19937_64 rng(3);
    const u64 N = 60;
    const auto divs = divisors(N);
    for (int trial = 0; trial < 200; ++trial) {
        eta_quotient::exponent_map e;
        for (int i = 0; i < 3; ++i) e[divs[rng() % divs.size()]] += static_cast<i64>(rng() % 21) - 10;
        std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
        if (e.empty()) continue;
        const eta_quotient eq(N, e);
        EXPECT_EQ(cusp_order(eq, {1, N}), rational(eq.offset24(), 24));
    }
}

TEST(CuspOrder, DiscriminantForm) {
    const eta_quotient delta(1, {{1, 24}});
    const auto meta = gordon_hughes_meta(delta);
    EXPECT_EQ(meta.weight, 12);
    EXPECT_EQ(cusp_order(delta, {1, 1}), rational(1));
    EXPECT_TRUE(meta.is_cusp_form());
}

TEST(Classify, LevelFiveAndLevel180Forms) {
    EXPECT_EQ(classify(eta_quotient(5, {{1, 4}, {5, 4}})).kind, form_class::cusp_form);

    const eta_quotient level180(180, {{6, 4}});
    const auto meta = gordon_hughes_meta(level180);
    EXPECT_EQ(meta.weight, 2);
    EXPECT_EQ(meta.cusps.kind, form_class::cusp_form);
    EXPECT_EQ(meta.character, 1);

    const eta_quotient other(180, {{30, 4}, {6, 0}});
    EXPECT_EQ(classify(other).kind, form_class::cusp_form);
}

TEST(Classify, GeneratingQuotientIsNotHolomorphic) {
    const eta_quotient eq(5, {{1, -1}, {5, 1}});
    const auto cls = classify(eq);
    EXPECT_EQ(cls.kind, form_class::not_holomorphic);
    ASSERT_EQ(cls.cusp_orders.size(), 2u);
    EXPECT_EQ(cls.cusp_orders[0].second, rational(-1, 6));  // d = 1
    EXPECT_EQ(cls.cusp_orders[1].second, rational(1, 6));   // d = 5
}

TEST(Classify, HolomorphicButNotCusp) {
    // theta(z)^4, weight 2 on Gamma0(4): vanishes only at the middle cusp
    const eta_quotient eq(4, {{2, 20}, {1, -8}, {4, -8}});
    const auto meta = gordon_hughes_meta(eq);
    EXPECT_EQ(meta.weight, 2);
    EXPECT_EQ(meta.cusps.kind, form_class::holomorphic_form);
}

TEST(SturmBound, Values) {
    EXPECT_EQ(sturm_bound(4, 5), 2u);
    EXPECT_EQ(sturm_bound(12, 180), 432u);
    EXPECT_EQ(sturm_bound(12, 1), 1u);
    for (u64 m : {7u, 11u, 13u}) EXPECT_EQ(sturm_bound(2 * m - 2, 180), 36 * (2 * m - 2));
    EXPECT_THROW(sturm_bound(0, 5), std::invalid_argument);
}

TEST(SturmBound, MatchesFloatingFormulaAndIsMonotone) {
    for (u64 N = 1; N <= 200; ++N) {
        for (u64 k = 1; k <= 30; ++k) {
            EXPECT_EQ(sturm_bound(k, N), sturm_float(k, N)) << k << " " << N;
            EXPECT_LE(sturm_bound(k, N), sturm_bound(k + 1, N));
        }
    }
    // monotone in N along divisibility chains
    for (u64 k = 1; k <= 30; ++k) {
        for (u64 N = 1; N <= 100; ++N) EXPECT_LE(sturm_bound(k, N), sturm_bound(k, 2 * N));
    }
}

TEST(GordonHughes, DoublingExponentsDoublesWeight) {
    std::mt19937_64 rng(5);
    const u64 N = 180;
    const auto divs = divisors(N);
    int checked = 0;
    for (int trial = 0; trial < 5000 && checked < 50; ++trial) {
        eta_quotient::exponent_map e;
        for (int i = 0; i < 3; ++i) e[divs[rng() % divs.size()]] += static_cast<i64>(rng() % 13) - 6;
        std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
        if (e.empty()) continue;
        form_meta meta;
        try {
            meta = gordon_hughes_meta(eta_quotient(N, e));
        } catch (const eta_condition_error&) {
            continue;
        }
        auto doubled = e;
        for (auto& [d, r] : doubled) r *= 2;
        const auto meta2 = gordon_hughes_meta(eta_quotient(N, doubled));
        EXPECT_EQ(meta2.weight, 2 * meta.weight);
        ++checked;
    }
    EXPECT_GT(checked, 10);
}
