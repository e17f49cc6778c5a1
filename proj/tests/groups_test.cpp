// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spaceform/error.hpp"
#include "spaceform/groups.hpp"
#include "spaceform/number_theory.hpp"

using namespace spaceform;
using oracle::u64;

namespace {

ErrorCode code_of(std::int64_t m, std::int64_t n, std::int64_t r) {
    try {
        validate_type1(m, n, r);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error for " << m << " " << n << " " << r;
    return ErrorCode::InvalidArgument;
}

// Every valid (m, n, r) with m n <= limit.
std::vector<TypeIParams> small_groups(u64 limit, bool fpf_only) {
    std::vector<TypeIParams> out;
    for (u64 m = 1; m <= limit; m += 2) {
        for (u64 n = 1; m * n <= limit; ++n) {
            for (u64 r = 0; r < std::max<u64>(m, 1); ++r) {
                if (m == 1 && r > 0) break;
                try {
                    const auto g = validate_type1(m, n, r);
                    if (!fpf_only || is_fixed_point_free(g)) out.push_back(g);
                } catch (const Error&) {
                }
            }
        }
    }
    return out;
}

}  // namespace

TEST(Validate, KnownGroups) {
    const auto g = validate_type1(85, 16, 2);
    EXPECT_EQ(g.d, 8u);
    EXPECT_EQ(g.order(), 1360u);
    const auto cyclic = validate_type1(1, 12, 0);
    EXPECT_EQ(cyclic.d, 1u);
    EXPECT_EQ(cyclic.r, 0u);
    EXPECT_TRUE(cyclic.is_cyclic());
    EXPECT_EQ(validate_type1(5, 4, 4).d, 2u);
    EXPECT_EQ(validate_type1(85, 16, 2 + 85).r, 2u);
}

TEST(Validate, Errors) {
    EXPECT_EQ(code_of(4, 2, 3), ErrorCode::EvenM);
    EXPECT_EQ(code_of(5, 4, 1), ErrorCode::CoprimalityViolation);
    EXPECT_EQ(code_of(5, 5, 4), ErrorCode::CoprimalityViolation);
    EXPECT_EQ(code_of(85, 8, 3), ErrorCode::OrderViolation);
    EXPECT_EQ(code_of(0, 4, 0), ErrorCode::InvalidArgument);
}

TEST(Validate, AgreesWithDefinition) {
    for (u64 m = 3; m < 60; m += 2) {
        for (u64 n = 1; n < 40; ++n) {
            for (u64 r = 0; r < m; ++r) {
                const bool valid = std::gcd(oracle::mul((r + m - 1) % m, n % m, m), m) == 1 &&
                                   oracle::pow_loop(r, n, m) == 1;
                bool accepted = true;
                try {
                    const auto g = validate_type1(m, n, r);
                    EXPECT_EQ(g.d, oracle::order_loop(r, m));
                    EXPECT_EQ(n % g.d, 0u);
                } catch (const Error&) {
                    accepted = false;
                }
                EXPECT_EQ(accepted, valid) << m << " " << n << " " << r;
            }
        }
    }
}

TEST(FixedPointFree, Examples) {
    EXPECT_TRUE(is_fixed_point_free(validate_type1(85, 16, 2)));
    EXPECT_TRUE(is_fixed_point_free(validate_type1(1, 9, 0)));
    EXPECT_FALSE(is_fixed_point_free(validate_type1(5, 2, 4)));
    for (const auto& g : small_groups(400, false)) EXPECT_EQ(is_fixed_point_free(g), oracle::fixed_point_free(g.n, g.d));
}

TEST(Multiply, Relations) {
    const auto g = validate_type1(5, 4, 4);
    EXPECT_EQ(multiply(generator_b(g), generator_a(g)), make_element(g, 4, 1));
    const auto h = validate_type1(85, 16, 2);
    const auto ab = make_element(h, 1, 1);
    EXPECT_EQ(multiply(ab, ab), make_element(h, 3, 2));
    EXPECT_EQ(power(ab, 2), make_element(h, 3, 2));
    EXPECT_EQ(multiply(identity(h), ab), ab);
    EXPECT_THROW(multiply(ab, generator_a(g)), Error);
}

TEST(Multiply, AssociativeAndMatchesOracle) {
    std::mt19937_64 rng(7);
    for (const auto& g : small_groups(300, false)) {
        for (int i = 0; i < 20; ++i) {
            const auto x = element_at(g, rng() % g.order());
            const auto y = element_at(g, rng() % g.order());
            const auto z = element_at(g, rng() % g.order());
            EXPECT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
            const auto o = oracle::multiply(g, {x.a, x.b}, {y.a, y.b});
            const auto xy = multiply(x, y);
            EXPECT_EQ(xy.a, o.a);
            EXPECT_EQ(xy.b, o.b);
        }
    }
}

TEST(Power, ClosedFormEqualsRepeatedProduct) {
    for (const auto& g : small_groups(500, false)) {
        if (g.order() > 60 && g.m != 1 && g.order() % 7 != 0) continue;  // keep the sweep short
        for (u64 idx = 0; idx < g.order(); ++idx) {
            const auto x = element_at(g, idx);
            auto acc = identity(g);
            for (u64 k = 0; k <= g.order(); ++k) {
                ASSERT_EQ(power(x, k), acc) << to_string(g) << " idx " << idx << " k " << k;
                acc = multiply(acc, x);
            }
        }
    }
}

TEST(Power, ClaimedOrders) {
    for (const auto& g : small_groups(2000, true)) {
        if (g.is_cyclic()) continue;
        for (u64 c : nt::divisors(g.d)) {
            const u64 u = std::gcd(nt::powmod(g.r, c, g.m) + g.m - 1, g.m);
            const auto x = make_element(g, 1, static_cast<std::int64_t>(c));
            EXPECT_EQ(power(x, u * g.n / c), identity(g));
            EXPECT_EQ(element_order(x), u * g.n / c) << to_string(g) << " c " << c;
        }
        EXPECT_EQ(element_order(make_element(g, 1, static_cast<std::int64_t>(g.d))), g.order() / g.d);
    }
}

TEST(ElementOrder, Examples) {
    const auto g = validate_type1(85, 16, 2);
    EXPECT_EQ(element_order(generator_a(g)), 85u);
    EXPECT_EQ(element_order(generator_b(g)), 16u);
    // gcd(2^2 - 1, 85) = 1, so A B^2 has order 1 * 16 / 2.
    EXPECT_EQ(element_order(make_element(g, 1, 2)), 8u);
    EXPECT_EQ(oracle::element_order(g, {1, 2}), 8u);
    EXPECT_EQ(element_order(make_element(g, 1, 4)), 5u * 16 / 4);  // gcd(15, 85) = 5
}

TEST(ElementOrder, MatchesNaivePowering) {
    for (const auto& g : small_groups(600, false)) {
        const auto table = oracle::r_powers(g);
        for (u64 idx = 0; idx < g.order(); ++idx) {
            const auto x = element_at(g, idx);
            ASSERT_EQ(element_order(x), oracle::element_order(g, {x.a, x.b}, table)) << to_string(g) << " " << idx;
        }
    }
}

TEST(OrderSet, Examples) {
    EXPECT_EQ(order_set_formula(validate_type1(5, 4, 4)), (OrderSet{1, 2, 4, 5, 10}));
    EXPECT_EQ(order_set_bruteforce(validate_type1(5, 4, 4)), (OrderSet{1, 2, 4, 5, 10}));
    EXPECT_EQ(order_set_formula(validate_type1(1, 6, 0)), (OrderSet{1, 2, 3, 6}));
    EXPECT_EQ(order_set_bruteforce(validate_type1(1, 4, 0)), (OrderSet{1, 2, 4}));
    const auto g = validate_type1(85, 16, 2);
    const auto sigma = order_set_formula(g);
    EXPECT_TRUE(std::binary_search(sigma.begin(), sigma.end(), 170u));
    EXPECT_EQ(sigma, order_set_bruteforce(g));
    EXPECT_THROW(order_set_formula(validate_type1(5, 2, 4)), Error);
    EXPECT_THROW(order_set_bruteforce(g, 1000), Error);
}

TEST(OrderSet, ClosedUnderDivisorsAndMatchesOracle) {
    for (const auto& g : small_groups(500, true)) {
        const auto sigma = order_set_formula(g);
        EXPECT_EQ(sigma, oracle::order_set(g)) << to_string(g);
        for (u64 k : sigma)
            for (u64 e : nt::divisors(k)) EXPECT_TRUE(std::binary_search(sigma.begin(), sigma.end(), e));
    }
}

TEST(Lemmas, GcdIdentities) {
    for (const auto& g : small_groups(2000, true)) {
        if (g.is_cyclic()) continue;
        for (u64 j = 0; j < g.d; ++j) {
            const u64 lhs = std::gcd(nt::powmod(g.r, j, g.m) + g.m - 1, g.m);
            const u64 rhs = std::gcd(nt::powmod(g.r, std::gcd(j, g.d), g.m) + g.m - 1, g.m);
            EXPECT_EQ(lhs % g.m, rhs % g.m);
            if (std::gcd(j, g.d) == 1) {
                u64 sum = 0;
                for (u64 k = 0; k < g.d; ++k) sum = (sum + nt::powmod(g.r, j * k, g.m)) % g.m;
                EXPECT_EQ(sum, 0u) << to_string(g) << " j " << j;
            }
        }
        for (u64 c : nt::divisors(g.d)) {
            const u64 u = std::gcd(nt::powmod(g.r, c, g.m) + g.m - 1, g.m);
            EXPECT_EQ(std::gcd(g.m / u, u), 1u);
        }
    }
}

TEST(Isomorphism, Examples) {
    const auto g2 = validate_type1(85, 16, 2);
    const auto g42 = validate_type1(85, 16, 42);
    EXPECT_FALSE(is_isomorphic(g2, g42));
    EXPECT_TRUE(is_isomorphic(g2, g2));
    EXPECT_TRUE(is_isomorphic(g2, validate_type1(85, 16, 32)));
    EXPECT_TRUE(oracle::cyclic_subgroup(2, 85).count(32));
    EXPECT_FALSE(oracle::cyclic_subgroup(42, 85).count(2));
}

TEST(Isomorphism, DTwoAlwaysIsomorphic) {
    for (const auto& g : small_groups(1500, false)) {
        if (g.d != 2) continue;
        EXPECT_EQ(g.r, g.m - 1) << to_string(g);
    }
}

TEST(Isomorphism, EquivalenceMatchesSubgroupEquality) {
    for (u64 m : {85ULL, 205ULL, 221ULL, 91ULL}) {
        std::vector<TypeIParams> gs;
        for (u64 r = 2; r < m; ++r) {
            try {
                gs.push_back(validate_type1(m, 16, r));
            } catch (const Error&) {
            }
        }
        for (const auto& x : gs) {
            for (const auto& y : gs) {
                const bool expected = x.d == y.d && oracle::cyclic_subgroup(x.r, m) == oracle::cyclic_subgroup(y.r, m);
                EXPECT_EQ(is_isomorphic(x, y), expected);
                EXPECT_EQ(is_isomorphic(x, y), is_isomorphic(y, x));
            }
        }
    }
}

TEST(Canonical, LeastGeneratorPower) {
    EXPECT_EQ(canonical_r(85, 2, 8), 2u);
    EXPECT_EQ(canonical_r(85, 42, 8), 42u);
    EXPECT_EQ(canonical_r(85, 32, 8), 2u);
    for (u64 m = 3; m < 300; m += 2) {
        for (u64 r = 2; r < m; ++r) {
            if (std::gcd(r, m) != 1) continue;
            const u64 d = oracle::order_loop(r, m);
            u64 best = r;
            for (u64 c = 1; c < d; ++c)
                if (std::gcd(c, d) == 1) best = std::min(best, oracle::pow_loop(r, c, m));
            ASSERT_EQ(canonical_r(m, r, d), best) << r << " mod " << m;
        }
    }
}

TEST(Automorphism, Examples) {
    const auto g = validate_type1(85, 16, 2);
    const auto id = make_automorphism(g, 1, 1, 0);
    for (u64 idx = 0; idx < g.order(); idx += 17) EXPECT_EQ(apply_automorphism(id, element_at(g, idx)), element_at(g, idx));
    EXPECT_THROW(make_automorphism(g, 5, 1, 0), Error);
    EXPECT_THROW(make_automorphism(g, 1, 3, 0), Error);  // 3 != 1 mod 8
    EXPECT_THROW(make_automorphism(g, 1, 2, 0), Error);
    const auto psi = make_automorphism(g, 3, 9, 7);
    EXPECT_EQ(apply_automorphism(psi, power(generator_a(g), 85)), identity(g));
}

TEST(Automorphism, HomomorphismPreservingOrders) {
    std::mt19937_64 rng(11);
    for (const auto& g : small_groups(800, true)) {
        if (g.is_cyclic()) continue;
        for (int trial = 0; trial < 5; ++trial) {
            u64 s, t;
            do s = rng() % g.m;
            while (std::gcd(s, g.m) != 1);
            do t = 1 + g.d * (rng() % (g.n / g.d));
            while (std::gcd(t, g.n) != 1);
            const auto psi = make_automorphism(g, static_cast<std::int64_t>(s), static_cast<std::int64_t>(t),
                                               static_cast<std::int64_t>(rng() % g.m));
            std::set<std::pair<u64, u64>> image;
            for (u64 idx = 0; idx < g.order(); ++idx) {
                const auto x = element_at(g, idx);
                const auto y = element_at(g, rng() % g.order());
                const auto px = apply_automorphism(psi, x);
                EXPECT_EQ(apply_automorphism(psi, multiply(x, y)), multiply(px, apply_automorphism(psi, y)));
                EXPECT_EQ(element_order(px), element_order(x));
                image.insert({px.a, px.b});
            }
            EXPECT_EQ(image.size(), g.order());
        }
    }
}
