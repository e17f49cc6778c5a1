// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform/groups.hpp"

#include <algorithm>
#include <numeric>

#include "spaceform/error.hpp"
#include "spaceform/number_theory.hpp"

namespace spaceform {

using nt::u64;

std::string to_string(const TypeIParams& g) {
    return "Gamma_" + std::to_string(g.d) + "(" + std::to_string(g.m) + "," + std::to_string(g.n) + "," +
           std::to_string(g.r) + ")";
}

TypeIParams validate_type1(std::int64_t m, std::int64_t n, std::int64_t r) {
    if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "m and n must be positive");
    const u64 um = static_cast<u64>(m);
    const u64 un = static_cast<u64>(n);
    if (um > (u64{1} << 32) || un > (u64{1} << 32) || um * un > (u64{1} << 40)) {
        throw Error(ErrorCode::InvalidArgument, "group too large");
    }
    if (um == 1) return {1, un, 0, 1};
    if (um % 2 == 0) throw Error(ErrorCode::EvenM, "m = " + std::to_string(um) + " is even");

    const u64 ur = nt::reduce(r, um);
    const u64 rm1 = (ur + um - 1) % um;
    if (std::gcd(nt::mulmod(rm1, un % um, um), um) != 1) {
        throw Error(ErrorCode::CoprimalityViolation, "gcd((r-1)n, m) != 1");
    }
    if (nt::powmod(ur, un, um) != 1) {
        throw Error(ErrorCode::OrderViolation, "r^n is not 1 mod m");
    }
    return {um, un, ur, nt::multiplicative_order(ur, um)};
}

bool is_fixed_point_free(const TypeIParams& g) {
    const u64 quotient = g.n / g.d;
    for (u64 p : nt::prime_divisors(g.d)) {
        if (quotient % p != 0) return false;
    }
    return true;
}

GroupElement make_element(const TypeIParams& g, std::int64_t a, std::int64_t b) {
    return {g, nt::reduce(a, g.m), nt::reduce(b, g.n)};
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
    if (x.group != y.group) throw Error(ErrorCode::GroupMismatch, "elements of different groups");
    const TypeIParams& g = x.group;
    const u64 twisted = nt::mulmod(y.a, nt::powmod(g.r, x.b, g.m), g.m);
    return {g, nt::addmod(x.a, twisted, g.m), (x.b + y.b) % g.n};
}

GroupElement power(const GroupElement& x, u64 k) {
    const TypeIParams& g = x.group;
    const u64 q = nt::powmod(g.r, x.b, g.m);
    const u64 exponent = nt::mulmod(x.a, nt::geometric_sum(q, k, g.m), g.m);
    return {g, exponent, static_cast<u64>((static_cast<nt::u128>(k) * x.b) % g.n)};
}

u64 element_order(const GroupElement& x) {
    // x^k = 1 forces n | k b, so k is a multiple of n / gcd(b, n); the power
    // x^(n / gcd(b, n)) lies in <A>.
    const TypeIParams& g = x.group;
    const u64 b_part = g.n / std::gcd(x.b, g.n);
    const GroupElement y = power(x, b_part);
    return b_part * (g.m / std::gcd(y.a, g.m));
}

std::vector<u64> gcd_profile(const TypeIParams& g) {
    std::vector<u64> out;
    for (u64 c : nt::divisors(g.d)) {
        const u64 rc = nt::powmod(g.r, c, g.m);
        out.push_back(std::gcd((rc + g.m - 1) % g.m, g.m));
    }
    return out;
}

OrderSet order_set_formula(const TypeIParams& g) {
    if (!is_fixed_point_free(g)) throw Error(ErrorCode::NotFixedPointFree, to_string(g));
    OrderSet out;
    const auto cs = nt::divisors(g.d);
    const auto us = gcd_profile(g);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (u64 k : nt::divisors(us[i] * (g.n / cs[i]))) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OrderSet order_set_bruteforce(const TypeIParams& g, u64 limit) {
    if (g.order() > limit) {
        throw Error(ErrorCode::SizeLimitExceeded, "group of order " + std::to_string(g.order()));
    }
    std::vector<bool> seen(g.order() + 1, false);
    for (u64 i = 0; i < g.order(); ++i) seen[element_order(element_at(g, i))] = true;
    OrderSet out;
    for (u64 k = 1; k < seen.size(); ++k) {
        if (seen[k]) out.push_back(k);
    }
    return out;
}

bool is_isomorphic(const TypeIParams& g1, const TypeIParams& g2) {
    if (g1.m != g2.m || g1.n != g2.n || g1.d != g2.d) return false;
    // Equal-order cyclic subgroups coincide iff one generator lies in the other.
    u64 x = 1 % g1.m;
    for (u64 c = 0; c < g2.d; ++c) {
        if (x == g1.r % g1.m) return true;
        x = nt::mulmod(x, g2.r, g2.m);
    }
    return false;
}

u64 canonical_r(u64 m, u64 r, u64 d) {
    if (m == 1) return 0;
    u64 best = r % m;
    u64 x = r % m;
    for (u64 c = 2; c <= d; ++c) {
        x = nt::mulmod(x, r, m);
        if (std::gcd(c, d) == 1) best = std::min(best, x);
    }
    return best;
}

TypeIParams canonicalize(const TypeIParams& g) {
    TypeIParams out = g;
    out.r = canonical_r(g.m, g.r, g.d);
    return out;
}

Automorphism make_automorphism(const TypeIParams& g, std::int64_t s, std::int64_t t, std::int64_t u) {
    Automorphism psi{nt::reduce(s, g.m), nt::reduce(t, g.n), nt::reduce(u, g.m)};
    if (std::gcd(psi.s, g.m) != 1 || std::gcd(psi.t, g.n) != 1) {
        throw Error(ErrorCode::InvalidAutomorphism, "s or t not coprime to m or n");
    }
    if (psi.t % g.d != 1 % g.d) throw Error(ErrorCode::InvalidAutomorphism, "t is not 1 mod d");
    return psi;
}

GroupElement apply_automorphism(const Automorphism& psi, const GroupElement& x) {
    const TypeIParams& g = x.group;
    if (std::gcd(psi.s % g.m, g.m) != 1 || std::gcd(psi.t % g.n, g.n) != 1 || psi.t % g.d != 1 % g.d) {
        throw Error(ErrorCode::InvalidAutomorphism, "automorphism does not fit " + to_string(g));
    }
    const GroupElement image_a{g, psi.s % g.m, 0};
    const GroupElement image_b = multiply(GroupElement{g, 0, psi.t % g.n}, GroupElement{g, psi.u % g.m, 0});
    return multiply(power(image_a, x.a), power(image_b, x.b));
}

}  // namespace spaceform
