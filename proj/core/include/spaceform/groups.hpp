// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

// Metacyclic groups of Type I,
//
//     G = < A, B | A^m = B^n = 1, B A B^-1 = A^r >,   gcd((r - 1) n, m) = 1,
//
// written Gamma_d(m, n, r) where d is the multiplicative order of r mod m.
// Every element has a unique normal form A^a B^b with 0 <= a < m, 0 <= b < n,
// and B^b A^a = A^(a r^b) B^b.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace spaceform {

/// Parameters (m, n, r, d) of a Type I group. Construct through validate_type1().
struct TypeIParams {
    std::uint64_t m = 1;
    std::uint64_t n = 1;
    std::uint64_t r = 0;  // canonical residue in [0, m); 0 when m == 1
    std::uint64_t d = 1;  // multiplicative order of r mod m

    std::uint64_t order() const noexcept { return m * n; }
    bool is_cyclic() const noexcept { return d == 1; }

    friend bool operator==(const TypeIParams&, const TypeIParams&) = default;
    friend auto operator<=>(const TypeIParams&, const TypeIParams&) = default;
};

std::string to_string(const TypeIParams& g);

/// Validates (m, n, r), reducing r mod m, and computes d.
/// Throws Error with EvenM, CoprimalityViolation or OrderViolation.
TypeIParams validate_type1(std::int64_t m, std::int64_t n, std::int64_t r);

/// Every prime divisor of d divides n / d.
bool is_fixed_point_free(const TypeIParams& g);

/// A^a B^b in normal form.
struct GroupElement {
    TypeIParams group;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    bool is_identity() const noexcept { return a == 0 && b == 0; }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement make_element(const TypeIParams& g, std::int64_t a, std::int64_t b);
inline GroupElement identity(const TypeIParams& g) { return {g, 0, 0}; }
inline GroupElement generator_a(const TypeIParams& g) { return {g, 1 % g.m, 0}; }
inline GroupElement generator_b(const TypeIParams& g) { return {g, 0, 1 % g.n}; }

/// Element with linear index a * n + b; the enumeration order used everywhere.
inline GroupElement element_at(const TypeIParams& g, std::uint64_t index) {
    return {g, index / g.n, index % g.n};
}

/// Throws GroupMismatch if x and y live in different groups.
GroupElement multiply(const GroupElement& x, const GroupElement& y);

/// x^k using the closed form (A^a B^b)^k = A^(a (1 + r^b + ... + r^((k-1) b))) B^(k b).
GroupElement power(const GroupElement& x, std::uint64_t k);

/// Least k >= 1 with x^k = 1.
std::uint64_t element_order(const GroupElement& x);

/// Sorted, deduplicated set of element orders.
using OrderSet = std::vector<std::uint64_t>;

/// Union over c | d of the divisors of gcd(r^c - 1, m) * n / c.
/// Throws NotFixedPointFree.
OrderSet order_set_formula(const TypeIParams& g);

/// Orders of all m*n elements by enumeration. Throws SizeLimitExceeded when m*n > limit.
OrderSet order_set_bruteforce(const TypeIParams& g, std::uint64_t limit = 1u << 22);

/// gcd(r^c - 1, m) for each divisor c of d, in ascending order of c.
std::vector<std::uint64_t> gcd_profile(const TypeIParams& g);

/// <r1> == <r2> in (Z/mZ)^x together with equal (m, n, d).
bool is_isomorphic(const TypeIParams& g1, const TypeIParams& g2);

/// Smallest element of { r^c mod m : gcd(c, d) = 1 }: one representative per
/// cyclic subgroup <r>, hence per isomorphism class.
std::uint64_t canonical_r(std::uint64_t m, std::uint64_t r, std::uint64_t d);

inline bool is_canonical(const TypeIParams& g) { return canonical_r(g.m, g.r, g.d) == g.r; }

/// Returns g with r replaced by its canonical representative.
TypeIParams canonicalize(const TypeIParams& g);

/// psi_{s,t,u}: A -> A^s, B -> B^t A^u.
struct Automorphism {
    std::uint64_t s = 1;
    std::uint64_t t = 1;
    std::uint64_t u = 0;
};

/// Reduces (s, t, u) and checks gcd(s, m) = gcd(t, n) = 1, t = 1 mod d.
/// Throws InvalidAutomorphism.
Automorphism make_automorphism(const TypeIParams& g, std::int64_t s, std::int64_t t, std::int64_t u);

GroupElement apply_automorphism(const Automorphism& psi, const GroupElement& x);

}  // namespace spaceform
