// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace spaceform::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

u64 powmod(u64 base, u64 exp, u64 m);

/// Reduces a possibly negative integer into [0, m).
inline u64 reduce(std::int64_t x, u64 m) {
    std::int64_t r = x % static_cast<std::int64_t>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

/// 1 + q + q^2 + ... + q^(k-1) mod m, without division.
u64 geometric_sum(u64 q, u64 k, u64 m);

/// Inverse of a mod m; requires gcd(a, m) = 1.
u64 inverse(u64 a, u64 m);

/// Prime factorization by trial division, as (prime, exponent) pairs ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

/// All positive divisors, ascending.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

/// Carmichael's lambda: exponent of (Z/nZ)^x.
u64 carmichael_lambda(u64 n);

/// Multiplicative order of a mod m (gcd(a, m) = 1 required; returns 1 for m = 1).
/// Descends from lambda(m) through its prime factors.
u64 multiplicative_order(u64 a, u64 m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

inline u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

}  // namespace spaceform::nt
