// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

// Prime-field arithmetic used for exact evaluation of spectral generating
// functions. Two fields share one interface so the series code can be
// instantiated for either:
//
//   Fp64  - Montgomery arithmetic for odd primes below 2^62 (fingerprints).
//   Fp128 - primes below 2^126 (power-series coefficients that must lift
//           back to integers beyond 64 bits).

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spaceform {

using u128 = unsigned __int128;

class Fp64 {
public:
    using value_type = std::uint64_t;  // Montgomery representation
    using integer_type = std::uint64_t;

    explicit Fp64(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return one_; }

    value_type from_uint(std::uint64_t x) const noexcept { return mul(x % p_, r2_); }
    std::uint64_t to_uint(value_type x) const noexcept { return reduce(x); }

    value_type add(value_type a, value_type b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }

    value_type mul(value_type a, value_type b) const noexcept {
        const u128 t = static_cast<u128>(a) * b;
        const std::uint64_t q = static_cast<std::uint64_t>(t) * neg_inv_;
        const std::uint64_t u = static_cast<std::uint64_t>((t + static_cast<u128>(q) * p_) >> 64);
        return u >= p_ ? u - p_ : u;
    }

    value_type pow(value_type a, std::uint64_t e) const noexcept;
    value_type inv(value_type a) const;

    std::string to_string(value_type x) const { return std::to_string(to_uint(x)); }

private:
    std::uint64_t reduce(std::uint64_t x) const noexcept { return mul(x, 1); }

    std::uint64_t p_;
    std::uint64_t neg_inv_;  // -p^-1 mod 2^64
    std::uint64_t r2_;       // 2^128 mod p
    std::uint64_t one_;      // 2^64 mod p
};

class Fp128 {
public:
    using value_type = u128;
    using integer_type = u128;

    explicit Fp128(u128 p);

    u128 modulus() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }

    value_type from_uint(u128 x) const noexcept { return x % p_; }
    u128 to_uint(value_type x) const noexcept { return x; }

    value_type add(value_type a, value_type b) const noexcept {
        u128 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }

    value_type mul(value_type a, value_type b) const noexcept;
    value_type pow(value_type a, u128 e) const noexcept;
    value_type inv(value_type a) const;

    std::string to_string(value_type x) const;

private:
    u128 p_;
};

std::string u128_to_string(u128 x);
/// Parses a decimal string; throws Error(InvalidArgument) on bad input or overflow.
u128 u128_from_string(const std::string& s);

/// Primality for values below 2^126 (Miller-Rabin with the first 24 prime bases,
/// deterministic below 3.3e24).
bool is_prime_u128(u128 n);

/// Smallest prime p >= threshold with modulus | p - 1 (scans p = 1 + t * modulus).
std::uint64_t smallest_prime_1_mod(std::uint64_t modulus, std::uint64_t threshold);
u128 smallest_prime_1_mod_u128(std::uint64_t modulus, u128 threshold);

/// Primitive order-th root of unity in F_p, from the smallest generator candidate
/// g = 2, 3, ... for which g^((p-1)/order) has exact order `order`.
/// Throws BadPrime unless order | p - 1.
std::uint64_t primitive_root_of_unity(std::uint64_t p, std::uint64_t order);
u128 primitive_root_of_unity_u128(u128 p, std::uint64_t order);

/// Replaces every value by its inverse (Montgomery's simultaneous inversion).
/// All inputs must be nonzero.
template <class Field>
void batch_invert(const Field& f, std::vector<typename Field::value_type>& values,
                  std::vector<typename Field::value_type>& scratch) {
    const std::size_t n = values.size();
    if (n == 0) return;
    scratch.resize(n);
    auto acc = f.one();
    for (std::size_t i = 0; i < n; ++i) {
        scratch[i] = acc;
        acc = f.mul(acc, values[i]);
    }
    acc = f.inv(acc);
    for (std::size_t i = n; i-- > 0;) {
        const auto v = values[i];
        values[i] = f.mul(acc, scratch[i]);
        acc = f.mul(acc, v);
    }
}

}  // namespace spaceform
