// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform/prime_field.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "spaceform/error.hpp"
#include "spaceform/number_theory.hpp"

namespace spaceform {

namespace mp = boost::multiprecision;

Fp64::Fp64(std::uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || p >= (std::uint64_t{1} << 62)) {
        throw Error(ErrorCode::BadPrime, "Fp64 needs an odd modulus below 2^62");
    }
    // Newton iteration for p^-1 mod 2^64.
    std::uint64_t inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    one_ = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<std::uint64_t>(static_cast<u128>(one_) * one_ % p);
}

Fp64::value_type Fp64::pow(value_type a, std::uint64_t e) const noexcept {
    value_type result = one_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Fp64::value_type Fp64::inv(value_type a) const {
    if (a == 0) throw Error(ErrorCode::SingularPoint, "inverse of zero");
    return pow(a, p_ - 2);
}

Fp128::Fp128(u128 p) : p_(p) {
    if (p < 3 || p % 2 == 0 || (p >> 126) != 0) {
        throw Error(ErrorCode::BadPrime, "Fp128 needs an odd modulus below 2^126");
    }
}

namespace {

mp::uint256_t widen(u128 x) {
    mp::uint256_t out = static_cast<std::uint64_t>(x >> 64);
    out <<= 64;
    out |= static_cast<std::uint64_t>(x);
    return out;
}

u128 narrow(const mp::uint256_t& x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    const auto lo = static_cast<std::uint64_t>(x & std::numeric_limits<std::uint64_t>::max());
    return (static_cast<u128>(hi) << 64) | lo;
}

}  // namespace

Fp128::value_type Fp128::mul(value_type a, value_type b) const noexcept {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        return (static_cast<u128>(static_cast<std::uint64_t>(a)) * static_cast<std::uint64_t>(b)) % p_;
    }
    return narrow(widen(a) * widen(b) % widen(p_));
}

Fp128::value_type Fp128::pow(value_type a, u128 e) const noexcept {
    value_type result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Fp128::value_type Fp128::inv(value_type a) const {
    if (a == 0) throw Error(ErrorCode::SingularPoint, "inverse of zero");
    return pow(a, p_ - 2);
}

std::string Fp128::to_string(value_type x) const { return u128_to_string(x); }

std::string u128_to_string(u128 x) {
    if (x == 0) return "0";
    std::string out;
    while (x > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 u128_from_string(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer");
    u128 out = 0;
    const u128 limit = ~static_cast<u128>(0) / 10;
    for (char c : s) {
        if (c < '0' || c > '9') throw Error(ErrorCode::InvalidArgument, "bad integer '" + s + "'");
        if (out > limit) throw Error(ErrorCode::InvalidArgument, "integer overflow '" + s + "'");
        out = out * 10 + static_cast<unsigned>(c - '0');
    }
    return out;
}

bool is_prime_u128(u128 n) {
    if ((n >> 64) == 0) return nt::is_prime(static_cast<std::uint64_t>(n));
    if (n % 2 == 0) return false;
    const Fp128 field(n);
    u128 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                            83, 89}) {
        if (n % a == 0) return false;
        u128 x = field.pow(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = field.mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t smallest_prime_1_mod(std::uint64_t modulus, std::uint64_t threshold) {
    if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    std::uint64_t t = threshold <= 1 ? 1 : (threshold - 1 + modulus - 1) / modulus;
    if (t == 0) t = 1;
    for (;; ++t) {
        const std::uint64_t p = 1 + t * modulus;
        if (p >= (std::uint64_t{1} << 62)) throw Error(ErrorCode::BadPrime, "no prime below 2^62");
        if (nt::is_prime(p)) return p;
    }
}

u128 smallest_prime_1_mod_u128(std::uint64_t modulus, u128 threshold) {
    if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
    u128 t = threshold <= 1 ? 1 : (threshold - 1 + modulus - 1) / modulus;
    if (t == 0) t = 1;
    for (;; ++t) {
        const u128 p = 1 + t * modulus;
        if ((p >> 126) != 0) throw Error(ErrorCode::PrimeTooSmall, "required prime exceeds 2^126");
        if (is_prime_u128(p)) return p;
    }
}

namespace {

template <class Field, class Int>
Int root_of_unity(const Field& f, Int p, std::uint64_t order) {
    if (order == 0 || (p - 1) % order != 0) {
        throw Error(ErrorCode::BadPrime, "root order " + std::to_string(order) + " does not divide p - 1");
    }
    const auto primes = nt::prime_divisors(order);
    for (std::uint64_t g = 2;; ++g) {
        const auto root = f.pow(f.from_uint(g), (p - 1) / order);
        bool primitive = true;
        for (std::uint64_t q : primes) {
            if (f.pow(root, order / q) == f.one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) return f.to_uint(root);
    }
}

}  // namespace

std::uint64_t primitive_root_of_unity(std::uint64_t p, std::uint64_t order) {
    return root_of_unity(Fp64(p), p, order);
}

u128 primitive_root_of_unity_u128(u128 p, std::uint64_t order) { return root_of_unity(Fp128(p), p, order); }

}  // namespace spaceform
