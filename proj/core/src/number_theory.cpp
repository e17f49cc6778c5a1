// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform/number_theory.hpp"

#include <algorithm>
#include <tuple>

#include "spaceform/error.hpp"

namespace spaceform::nt {

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 geometric_sum(u64 q, u64 k, u64 m) {
    if (m == 1) return 0;
    // Binary method on k: keep (sum of first `len` powers, q^len).
    u64 sum = 0;
    u64 qpow = 1;  // q^(terms accumulated so far)
    u64 block_sum = 1 % m;
    u64 block_pow = q % m;
    while (k > 0) {
        if (k & 1) {
            sum = addmod(sum, mulmod(qpow, block_sum, m), m);
            qpow = mulmod(qpow, block_pow, m);
        }
        block_sum = mulmod(block_sum, addmod(1 % m, block_pow, m), m);
        block_pow = mulmod(block_pow, block_pow, m);
        k >>= 1;
    }
    return sum;
}

u64 inverse(u64 a, u64 m) {
    if (m == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (r != 1) throw Error(ErrorCode::InvalidArgument, "value is not invertible modulo m");
    return reduce(t, m);
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

u64 carmichael_lambda(u64 n) {
    u64 lambda = 1;
    for (auto [p, e] : factorize(n)) {
        u64 term;
        if (p == 2) {
            term = e == 1 ? 1 : e == 2 ? 2 : (u64{1} << (e - 2));
        } else {
            term = p - 1;
            for (unsigned i = 1; i < e; ++i) term *= p;
        }
        lambda = lcm(lambda, term);
    }
    return lambda;
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m == 1) return 1;
    if (std::gcd(a % m, m) != 1) throw Error(ErrorCode::InvalidArgument, "order of a non-unit");
    u64 order = carmichael_lambda(m);
    for (auto [p, e] : factorize(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(a, order / p, m) != 1) break;
            order /= p;
        }
    }
    return order;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (u64 a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
        u64 x = powmod(a, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace spaceform::nt
