// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

// Eigenvalue algebra of the fixed-point-free representations rho_{k,l} of a
// Type I group Gamma_d(m, n, r), and exact evaluation of the Molien-type
// generating function
//
//     F(z) = (1 - z^2) / |G| * sum_{g in G} 1 / det(I - rho(g) z)
//
// over prime fields. Eigenvalues are stored as exponents e of a primitive
// L-th root of unity zeta, with L = m * n * d for the group.
//
// rho_{k,l} is the realification of a d-dimensional complex representation
// pi_{k,l}: pi(A) = diag(xi_m^(k r^j)), pi(B) a cyclic shift with corner
// weight xi_{n/d}^l. For x = A^a B^b and c = gcd(b, d) the characteristic
// polynomial of pi(x) splits as
//
//     prod_{j=0}^{c-1} (z^(d/c) - xi_m^(k a alpha(b) r^j) xi_{n/d}^(l b/c)),
//     alpha(b) = sum_{h=1}^{d/c} r^(c h),
//
// so det(I - rho(x) z) is a product of 2c "cycle factors" 1 - zeta^w z^(d/c)
// (the c factors above and their complex conjugates).

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spaceform/groups.hpp"
#include "spaceform/prime_field.hpp"

namespace spaceform {

struct RepParams {
    std::uint64_t k = 1;  // unit mod m
    std::uint64_t l = 1;  // unit mod n

    friend bool operator==(const RepParams&, const RepParams&) = default;
};

/// Reduces (k, l) and checks gcd(k, m) = gcd(l, n) = 1. Throws InvalidRepresentation.
RepParams make_rep(const TypeIParams& g, std::int64_t k, std::int64_t l);

/// rho_{k1,l1} + ... + rho_{kp,lp} on one group.
struct SumRep {
    TypeIParams group;
    std::vector<RepParams> summands;

    std::uint64_t degree() const noexcept { return 2 * group.d * summands.size(); }
};

SumRep make_sum_rep(const TypeIParams& g, std::span<const std::pair<std::int64_t, std::int64_t>> reps);
inline SumRep standard_rep(const TypeIParams& g) { return {g, {RepParams{1 % g.m, 1 % g.n}}}; }

/// L = m * n * d: every eigenvalue of every rho_{k,l}(x) is an L-th root of unity.
inline std::uint64_t exponent_modulus(const TypeIParams& g) { return g.m * g.n * g.d; }

/// Multiset of exponents e in [0, modulus), kept sorted.
struct EigenExponents {
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> exponents;

    /// Same multiset expressed over a multiple of the modulus.
    EigenExponents rescaled(std::uint64_t new_modulus) const;
    /// Same multiset over the smallest modulus that still holds every root.
    EigenExponents reduced() const;
    EigenExponents negated() const;

    friend bool operator==(const EigenExponents&, const EigenExponents&) = default;
};

/// Eigenvalues compared as roots of unity, independent of the chosen modulus.
bool same_eigenvalues(const EigenExponents& x, const EigenExponents& y);

/// det(I - M z) factor 1 - zeta^exponent z^length.
struct CycleFactor {
    std::uint64_t length = 1;
    std::uint64_t exponent = 0;

    friend auto operator<=>(const CycleFactor&, const CycleFactor&) = default;
};

/// The 2 gcd(b, d) cycle factors of det(I - rho_{k,l}(x) z), sorted.
std::vector<CycleFactor> cycle_factors(const RepParams& rep, const GroupElement& x);

/// The 2d eigenvalue exponents of rho_{k,l}(x) modulo exponent_modulus(group).
EigenExponents char_poly_exponents(const RepParams& rep, const GroupElement& x);

/// Eigenvalues of a sum representation (union over summands).
EigenExponents eigen_exponents(const SumRep& rep, const GroupElement& x);

/// Polynomial coefficients over F_p, lowest degree first, canonical residues.
using FieldPolynomial = std::vector<std::uint64_t>;

/// prod_e (z - zeta^e) over F_p, zeta the primitive root chosen by
/// primitive_root_of_unity(p, exponents.modulus).
FieldPolynomial char_poly_from_exponents(const EigenExponents& eig, std::uint64_t p);

/// Independent route: builds the d x d matrices of pi_{k,l}(A), pi_{k,l}(B) over
/// F_p, forms pi(A)^a pi(B)^b by matrix products, takes the characteristic
/// polynomial by Hessenberg reduction and multiplies it by the characteristic
/// polynomial of the conjugate matrix (zeta replaced by zeta^-1).
/// Throws BadPrime unless exponent_modulus(group) | p - 1.
FieldPolynomial char_poly_matrix_oracle(const RepParams& rep, const GroupElement& x, std::uint64_t p);

/// Characteristic polynomial det(z I - M) of a square matrix over F_p (row-major,
/// canonical residues), lowest degree first.
FieldPolynomial characteristic_polynomial(std::vector<std::vector<std::uint64_t>> matrix, std::uint64_t p);

using ElementMap = std::function<GroupElement(const GroupElement&)>;

/// A_1^a B_1^b -> A_2^a B_2^b between groups with equal m and n; otherwise the
/// map that preserves the linear index a * n + b.
ElementMap natural_bijection(const TypeIParams& from, const TypeIParams& to);

/// True iff the eigenvalue multisets agree element by element under `bijection`.
/// Throws DegreeMismatch when degrees differ and InvalidArgument when the group
/// orders differ or the map is not a bijection.
bool almost_conjugate(const SumRep& rep1, const SumRep& rep2, const ElementMap& bijection);

/// det(I - g z) terms of the generating function with multiplicities: elements
/// whose cycle-factor lists coincide are merged.
struct SpectralTerms {
    std::uint64_t modulus = 1;      // exponents are mod this
    std::uint64_t group_order = 1;  // |G|
    std::uint64_t dimension = 0;    // q + 1
    struct Term {
        std::uint64_t count = 0;
        std::vector<CycleFactor> factors;
    };
    std::vector<Term> terms;  // sorted by factors
};

SpectralTerms collect_terms(const SumRep& rep);

/// Terms for an arbitrary finite matrix group given by its eigenvalue
/// multisets (one per element, all of one dimension).
SpectralTerms terms_from_eigenvalues(std::span<const EigenExponents> elements);

/// Evaluates F at each point over F_p using `root` as zeta. Throws SingularPoint
/// if some det(I - g z) vanishes at a point.
std::vector<std::uint64_t> evaluate_generating_function(const SpectralTerms& terms, std::uint64_t p,
                                                        std::uint64_t root, std::span<const std::uint64_t> points);

/// Field size policy. By default primes are the smallest p = 1 + t L above
/// 10^18 (and above any coefficient bound). A seed moves the start of the
/// scan to a pseudo-random offset, which changes every fingerprint.
struct PrimePolicy {
    static constexpr std::uint64_t kThreshold = 1'000'000'000'000'000'000ULL;
    std::optional<std::uint64_t> seed;

    /// Reads SPACEFORM_PRIME_SEED.
    static PrimePolicy from_environment();

    std::uint64_t fingerprint_prime(std::uint64_t modulus) const;
    u128 series_prime(std::uint64_t modulus, u128 coefficient_bound) const;
};

/// Exact evaluations of F_G over F_p.
struct SpectrumFingerprint {
    TypeIParams group;
    std::vector<RepParams> reps;
    std::uint64_t p = 0;
    std::uint64_t root = 0;
    std::uint64_t degree_bound = 0;
    std::vector<std::uint64_t> points;
    std::vector<std::uint64_t> values;

    /// Same prime, root, points and values (group parameters may differ).
    bool same_values(const SpectrumFingerprint& other) const {
        return p == other.p && root == other.root && points == other.points && values == other.values;
    }
};

/// Bound on numerator and denominator degrees of F after clearing denominators:
/// degree(rep) * |G| + 2.
std::uint64_t degree_bound(const SumRep& rep);

/// Fingerprint at explicit points. Throws BadPrime unless exponent_modulus | p - 1,
/// SingularPoint if a point is a root of some det(I - g z).
SpectrumFingerprint fingerprint(const SumRep& rep, std::uint64_t p, std::span<const std::uint64_t> points);

/// The first `count` field elements 2, 3, 4, ... that are not modulus-th roots
/// of unity (hence never singular for groups with this exponent modulus).
std::vector<std::uint64_t> deterministic_points(std::uint64_t p, std::uint64_t modulus, std::size_t count);

/// Fingerprint at 2 * degree_bound + 1 deterministic points: two such
/// fingerprints over the same field agree iff the generating functions agree.
SpectrumFingerprint certified_fingerprint(const SumRep& rep, const PrimePolicy& policy = {});

/// Canonical JSON: {m,n,d,r,reps,p,root,points,values}, points ascending.
nlohmann::ordered_json to_json(const SpectrumFingerprint& fp);

/// Leading power-series coefficients of F: dim H_{q,k}^G for k = 0..K.
struct MolienSeries {
    std::uint64_t truncation = 0;
    std::vector<u128> coefficients;
};

/// dim H_{q,k}, harmonic polynomials of degree k in q + 1 variables.
/// Returns nullopt if the value does not fit in 126 bits.
std::optional<u128> harmonic_dimension(std::uint64_t q, std::uint64_t k);

/// Coefficients of F mod p lifted to integers. Throws BadPrime unless
/// exponent_modulus | p - 1 and PrimeTooSmall unless p > dim H_{q,K}.
MolienSeries molien_coefficients(const SumRep& rep, std::uint64_t truncation, u128 p);
MolienSeries molien_coefficients(const SpectralTerms& terms, std::uint64_t truncation, u128 p);

/// Picks the prime through `policy` and computes the series.
MolienSeries molien_coefficients(const SumRep& rep, std::uint64_t truncation, const PrimePolicy& policy = {});

/// rho_{k,l} ~ rho_{k',l'}: k' = e k r^c (mod m), l' = e l (mod n/d), e = +-1, 0 <= c < d.
bool reps_equivalent(const TypeIParams& g, const RepParams& r1, const RepParams& r2);

/// rho_1 ~ rho_2 o psi_{s,t,u} for some automorphism, i.e. the space forms are isometric.
bool isometric_irreducible(const TypeIParams& g, const RepParams& r1, const RepParams& r2);

}  // namespace spaceform
