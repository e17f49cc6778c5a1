// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

// Exhaustive search for isospectral spherical space forms S^(2d-1)/rho_{1,1}(G)
// with non-isomorphic Type I fundamental groups, and the explicit family of
// such pairs with n = 2d and r1 r2 = -1 (mod m).

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spaceform/groups.hpp"
#include "spaceform/spectra.hpp"

namespace spaceform {

/// Non-cyclic fixed-point-free Type I groups of order N, one canonical r per
/// isomorphism class, sorted by (m, r). `only_d` restricts to one value of d.
std::vector<TypeIParams> enumerate_canonical(std::uint64_t order, std::optional<std::uint64_t> only_d = {});

struct FingerprintEvidence {
    std::uint64_t p = 0;
    std::uint64_t root = 0;
    std::uint64_t degree_bound = 0;
    std::uint64_t point_count = 0;
    std::uint64_t first_point = 0;
    std::uint64_t last_point = 0;
    std::string values_sha256;
};

FingerprintEvidence summarize(const SpectrumFingerprint& fp);

struct PairCertificate {
    std::uint64_t order = 0;  // N = m n
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t r1 = 0;  // canonical, r1 < r2
    std::uint64_t r2 = 0;

    /// <r2> = { r2^c : 0 <= c < d } mod m, sorted; r1 is not in it.
    std::vector<std::uint64_t> r2_subgroup;
    bool non_isomorphic = false;

    FingerprintEvidence fingerprint;
    bool fingerprint_match = false;

    /// Molien coefficients compared up to this order (0 if skipped).
    std::uint64_t molien_truncation = 0;
    bool molien_match = false;

    /// Eigenvalue multisets agree under A1^a B1^b -> A2^a B2^b for all elements.
    bool almost_conjugacy = false;
    bool theorem42_applicable = false;

    bool verified() const noexcept { return non_isomorphic && fingerprint_match && almost_conjugacy; }
};

nlohmann::ordered_json to_json(const PairCertificate& cert);

/// Header plus one row per certificate: N,m,n,d,r1,r2,theorem42.
std::string to_csv(std::span<const PairCertificate> certs);

/// n = 2d and -r1^-1 generates <r2> (i.e. representatives with r1 r2 = -1 mod m exist).
bool theorem42_applicable(const TypeIParams& g1, const TypeIParams& g2);

struct CertifyOptions {
    PrimePolicy prime_policy;
    std::uint64_t molien_truncation = 200;
};

struct CertifyOutcome {
    std::optional<PairCertificate> certificate;  // present iff every check passed
    PairCertificate attempted;                   // all fields that could be computed
    std::vector<std::string> failures;
};

/// Runs all checks for S^(2d-1)/rho_{1,1}(g1) vs S^(2d-1)/rho_{1,1}(g2): non-isomorphism,
/// equality of certified fingerprints, almost-conjugacy under the natural bijection,
/// Molien coefficients (up to the largest truncation whose bound fits 126 bits).
CertifyOutcome certify_pair(const TypeIParams& g1, const TypeIParams& g2, const CertifyOptions& options = {});

struct SearchConfig {
    std::uint64_t n_max = 0;
    std::uint64_t k_molien = 200;
    PrimePolicy prime_policy;
    unsigned jobs = 1;
    std::filesystem::path output_path;  // empty: do not write files
    std::optional<std::uint64_t> only_d;
};

struct SearchStats {
    std::uint64_t groups = 0;           // canonical groups enumerated
    std::uint64_t invariant_buckets = 0;  // groups sharing (m, n, d, gcd profile) with another
    std::uint64_t fingerprinted = 0;    // groups that needed a certified fingerprint
};

/// Certificates for every pair of non-isomorphic groups of order <= n_max whose
/// standard space forms are isospectral, ordered by (N, m, r1, r2).
std::vector<PairCertificate> run_search(const SearchConfig& config, SearchStats* stats = nullptr);

/// Writes <dir>/table.csv and <dir>/certificates/<N>_<m>_<n>_<d>_<r1>_<r2>.json.
void write_search_outputs(const std::filesystem::path& dir, std::span<const PairCertificate> certs);

/// Pairs Gamma_d(m, 2d, r1), Gamma_d(m, 2d, r2) with r2 ~ -r1^-1 over odd m <= m_max,
/// non-isomorphic and fully certified. `ds` defaults to 8, 16, 32, ...
std::vector<PairCertificate> construct_theorem42_pairs(std::uint64_t m_max, std::span<const std::uint64_t> ds = {},
                                                       const CertifyOptions& options = {});

/// Same search without certification: the unordered canonical pairs {r1, r2} per (m, d).
struct Theorem42Candidate {
    std::uint64_t m = 0;
    std::uint64_t d = 0;
    std::uint64_t r1 = 0;
    std::uint64_t r2 = 0;
};
std::vector<Theorem42Candidate> theorem42_candidates(std::uint64_t m_max, std::span<const std::uint64_t> ds = {});

struct CrosscheckEntry {
    PairCertificate pair;
    bool n_is_2d = false;
    bool product_is_minus_one = false;  // r1 r2 = -1 (mod m) for the listed representatives
    bool applicable = false;            // some representatives satisfy it
};

std::vector<CrosscheckEntry> crosscheck_table(std::span<const PairCertificate> pairs);

/// True iff the search restricted to d = 2 finds no pair up to n_max.
bool negative_d2_check(std::uint64_t n_max);

}  // namespace spaceform
