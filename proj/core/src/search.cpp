// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "spaceform/error.hpp"
#include "spaceform/number_theory.hpp"

namespace spaceform {

using nt::u64;

namespace {

// Multiplicative order of r mod m given that it divides `exponent`, whose
// prime factorization is supplied.
u64 order_dividing(u64 r, u64 m, u64 exponent, const std::vector<std::pair<u64, unsigned>>& factors) {
    u64 order = exponent;
    for (auto [p, e] : factors) {
        for (unsigned i = 0; i < e; ++i) {
            if (nt::powmod(r, order / p, m) != 1) break;
            order /= p;
        }
    }
    return order;
}

bool canonical_candidate(u64 m, u64 r, u64 d) {
    u64 x = r;
    for (u64 c = 2; c < d; ++c) {
        x = nt::mulmod(x, r, m);
        if (x < r && std::gcd(c, d) == 1) return false;
    }
    return true;
}

}  // namespace

std::vector<TypeIParams> enumerate_canonical(u64 order, std::optional<u64> only_d) {
    std::vector<TypeIParams> out;
    if (order < 2) return out;
    for (u64 m : nt::divisors(order)) {
        // d >= 2 and fixed-point-freeness force n >= 2d >= 4.
        if (m < 3 || m % 2 == 0 || order / m < 4) continue;
        const u64 n = order / m;
        if (std::gcd(m, n) != 1) continue;
        const u64 exponent = std::gcd(n, nt::carmichael_lambda(m));
        const auto exponent_factors = nt::factorize(exponent);
        for (u64 r = 2; r < m; ++r) {
            if (only_d) {
                if (nt::powmod(r, *only_d, m) != 1) continue;
            } else if (nt::powmod(r, exponent, m) != 1) {
                continue;
            }
            if (std::gcd(r - 1, m) != 1) continue;
            const u64 d = order_dividing(r, m, exponent, exponent_factors);
            if (only_d && d != *only_d) continue;
            if (!canonical_candidate(m, r, d)) continue;
            const TypeIParams g{m, n, r, d};
            if (!is_fixed_point_free(g)) continue;
            out.push_back(g);
        }
    }
    return out;
}

FingerprintEvidence summarize(const SpectrumFingerprint& fp) {
    FingerprintEvidence ev;
    ev.p = fp.p;
    ev.root = fp.root;
    ev.degree_bound = fp.degree_bound;
    ev.point_count = fp.points.size();
    if (!fp.points.empty()) {
        ev.first_point = fp.points.front();
        ev.last_point = fp.points.back();
    }
    // SHA-256 over the values as little-endian 64-bit words.
    std::vector<unsigned char> bytes;
    bytes.reserve(fp.values.size() * 8);
    for (u64 v : fp.values) {
        for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<unsigned char>(v >> (8 * i)));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    ev.values_sha256 = hex.str();
    return ev;
}

nlohmann::ordered_json to_json(const PairCertificate& cert) {
    nlohmann::ordered_json j;
    j["N"] = cert.order;
    j["m"] = cert.m;
    j["n"] = cert.n;
    j["d"] = cert.d;
    j["r1"] = cert.r1;
    j["r2"] = cert.r2;
    j["non_isomorphism"] = {{"holds", cert.non_isomorphic},
                            {"witness", "r1 is not r2^c mod m for any c in [0, d)"},
                            {"r2_subgroup", cert.r2_subgroup}};
    const auto& fp = cert.fingerprint;
    j["fingerprint_match"] = {{"holds", cert.fingerprint_match},
                              {"p", fp.p},
                              {"root", fp.root},
                              {"degree_bound", fp.degree_bound},
                              {"point_count", fp.point_count},
                              {"first_point", fp.first_point},
                              {"last_point", fp.last_point},
                              {"values_sha256", fp.values_sha256}};
    j["molien"] = {{"truncation", cert.molien_truncation}, {"match", cert.molien_match}};
    j["almost_conjugacy"] = cert.almost_conjugacy;
    j["theorem42_applicable"] = cert.theorem42_applicable;
    return j;
}

std::string to_csv(std::span<const PairCertificate> certs) {
    std::ostringstream out;
    out << "N,m,n,d,r1,r2,theorem42\n";
    for (const auto& c : certs) {
        out << c.order << ',' << c.m << ',' << c.n << ',' << c.d << ',' << c.r1 << ',' << c.r2 << ','
            << (c.theorem42_applicable ? "true" : "false") << '\n';
    }
    return out.str();
}

bool theorem42_applicable(const TypeIParams& g1, const TypeIParams& g2) {
    if (g1.m != g2.m || g1.n != g2.n || g1.d != g2.d || g1.d < 2 || g1.n != 2 * g1.d) return false;
    const u64 partner = (g1.m - nt::inverse(g1.r, g1.m)) % g1.m;
    return canonical_r(g1.m, partner, g1.d) == canonical_r(g2.m, g2.r, g2.d);
}

namespace {

std::vector<u64> subgroup_of(const TypeIParams& g) {
    std::vector<u64> out;
    u64 x = 1 % g.m;
    for (u64 c = 0; c < g.d; ++c) {
        out.push_back(x);
        x = nt::mulmod(x, g.r, g.m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 usable_truncation(const TypeIParams& g, u64 requested) {
    const u64 q = 2 * g.d - 1;
    for (u64 k = requested; k > 0; --k) {
        const auto dim = harmonic_dimension(q, k);
        if (dim && (*dim >> 124) == 0) return k;
    }
    return 0;
}

// Fills every field of a certificate for canonical g1, g2 (r1 < r2) given
// their certified fingerprints.
PairCertificate build_certificate(const TypeIParams& g1, const TypeIParams& g2, const SpectrumFingerprint& fp1,
                                  const SpectrumFingerprint& fp2, const CertifyOptions& options) {
    PairCertificate cert;
    cert.order = g1.order();
    cert.m = g1.m;
    cert.n = g1.n;
    cert.d = g1.d;
    cert.r1 = g1.r;
    cert.r2 = g2.r;
    cert.r2_subgroup = subgroup_of(g2);
    cert.non_isomorphic = !is_isomorphic(g1, g2) &&
                          !std::binary_search(cert.r2_subgroup.begin(), cert.r2_subgroup.end(), g1.r);
    cert.fingerprint = summarize(fp1);
    cert.fingerprint_match = fp1.same_values(fp2) && 2 * fp1.degree_bound + 1 <= fp1.points.size();

    const SumRep rep1 = standard_rep(g1);
    const SumRep rep2 = standard_rep(g2);
    cert.almost_conjugacy = almost_conjugate(rep1, rep2, natural_bijection(g1, g2));

    cert.molien_truncation = usable_truncation(g1, options.molien_truncation);
    if (cert.molien_truncation > 0) {
        const auto bound = harmonic_dimension(2 * g1.d - 1, cert.molien_truncation);
        const u128 p = options.prime_policy.series_prime(exponent_modulus(g1), *bound);
        cert.molien_match = molien_coefficients(rep1, cert.molien_truncation, p).coefficients ==
                            molien_coefficients(rep2, cert.molien_truncation, p).coefficients;
    }
    cert.theorem42_applicable = theorem42_applicable(g1, g2);
    return cert;
}

std::vector<std::string> failures_of(const PairCertificate& cert) {
    std::vector<std::string> out;
    if (!cert.non_isomorphic) out.emplace_back("groups are isomorphic");
    if (!cert.fingerprint_match) out.emplace_back("fingerprints differ: spectra are not equal");
    if (!cert.almost_conjugacy) out.emplace_back("natural bijection is not almost-conjugate");
    return out;
}

}  // namespace

CertifyOutcome certify_pair(const TypeIParams& a, const TypeIParams& b, const CertifyOptions& options) {
    if (a.m != b.m || a.n != b.n || a.d != b.d) {
        throw Error(ErrorCode::GroupMismatch, "pairs must share (m, n, d): " + to_string(a) + " vs " + to_string(b));
    }
    if (a.is_cyclic()) throw Error(ErrorCode::InvalidArgument, "cyclic groups have a single class");
    if (!is_fixed_point_free(a)) throw Error(ErrorCode::NotFixedPointFree, to_string(a));
    TypeIParams g1 = canonicalize(a);
    TypeIParams g2 = canonicalize(b);
    if (g2.r < g1.r) std::swap(g1, g2);

    const auto fp1 = certified_fingerprint(standard_rep(g1), options.prime_policy);
    const auto fp2 = certified_fingerprint(standard_rep(g2), options.prime_policy);
    CertifyOutcome outcome;
    outcome.attempted = build_certificate(g1, g2, fp1, fp2, options);
    outcome.failures = failures_of(outcome.attempted);
    if (outcome.failures.empty()) outcome.certificate = outcome.attempted;
    return outcome;
}

namespace {

struct OrderResult {
    std::vector<PairCertificate> certs;
    SearchStats stats;
};

constexpr std::size_t kScreeningPoints = 4;

template <class Key>
std::vector<std::vector<std::size_t>> shared_buckets(const std::vector<Key>& keys,
                                                     const std::vector<std::size_t>& members) {
    std::map<Key, std::vector<std::size_t>> buckets;
    for (std::size_t i : members) buckets[keys[i]].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [key, idx] : buckets) {
        if (idx.size() >= 2) out.push_back(std::move(idx));
    }
    return out;
}

OrderResult search_order(u64 order, const SearchConfig& config) {
    OrderResult result;
    const auto groups = enumerate_canonical(order, config.only_d);
    result.stats.groups = groups.size();
    if (groups.size() < 2) return result;

    // Isospectral forms share |G|, (m, n, d) and gcd(r^c - 1, m) for c | d, so
    // only groups agreeing on those can end up in one fingerprint bucket.
    using InvariantKey = std::pair<std::vector<u64>, std::vector<u64>>;
    std::vector<InvariantKey> invariants;
    for (const auto& g : groups) invariants.push_back({{g.m, g.n, g.d}, gcd_profile(g)});
    std::vector<std::size_t> all(groups.size());
    std::iota(all.begin(), all.end(), 0);

    std::vector<std::vector<u64>> screening(groups.size());
    std::vector<std::size_t> screened;
    for (const auto& bucket : shared_buckets(invariants, all)) {
        result.stats.invariant_buckets += bucket.size();
        const u64 modulus = exponent_modulus(groups[bucket.front()]);
        const u64 p = config.prime_policy.fingerprint_prime(modulus);
        const u64 root = primitive_root_of_unity(p, modulus);
        const auto points = deterministic_points(p, modulus, kScreeningPoints);
        for (std::size_t i : bucket) {
            screening[i] = evaluate_generating_function(collect_terms(standard_rep(groups[i])), p, root, points);
            screened.push_back(i);
        }
    }

    // Exact buckets: certified fingerprints (2 * degree_bound + 1 points).
    std::vector<std::vector<u64>> exact_keys(groups.size());
    std::map<std::size_t, SpectrumFingerprint> fingerprints;
    std::vector<std::size_t> candidates;
    for (const auto& bucket : shared_buckets(screening, screened)) {
        for (std::size_t i : bucket) {
            auto fp = certified_fingerprint(standard_rep(groups[i]), config.prime_policy);
            exact_keys[i] = fp.values;
            fingerprints.emplace(i, std::move(fp));
            candidates.push_back(i);
            ++result.stats.fingerprinted;
        }
    }

    CertifyOptions options{config.prime_policy, config.k_molien};
    for (const auto& bucket : shared_buckets(exact_keys, candidates)) {
        for (std::size_t x = 0; x < bucket.size(); ++x) {
            for (std::size_t y = x + 1; y < bucket.size(); ++y) {
                const std::size_t i = bucket[x], j = bucket[y];
                if (is_isomorphic(groups[i], groups[j])) continue;
                result.certs.push_back(
                    build_certificate(groups[i], groups[j], fingerprints.at(i), fingerprints.at(j), options));
            }
        }
    }
    return result;
}

}  // namespace

std::vector<PairCertificate> run_search(const SearchConfig& config, SearchStats* stats) {
    std::vector<OrderResult> results(config.n_max + 1);
    std::atomic<u64> next{2};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (u64 order = next++; order <= config.n_max; order = next++) {
            try {
                results[order] = search_order(order, config);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    std::vector<PairCertificate> certs;
    SearchStats total;
    for (auto& r : results) {
        total.groups += r.stats.groups;
        total.invariant_buckets += r.stats.invariant_buckets;
        total.fingerprinted += r.stats.fingerprinted;
        for (auto& c : r.certs) certs.push_back(std::move(c));
    }
    std::sort(certs.begin(), certs.end(), [](const PairCertificate& x, const PairCertificate& y) {
        return std::tie(x.order, x.m, x.r1, x.r2) < std::tie(y.order, y.m, y.r1, y.r2);
    });
    if (stats != nullptr) *stats = total;
    if (!config.output_path.empty()) write_search_outputs(config.output_path, certs);
    return certs;
}

void write_search_outputs(const std::filesystem::path& dir, std::span<const PairCertificate> certs) {
    std::filesystem::create_directories(dir / "certificates");
    std::ofstream(dir / "table.csv", std::ios::binary) << to_csv(certs);
    for (const auto& c : certs) {
        const std::string name = std::to_string(c.order) + "_" + std::to_string(c.m) + "_" + std::to_string(c.n) +
                                 "_" + std::to_string(c.d) + "_" + std::to_string(c.r1) + "_" +
                                 std::to_string(c.r2) + ".json";
        std::ofstream(dir / "certificates" / name, std::ios::binary) << to_json(c).dump(2) << '\n';
    }
}

std::vector<Theorem42Candidate> theorem42_candidates(u64 m_max, std::span<const u64> ds) {
    std::vector<Theorem42Candidate> out;
    for (u64 m = 3; m <= m_max; m += 2) {
        const u64 lambda = nt::carmichael_lambda(m);
        std::vector<u64> orders(ds.begin(), ds.end());
        if (orders.empty()) {
            for (u64 d = 8; d <= lambda; d *= 2) orders.push_back(d);
        }
        for (u64 d : orders) {
            if (d < 2 || lambda % d != 0) continue;
            for (u64 r = 2; r < m; ++r) {
                if (nt::powmod(r, d, m) != 1 || std::gcd(r - 1, m) != 1) continue;
                if (nt::multiplicative_order(r, m) != d || canonical_r(m, r, d) != r) continue;
                const u64 partner = (m - nt::inverse(r, m)) % m;
                if (std::gcd((partner + m - 1) % m, m) != 1) continue;
                if (nt::multiplicative_order(partner, m) != d) continue;
                const u64 r2 = canonical_r(m, partner, d);
                if (r2 > r) out.push_back({m, d, r, r2});
            }
        }
    }
    return out;
}

std::vector<PairCertificate> construct_theorem42_pairs(u64 m_max, std::span<const u64> ds,
                                                       const CertifyOptions& options) {
    std::vector<PairCertificate> out;
    for (const auto& c : theorem42_candidates(m_max, ds)) {
        const auto g1 = validate_type1(static_cast<std::int64_t>(c.m), static_cast<std::int64_t>(2 * c.d),
                                       static_cast<std::int64_t>(c.r1));
        const auto g2 = validate_type1(static_cast<std::int64_t>(c.m), static_cast<std::int64_t>(2 * c.d),
                                       static_cast<std::int64_t>(c.r2));
        auto outcome = certify_pair(g1, g2, options);
        if (outcome.certificate) out.push_back(std::move(*outcome.certificate));
    }
    std::sort(out.begin(), out.end(), [](const PairCertificate& x, const PairCertificate& y) {
        return std::tie(x.order, x.m, x.r1, x.r2) < std::tie(y.order, y.m, y.r1, y.r2);
    });
    return out;
}

std::vector<CrosscheckEntry> crosscheck_table(std::span<const PairCertificate> pairs) {
    std::vector<CrosscheckEntry> out;
    for (const auto& p : pairs) {
        CrosscheckEntry e{p};
        e.n_is_2d = p.n == 2 * p.d;
        e.product_is_minus_one = nt::mulmod(p.r1, p.r2, p.m) == p.m - 1;
        e.applicable = theorem42_applicable(TypeIParams{p.m, p.n, p.r1, p.d}, TypeIParams{p.m, p.n, p.r2, p.d});
        out.push_back(std::move(e));
    }
    return out;
}

bool negative_d2_check(u64 n_max) {
    SearchConfig config;
    config.n_max = n_max;
    config.only_d = 2;
    config.k_molien = 0;
    return run_search(config).empty();
}

}  // namespace spaceform
