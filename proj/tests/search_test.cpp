// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spaceform/error.hpp"
#include "spaceform/number_theory.hpp"
#include "spaceform/search.hpp"

using namespace spaceform;
using oracle::u64;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("spaceform_search_test_" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST(Enumerate, MatchesExhaustiveTripleScan) {
    for (u64 N = 2; N <= 400; ++N) ASSERT_EQ(enumerate_canonical(N), oracle::canonical_groups(N)) << N;
    for (u64 N : {1360ULL, 2720ULL, 3280ULL, 1024ULL, 2025ULL}) EXPECT_EQ(enumerate_canonical(N), oracle::canonical_groups(N)) << N;
}

TEST(Enumerate, Examples) {
    const auto list = enumerate_canonical(1360);
    EXPECT_TRUE(std::count(list.begin(), list.end(), TypeIParams{85, 16, 2, 8}));
    EXPECT_TRUE(std::count(list.begin(), list.end(), TypeIParams{85, 16, 42, 8}));
    for (u64 p : {2ULL, 3ULL, 7919ULL}) EXPECT_TRUE(enumerate_canonical(p).empty());
    const auto twenty = enumerate_canonical(20);
    EXPECT_TRUE(std::count(twenty.begin(), twenty.end(), TypeIParams{5, 4, 4, 2}));
    for (const auto& g : enumerate_canonical(2720)) {
        EXPECT_FALSE(g.is_cyclic());
        EXPECT_TRUE(is_fixed_point_free(g));
        EXPECT_TRUE(is_canonical(g));
    }
    for (const auto& g : enumerate_canonical(1360, 8)) EXPECT_EQ(g.d, 8u);
}

TEST(Certify, SmallestPair) {
    const auto outcome = certify_pair(validate_type1(85, 16, 42), validate_type1(85, 16, 2));
    ASSERT_TRUE(outcome.certificate.has_value());
    const auto& c = *outcome.certificate;
    EXPECT_EQ(c.r1, 2u);
    EXPECT_EQ(c.r2, 42u);
    EXPECT_TRUE(c.verified());
    EXPECT_TRUE(c.molien_match);
    EXPECT_EQ(c.molien_truncation, 200u);
    EXPECT_TRUE(c.theorem42_applicable);
    EXPECT_EQ(c.r2_subgroup, (std::vector<u64>{1, 4, 16, 42, 53, 64, 77, 83}));
    EXPECT_EQ(c.fingerprint.point_count, 2 * c.fingerprint.degree_bound + 1);
    EXPECT_EQ(c.fingerprint.values_sha256.size(), 64u);
}

TEST(Certify, RefutesIsomorphicAndNonIsospectralPairs) {
    const auto same = certify_pair(validate_type1(85, 16, 2), validate_type1(85, 16, 32));
    EXPECT_FALSE(same.certificate.has_value());
    EXPECT_FALSE(same.failures.empty());
    EXPECT_FALSE(same.attempted.non_isomorphic);

    for (const auto& g : enumerate_canonical(1360, 8)) {
        if (g.m != 85 || g.r == 2 || g.r == 42) continue;
        const auto other = certify_pair(validate_type1(85, 16, 2), g);
        EXPECT_FALSE(other.certificate.has_value());
        EXPECT_FALSE(other.attempted.fingerprint_match);
        EXPECT_FALSE(other.attempted.almost_conjugacy);
    }
    EXPECT_THROW(certify_pair(validate_type1(85, 16, 2), validate_type1(85, 16, 13)), Error);  // d = 4

    EXPECT_THROW(certify_pair(validate_type1(85, 16, 2), validate_type1(5, 272, 4)), Error);
    EXPECT_THROW(certify_pair(validate_type1(1, 16, 0), validate_type1(1, 16, 0)), Error);
}

TEST(Certify, JsonAndCsv) {
    const auto c = *certify_pair(validate_type1(85, 16, 2), validate_type1(85, 16, 42)).certificate;
    const auto j = to_json(c);
    EXPECT_EQ(j["N"], 1360);
    EXPECT_EQ(j["non_isomorphism"]["holds"], true);
    EXPECT_EQ(j["fingerprint_match"]["p"], 1000000000000431361ULL);
    EXPECT_EQ(j["almost_conjugacy"], true);
    EXPECT_EQ(to_csv(std::span(&c, 1)), "N,m,n,d,r1,r2,theorem42\n1360,85,16,8,2,42,true\n");
    EXPECT_EQ(to_csv({}), "N,m,n,d,r1,r2,theorem42\n");
}

TEST(Search, FirstRows) {
    SearchConfig config;
    config.n_max = 1000;
    config.k_molien = 0;
    EXPECT_TRUE(run_search(config).empty());
    config.n_max = 1360;
    const auto first = run_search(config);
    ASSERT_EQ(first.size(), 1u);
    EXPECT_EQ(std::tie(first[0].order, first[0].m, first[0].n, first[0].d, first[0].r1, first[0].r2),
              std::make_tuple(1360ULL, 85ULL, 16ULL, 8ULL, 2ULL, 42ULL));
    config.n_max = 3600;
    config.jobs = 3;
    const auto rows = run_search(config);
    std::vector<std::array<u64, 6>> got;
    for (const auto& c : rows) {
        EXPECT_TRUE(c.verified());
        got.push_back({c.order, c.m, c.n, c.d, c.r1, c.r2});
    }
    EXPECT_EQ(got, (std::vector<std::array<u64, 6>>{{1360, 85, 16, 8, 2, 42},
                                                     {2720, 85, 32, 16, 3, 12},
                                                     {3280, 205, 16, 8, 3, 68},
                                                     {3536, 221, 16, 8, 8, 138}}));
}

TEST(Search, OutputsAreDeterministicAndMatchCertifyPair) {
    SearchConfig config;
    config.n_max = 1360;
    const auto a = scratch_dir("a");
    const auto b = scratch_dir("b");
    config.output_path = a;
    run_search(config);
    config.output_path = b;
    config.jobs = 2;
    run_search(config);
    const std::string name = "certificates/1360_85_16_8_2_42.json";
    EXPECT_EQ(slurp(a / "table.csv"), slurp(b / "table.csv"));
    EXPECT_EQ(slurp(a / name), slurp(b / name));
    EXPECT_EQ(slurp(a / "table.csv"), "N,m,n,d,r1,r2,theorem42\n1360,85,16,8,2,42,true\n");

    const auto c = scratch_dir("c");
    const auto cert = *certify_pair(validate_type1(85, 16, 2), validate_type1(85, 16, 42)).certificate;
    write_search_outputs(c, std::span(&cert, 1));
    EXPECT_EQ(slurp(a / name), slurp(c / name));
    for (const auto& dir : {a, b, c}) std::filesystem::remove_all(dir);
}

TEST(Construct, SmallestModulus) {
    EXPECT_TRUE(construct_theorem42_pairs(84).empty());
    const auto pairs = construct_theorem42_pairs(85);
    // m = 85 carries two families: d = 8 and d = 16.
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(std::tie(pairs[0].m, pairs[0].n, pairs[0].r1, pairs[0].r2), std::make_tuple(85ULL, 16ULL, 2ULL, 42ULL));
    EXPECT_EQ(std::tie(pairs[1].m, pairs[1].n, pairs[1].r1, pairs[1].r2), std::make_tuple(85ULL, 32ULL, 3ULL, 12ULL));
    for (const auto& p : pairs) {
        EXPECT_TRUE(p.theorem42_applicable);
        EXPECT_TRUE(p.verified());
    }
    const u64 eight[] = {8};
    EXPECT_EQ(construct_theorem42_pairs(85, eight).size(), 1u);
}

TEST(Construct, DFourGivesNothing) {
    const u64 four[] = {4};
    EXPECT_TRUE(theorem42_candidates(600, four).empty());
    const u64 two[] = {2};
    EXPECT_TRUE(theorem42_candidates(600, two).empty());
}

TEST(Construct, CandidatesAreTheRelation) {
    // Every candidate is a pair of non-isomorphic classes with r1 r2' = -1 for some representative r2'.
    for (const auto& c : theorem42_candidates(1000)) {
        const auto g1 = validate_type1(c.m, 2 * c.d, c.r1);
        const auto g2 = validate_type1(c.m, 2 * c.d, c.r2);
        EXPECT_FALSE(is_isomorphic(g1, g2));
        EXPECT_TRUE(theorem42_applicable(g1, g2));
        bool witnessed = false;
        for (u64 e = 1, x = c.r2; e <= c.d; ++e, x = nt::mulmod(x, c.r2, c.m))
            witnessed |= nt::mulmod(c.r1, x, c.m) == c.m - 1;
        EXPECT_TRUE(witnessed);
    }
}

TEST(Crosscheck, Examples) {
    EXPECT_TRUE(crosscheck_table({}).empty());
    PairCertificate row;
    row.order = 3536;
    row.m = 221;
    row.n = 16;
    row.d = 8;
    row.r1 = 8;
    row.r2 = 138;
    const auto report = crosscheck_table(std::span(&row, 1));
    ASSERT_EQ(report.size(), 1u);
    EXPECT_TRUE(report[0].n_is_2d);
    EXPECT_TRUE(report[0].product_is_minus_one);
    EXPECT_TRUE(report[0].applicable);
    EXPECT_EQ(8 * 138 % 221, 220);
}

TEST(NegativeD2, OnlyMinusOne) {
    EXPECT_TRUE(negative_d2_check(0));
    EXPECT_TRUE(negative_d2_check(3000));
    for (u64 N = 4; N <= 3000; ++N) {
        const auto list = enumerate_canonical(N, 2);
        for (const auto& g : list) EXPECT_EQ(g.r, g.m - 1);
        EXPECT_LE(list.size(), 1u + nt::divisors(N).size());
    }
}
