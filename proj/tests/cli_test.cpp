// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "spaceform/number_theory.hpp"
#include "spaceform_cli/commands.hpp"

using namespace spaceform;
using namespace spaceform::cli;

TEST(Cli, Validate) {
    auto r = cmd_validate(85, 16, 2);
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.payload["d"], 8);
    EXPECT_EQ(r.payload["fpf"], true);
    r = cmd_validate(1, 4, 0);
    EXPECT_EQ(r.payload["d"], 1);
    EXPECT_EQ(r.payload["cyclic"], true);
    EXPECT_EQ(r.payload["fpf"], true);
    // ord_85(5) is undefined (gcd(5, 85) = 5), so 5^16 != 1 mod 85.
    r = cmd_validate(85, 16, 5);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.exit_code(), 1);
    EXPECT_EQ(r.payload["error"], "OrderViolation");
    EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Cli, ReducesRWithWarning) {
    const auto r = cmd_validate(85, 16, 87);
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.payload["r"], 2);
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_NE(r.diagnostics[0].find("warning"), std::string::npos);
}

TEST(Cli, Orders) {
    auto r = cmd_orders(5, 4, 4, false);
    EXPECT_EQ(r.payload["orders"].dump(), "[1,2,4,5,10]");
    r = cmd_orders(1, 6, 0, false);
    EXPECT_EQ(r.payload["orders"].dump(), "[1,2,3,6]");
    r = cmd_orders(85, 16, 2, true);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.payload["equal"], true);
    EXPECT_FALSE(cmd_orders(5, 2, 4, false).ok);
}

TEST(Cli, Isomorphic) {
    EXPECT_EQ(cmd_isomorphic(85, 16, 2, 42).payload["isomorphic"], false);
    EXPECT_EQ(cmd_isomorphic(85, 16, 2, 2).payload["isomorphic"], true);
    EXPECT_EQ(cmd_isomorphic(85, 16, 2, 32).payload["isomorphic"], true);
}

TEST(Cli, Fingerprint) {
    const auto r = cmd_fingerprint(85, 16, 2, "", PrimePolicy{});
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.payload["reps"].dump(), "[[1,1]]");
    EXPECT_EQ(r.payload["points"].size(), 2u * (16 * 1360 + 2) + 1);
    const auto two = cmd_fingerprint(7, 9, 2, "1,1;2,4", PrimePolicy{});
    ASSERT_TRUE(two.ok);
    EXPECT_EQ(two.payload["reps"].dump(), "[[1,1],[2,4]]");
    EXPECT_FALSE(cmd_fingerprint(7, 9, 2, "1;2", PrimePolicy{}).ok);
    EXPECT_FALSE(cmd_fingerprint(7, 9, 2, "1,3", PrimePolicy{}).ok);
    EXPECT_FALSE(cmd_fingerprint(5, 2, 4, "", PrimePolicy{}).ok);
}

TEST(Cli, CertifyPair) {
    auto r = cmd_certify_pair(85, 16, 2, 42, 200, PrimePolicy{}, {});
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.payload["almost_conjugacy"], true);
    r = cmd_certify_pair(85, 16, 2, 32, 200, PrimePolicy{}, {});
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.diagnostics.at(0).find("refuted"), std::string::npos);
    EXPECT_EQ(r.payload["non_isomorphism"]["holds"], false);
}

TEST(Cli, SearchConstructCrosscheck) {
    const auto dir = std::filesystem::temp_directory_path() / "spaceform_cli_test_search";
    std::filesystem::remove_all(dir);
    auto r = cmd_search(1400, dir, 1, 0, PrimePolicy{});
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(r.payload["rows"], 1);
    EXPECT_TRUE(std::filesystem::exists(dir / "table.csv"));
    std::filesystem::remove_all(dir);
    EXPECT_FALSE(cmd_search(0, dir, 1, 0, PrimePolicy{}).ok);

    r = cmd_construct(85, 0, PrimePolicy{});
    EXPECT_EQ(r.payload["table"].dump(), "[[1360,85,16,8,2,42,true],[2720,85,32,16,3,12,true]]");
    r = cmd_crosscheck(1400, 1, PrimePolicy{});
    EXPECT_EQ(r.payload["all_applicable"], true);
    EXPECT_EQ(r.payload["report"][0]["product_is_minus_one"], true);
}

TEST(Cli, EnvelopeAndText) {
    const auto r = cmd_isomorphic(85, 16, 2, 42);
    const auto e = r.envelope();
    EXPECT_EQ(e["status"], "ok");
    EXPECT_TRUE(e["diagnostics"].is_array());
    EXPECT_NE(render_text(r).find("isomorphic: false"), std::string::npos);
    const auto bad = error_result("boom");
    EXPECT_EQ(bad.envelope()["status"], "error");
    EXPECT_EQ(bad.exit_code(), 1);
}
