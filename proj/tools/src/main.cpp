// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "spaceform/error.hpp"
#include "spaceform_cli/commands.hpp"

namespace {

using spaceform::cli::CommandResult;

int emit(const CommandResult& result, bool as_json) {
    if (as_json) {
        std::cout << result.envelope().dump(2) << '\n';
    } else {
        std::cout << spaceform::cli::render_text(result);
        for (const auto& line : result.diagnostics) std::cerr << line << '\n';
    }
    return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isospectral spherical space forms with Type I fundamental groups"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the full JSON result envelope");

    std::int64_t m = 0, n = 0, r = 0, r2 = 0;
    bool brute = false;
    std::string reps;
    std::uint64_t n_max = 0, m_max = 0, k_molien = 200;
    unsigned jobs = 1;
    std::string out;

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("m", m, "Order of A (odd)")->required();
        sub->add_option("n", n, "Order of B")->required();
        sub->add_option("r", r, "Twist: B A B^-1 = A^r")->required();
    };
    auto add_pair = [&](CLI::App* sub) {
        sub->add_option("m", m, "Order of A (odd)")->required();
        sub->add_option("n", n, "Order of B")->required();
        sub->add_option("r1", r, "Twist of the first group")->required();
        sub->add_option("r2", r2, "Twist of the second group")->required();
    };
    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Print the full JSON result envelope"); };

    auto* validate = app.add_subcommand("validate", "Check (m, n, r) and report d and fixed-point-freeness");
    add_group(validate);
    add_json(validate);

    auto* orders = app.add_subcommand("orders", "Set of element orders");
    add_group(orders);
    orders->add_flag("--brute", brute, "Also enumerate every element and compare");
    add_json(orders);

    auto* isomorphic = app.add_subcommand("isomorphic", "Decide whether two Type I groups are isomorphic");
    add_pair(isomorphic);
    add_json(isomorphic);

    auto* fingerprint = app.add_subcommand("fingerprint", "Certified generating-function fingerprint");
    add_group(fingerprint);
    fingerprint->add_option("--reps", reps, "Summands as k1,l1;k2,l2;... (default 1,1)");
    add_json(fingerprint);

    auto* certify = app.add_subcommand("certify-pair", "Certify that two space forms are isospectral");
    add_pair(certify);
    certify->add_option("--kmolien", k_molien, "Molien series truncation")->capture_default_str();
    certify->add_option("--out", out, "Also write the certificate below this directory");
    add_json(certify);

    auto* search = app.add_subcommand("search", "Exhaustive search for isospectral pairs up to order N");
    search->add_option("--nmax", n_max, "Largest group order")->required();
    search->add_option("--out", out, "Output directory for table.csv and certificates/")->required();
    search->add_option("--jobs", jobs, "Worker threads (0: all cores)")->capture_default_str();
    search->add_option("--kmolien", k_molien, "Molien series truncation")->capture_default_str();
    add_json(search);

    auto* construct = app.add_subcommand("construct", "Pairs with n = 2d and r1 r2 = -1 (mod m)");
    construct->add_option("--mmax", m_max, "Largest m")->required();
    construct->add_option("--kmolien", k_molien, "Molien series truncation")->capture_default_str();
    add_json(construct);

    auto* crosscheck = app.add_subcommand("crosscheck", "Check every search result against n = 2d, r1 r2 = -1");
    crosscheck->add_option("--nmax", n_max, "Largest group order")->required();
    crosscheck->add_option("--jobs", jobs, "Worker threads (0: all cores)")->capture_default_str();
    add_json(crosscheck);

    CLI11_PARSE(app, argc, argv);

    namespace cli = spaceform::cli;
    std::optional<spaceform::PrimePolicy> policy;
    try {
        policy = spaceform::PrimePolicy::from_environment();
    } catch (const std::exception& e) {
        return emit(cli::error_result(e.what()), as_json);
    }
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    CommandResult result;
    if (validate->parsed()) {
        result = cli::cmd_validate(m, n, r);
    } else if (orders->parsed()) {
        result = cli::cmd_orders(m, n, r, brute);
    } else if (isomorphic->parsed()) {
        result = cli::cmd_isomorphic(m, n, r, r2);
    } else if (fingerprint->parsed()) {
        result = cli::cmd_fingerprint(m, n, r, reps, *policy);
    } else if (certify->parsed()) {
        result = cli::cmd_certify_pair(m, n, r, r2, k_molien, *policy, out);
    } else if (search->parsed()) {
        result = cli::cmd_search(n_max, out, jobs, k_molien, *policy);
    } else if (construct->parsed()) {
        result = cli::cmd_construct(m_max, k_molien, *policy);
    } else {
        result = cli::cmd_crosscheck(n_max, jobs, *policy);
    }
    if (policy->seed) result.diagnostics.push_back("warning: SPACEFORM_PRIME_SEED set; output is seed dependent");
    return emit(result, as_json);
}
