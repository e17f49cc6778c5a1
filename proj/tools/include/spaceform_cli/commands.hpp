// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spaceform/spectra.hpp"

namespace spaceform::cli {

struct CommandResult {
    bool ok = true;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    std::vector<std::string> diagnostics;

    /// {"status": "ok"|"error", "payload": ..., "diagnostics": [...]}
    nlohmann::ordered_json envelope() const;
    int exit_code() const noexcept { return ok ? 0 : 1; }
};

CommandResult error_result(const std::string& message);

CommandResult cmd_validate(std::int64_t m, std::int64_t n, std::int64_t r);
CommandResult cmd_orders(std::int64_t m, std::int64_t n, std::int64_t r, bool brute);
CommandResult cmd_isomorphic(std::int64_t m, std::int64_t n, std::int64_t r1, std::int64_t r2);

/// `reps` is "k1,l1;k2,l2;..." (empty: 1,1).
CommandResult cmd_fingerprint(std::int64_t m, std::int64_t n, std::int64_t r, const std::string& reps,
                              const PrimePolicy& policy);

/// With a non-empty `out`, also writes the certificate under out/certificates/
/// using the file name the search uses.
CommandResult cmd_certify_pair(std::int64_t m, std::int64_t n, std::int64_t r1, std::int64_t r2,
                               std::uint64_t k_molien, const PrimePolicy& policy, const std::filesystem::path& out);

CommandResult cmd_search(std::uint64_t n_max, const std::filesystem::path& out, unsigned jobs,
                         std::uint64_t k_molien, const PrimePolicy& policy);

CommandResult cmd_construct(std::uint64_t m_max, std::uint64_t k_molien, const PrimePolicy& policy);

/// Runs the search up to n_max and reports, per pair, whether n = 2d and r1 r2 = -1 (mod m).
CommandResult cmd_crosscheck(std::uint64_t n_max, unsigned jobs, const PrimePolicy& policy);

/// Plain-text rendering: one "key: value" line per payload entry.
std::string render_text(const CommandResult& result);

}  // namespace spaceform::cli
