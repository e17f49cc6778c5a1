// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform_cli/commands.hpp"

#include <sstream>

#include "spaceform/error.hpp"
#include "spaceform/groups.hpp"
#include "spaceform/number_theory.hpp"
#include "spaceform/search.hpp"

namespace spaceform::cli {

using json = nlohmann::ordered_json;

json CommandResult::envelope() const {
    json j;
    j["status"] = ok ? "ok" : "error";
    j["payload"] = payload;
    j["diagnostics"] = diagnostics;
    return j;
}

CommandResult error_result(const std::string& message) {
    CommandResult result;
    result.ok = false;
    result.payload = nullptr;
    result.diagnostics.push_back(message);
    return result;
}

namespace {

// Reduces r into [0, m) (0 when m = 1) and notes the change.
std::int64_t reduce_r(std::int64_t m, std::int64_t r, CommandResult& result) {
    if (m < 1) return r;
    const std::int64_t reduced = m == 1 ? 0 : static_cast<std::int64_t>(nt::reduce(r, static_cast<std::uint64_t>(m)));
    if (reduced != r) {
        result.diagnostics.push_back("warning: r = " + std::to_string(r) + " reduced mod m to " +
                                     std::to_string(reduced));
    }
    return reduced;
}

json group_json(const TypeIParams& g) {
    return json{{"m", g.m}, {"n", g.n}, {"d", g.d}, {"r", g.r}};
}

template <class F>
CommandResult guarded(F&& body) {
    CommandResult result;
    try {
        body(result);
    } catch (const Error& e) {
        result.ok = false;
        result.payload = json{{"error", std::string(to_string(e.code()))}};
        result.diagnostics.emplace_back(e.what());
    } catch (const std::exception& e) {
        result.ok = false;
        result.payload = nullptr;
        result.diagnostics.emplace_back(e.what());
    }
    return result;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_reps(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> reps;
    if (text.empty()) return {{1, 1}};
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        const auto comma = item.find(',');
        if (comma == std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, "representation '" + item + "' is not of the form k,l");
        }
        try {
            std::size_t used_k = 0, used_l = 0;
            const std::string k = item.substr(0, comma), l = item.substr(comma + 1);
            reps.emplace_back(std::stoll(k, &used_k), std::stoll(l, &used_l));
            if (used_k != k.size() || used_l != l.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidArgument, "representation '" + item + "' is not of the form k,l");
        }
    }
    if (reps.empty()) throw Error(ErrorCode::InvalidArgument, "no representations given");
    return reps;
}

json certificate_row(const PairCertificate& c) {
    return json::array({c.order, c.m, c.n, c.d, c.r1, c.r2, c.theorem42_applicable});
}

std::string certificate_file_name(const PairCertificate& c) {
    return std::to_string(c.order) + "_" + std::to_string(c.m) + "_" + std::to_string(c.n) + "_" +
           std::to_string(c.d) + "_" + std::to_string(c.r1) + "_" + std::to_string(c.r2) + ".json";
}

}  // namespace

CommandResult cmd_validate(std::int64_t m, std::int64_t n, std::int64_t r) {
    return guarded([&](CommandResult& result) {
        const auto g = validate_type1(m, n, reduce_r(m, r, result));
        result.payload = group_json(g);
        result.payload["fpf"] = is_fixed_point_free(g);
        result.payload["cyclic"] = g.is_cyclic();
        result.payload["order"] = g.order();
    });
}

CommandResult cmd_orders(std::int64_t m, std::int64_t n, std::int64_t r, bool brute) {
    return guarded([&](CommandResult& result) {
        const auto g = validate_type1(m, n, reduce_r(m, r, result));
        const auto formula = order_set_formula(g);
        result.payload = group_json(g);
        result.payload["orders"] = formula;
        if (brute) {
            const auto enumerated = order_set_bruteforce(g);
            result.payload["brute"] = enumerated;
            result.payload["equal"] = formula == enumerated;
            if (formula != enumerated) {
                result.ok = false;
                result.diagnostics.emplace_back("order set formula disagrees with enumeration");
            }
        }
    });
}

CommandResult cmd_isomorphic(std::int64_t m, std::int64_t n, std::int64_t r1, std::int64_t r2) {
    return guarded([&](CommandResult& result) {
        const auto g1 = validate_type1(m, n, reduce_r(m, r1, result));
        const auto g2 = validate_type1(m, n, reduce_r(m, r2, result));
        result.payload = json{{"m", g1.m}, {"n", g1.n}, {"r1", g1.r}, {"r2", g2.r}, {"d1", g1.d}, {"d2", g2.d}};
        result.payload["isomorphic"] = is_isomorphic(g1, g2);
        result.payload["canonical_r1"] = canonical_r(g1.m, g1.r, g1.d);
        result.payload["canonical_r2"] = canonical_r(g2.m, g2.r, g2.d);
    });
}

CommandResult cmd_fingerprint(std::int64_t m, std::int64_t n, std::int64_t r, const std::string& reps,
                              const PrimePolicy& policy) {
    return guarded([&](CommandResult& result) {
        const auto g = validate_type1(m, n, reduce_r(m, r, result));
        if (!is_fixed_point_free(g)) throw Error(ErrorCode::NotFixedPointFree, to_string(g));
        const auto parsed = parse_reps(reps);
        result.payload = to_json(certified_fingerprint(make_sum_rep(g, parsed), policy));
    });
}

CommandResult cmd_certify_pair(std::int64_t m, std::int64_t n, std::int64_t r1, std::int64_t r2,
                               std::uint64_t k_molien, const PrimePolicy& policy, const std::filesystem::path& out) {
    return guarded([&](CommandResult& result) {
        const auto g1 = validate_type1(m, n, reduce_r(m, r1, result));
        const auto g2 = validate_type1(m, n, reduce_r(m, r2, result));
        const auto outcome = certify_pair(g1, g2, CertifyOptions{policy, k_molien});
        result.payload = to_json(outcome.attempted);
        if (!outcome.certificate) {
            result.ok = false;
            for (const auto& f : outcome.failures) result.diagnostics.push_back("refuted: " + f);
            return;
        }
        if (!out.empty()) {
            write_search_outputs(out, std::span(&*outcome.certificate, 1));
            result.diagnostics.push_back("wrote " +
                                         (out / "certificates" / certificate_file_name(*outcome.certificate)).string());
        }
    });
}

CommandResult cmd_search(std::uint64_t n_max, const std::filesystem::path& out, unsigned jobs,
                         std::uint64_t k_molien, const PrimePolicy& policy) {
    return guarded([&](CommandResult& result) {
        if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "--nmax must be at least 1");
        SearchConfig config;
        config.n_max = n_max;
        config.k_molien = k_molien;
        config.prime_policy = policy;
        config.jobs = jobs;
        config.output_path = out;
        SearchStats stats;
        const auto certs = run_search(config, &stats);
        result.payload["nmax"] = n_max;
        result.payload["rows"] = certs.size();
        result.payload["groups"] = stats.groups;
        result.payload["invariant_bucketed"] = stats.invariant_buckets;
        result.payload["fingerprinted"] = stats.fingerprinted;
        json table = json::array();
        for (const auto& c : certs) table.push_back(certificate_row(c));
        result.payload["table"] = std::move(table);
        if (!out.empty()) result.payload["out"] = out.string();
    });
}

CommandResult cmd_construct(std::uint64_t m_max, std::uint64_t k_molien, const PrimePolicy& policy) {
    return guarded([&](CommandResult& result) {
        if (m_max < 1) throw Error(ErrorCode::InvalidArgument, "--mmax must be at least 1");
        const auto certs = construct_theorem42_pairs(m_max, {}, CertifyOptions{policy, k_molien});
        result.payload["mmax"] = m_max;
        result.payload["pairs"] = certs.size();
        json table = json::array();
        for (const auto& c : certs) table.push_back(certificate_row(c));
        result.payload["table"] = std::move(table);
    });
}

CommandResult cmd_crosscheck(std::uint64_t n_max, unsigned jobs, const PrimePolicy& policy) {
    return guarded([&](CommandResult& result) {
        if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "--nmax must be at least 1");
        SearchConfig config;
        config.n_max = n_max;
        config.k_molien = 0;
        config.prime_policy = policy;
        config.jobs = jobs;
        const auto certs = run_search(config);
        json report = json::array();
        std::size_t applicable = 0;
        for (const auto& e : crosscheck_table(certs)) {
            if (e.applicable) ++applicable;
            report.push_back(json{{"N", e.pair.order},
                                  {"m", e.pair.m},
                                  {"n", e.pair.n},
                                  {"d", e.pair.d},
                                  {"r1", e.pair.r1},
                                  {"r2", e.pair.r2},
                                  {"n_is_2d", e.n_is_2d},
                                  {"product_is_minus_one", e.product_is_minus_one},
                                  {"applicable", e.applicable}});
        }
        result.payload["nmax"] = n_max;
        result.payload["pairs"] = certs.size();
        result.payload["applicable"] = applicable;
        result.payload["all_applicable"] = applicable == certs.size();
        result.payload["report"] = std::move(report);
    });
}

std::string render_text(const CommandResult& result) {
    std::ostringstream out;
    out << "status: " << (result.ok ? "ok" : "error") << '\n';
    if (result.payload.is_object()) {
        for (const auto& [key, value] : result.payload.items()) {
            if (value.is_array() && !value.empty() && value.front().is_structured()) {
                out << key << ":\n";
                for (const auto& row : value) out << "  " << row.dump() << '\n';
            } else {
                out << key << ": " << value.dump() << '\n';
            }
        }
    } else if (!result.payload.is_null()) {
        out << result.payload.dump() << '\n';
    }
    return out.str();
}

}  // namespace spaceform::cli
