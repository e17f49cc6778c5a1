// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "spaceform/search.hpp"
#include "spaceform/spectra.hpp"

namespace {

using namespace spaceform;

const TypeIParams& group(int which) {
    static const TypeIParams groups[] = {validate_type1(85, 16, 2), validate_type1(85, 32, 3),
                                         validate_type1(1853, 16, 76)};
    return groups[which];
}

void BM_CollectTerms(benchmark::State& state) {
    const auto rep = standard_rep(group(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(collect_terms(rep));
    state.counters["terms"] = static_cast<double>(collect_terms(rep).terms.size());
}
BENCHMARK(BM_CollectTerms)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EvaluatePoints(benchmark::State& state) {
    const auto& g = group(static_cast<int>(state.range(0)));
    const auto terms = collect_terms(standard_rep(g));
    const std::uint64_t L = exponent_modulus(g);
    const std::uint64_t p = PrimePolicy{}.fingerprint_prime(L);
    const std::uint64_t root = primitive_root_of_unity(p, L);
    const auto points = deterministic_points(p, L, 1024);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_generating_function(terms, p, root, points));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * points.size()));
}
BENCHMARK(BM_EvaluatePoints)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CertifySmallestPair(benchmark::State& state) {
    const auto g1 = validate_type1(85, 16, 2);
    const auto g2 = validate_type1(85, 16, 42);
    for (auto _ : state) benchmark::DoNotOptimize(certify_pair(g1, g2));
}
BENCHMARK(BM_CertifySmallestPair)->Unit(benchmark::kMillisecond);

void BM_EnumerateCanonical(benchmark::State& state) {
    const auto order = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_canonical(order));
}
BENCHMARK(BM_EnumerateCanonical)->Arg(1360)->Arg(17680)->Arg(29648);

void BM_Molien(benchmark::State& state) {
    const auto rep = standard_rep(group(0));
    for (auto _ : state) benchmark::DoNotOptimize(molien_coefficients(rep, 200));
}
BENCHMARK(BM_Molien)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
