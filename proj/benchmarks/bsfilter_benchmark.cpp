// Copyright 2026 The bsfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numbers>
#include <vector>

#include "benchmark/benchmark.h"
#include "bsfilter/filter.hpp"
#include "bsfilter/measures.hpp"
#include "bsfilter/mode_expansion.hpp"
#include "bsfilter/optimize.hpp"
#include "bsfilter/states.hpp"

namespace {

std::vector<bsf::DensityMatrix4> sample_states(int n) {
    std::vector<bsf::DensityMatrix4> out;
    for (int i = 0; i < n; ++i) out.push_back(bsf::random_density(static_cast<std::uint64_t>(i), 4));
    return out;
}

void BM_concurrence(benchmark::State &state) {
    const auto states = sample_states(64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(bsf::concurrence(states[i++ % states.size()]));
}
BENCHMARK(BM_concurrence);

void BM_concurrence_spin_flip_product(benchmark::State &state) {
    const auto states = sample_states(64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(bsf::concurrence_roots_from_spin_flip_product(states[i++ % states.size()]));
}
BENCHMARK(BM_concurrence_spin_flip_product);

void BM_report(benchmark::State &state) {
    const auto states = sample_states(64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(bsf::report(states[i++ % states.size()]));
}
BENCHMARK(BM_report);

void BM_apply_filter(benchmark::State &state) {
    const auto rho = bsf::werner(0.8, 0.54);
    const bsf::FilterSettings s(0.8, 1.0, 0.8, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(bsf::apply_filter(rho, s));
}
BENCHMARK(BM_apply_filter);

void BM_mode_level_filter(benchmark::State &state) {
    const auto rho = bsf::random_density(3, 4);
    const bsf::FilterSettings s(0.7, 0.9, 0.6, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(bsf::mode_level_filter(rho, s));
}
BENCHMARK(BM_mode_level_filter);

void BM_unison_sweep_100(benchmark::State &state) {
    const auto rho = bsf::werner(0.8, 0.54);
    for (auto _ : state) {
        for (int i = 1; i <= 100; ++i) {
            const double eta = std::sqrt(i / 100.0);
            benchmark::DoNotOptimize(bsf::report(bsf::apply_filter(rho, {eta, 1.0, eta, 1.0}).state));
        }
    }
}
BENCHMARK(BM_unison_sweep_100)->Unit(benchmark::kMicrosecond);

void BM_optimize(benchmark::State &state) {
    const auto rho = bsf::random_density(11, 3);
    bsf::OptimizeConfig cfg;
    cfg.mode = state.range(0) ? bsf::OptimizeMode::kSubsystemConstrained : bsf::OptimizeMode::kUnconstrainedEof;
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(bsf::optimize_eof(rho, cfg));
        } catch (const std::exception &) {
        }
    }
}
BENCHMARK(BM_optimize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
