// Copyright 2026 The qcommit Authors
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


// Serial reference versus OpenMP kernels and trial runner.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qcommit/gf2.h"
#include "qcommit/harness.h"
#include "qcommit/kernels.h"

namespace {

using namespace qcommit;

std::vector<BasisTerm> make_terms(size_t count) {
    std::mt19937_64 rng(1);
    std::vector<BasisTerm> terms;
    terms.reserve(count);
    for (size_t k = 0; k < count; k++) {
        terms.push_back({rng() & low_mask(40), {0.5, -0.5}});
    }
    return terms;
}

uint64_t mask(uint64_t label) {
    uint64_t y = (label >> 20) & 0xfffff;
    return (y * 5 + 3) & 0xfffff;
}

void BM_xor_relabel_serial(benchmark::State &state) {
    auto terms = make_terms(state.range(0));
    for (auto _ : state) {
        kernels::xor_relabel_serial(terms, mask);
        benchmark::DoNotOptimize(terms.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_xor_relabel_parallel(benchmark::State &state) {
    auto terms = make_terms(state.range(0));
    for (auto _ : state) {
        kernels::xor_relabel_parallel(terms, mask);
        benchmark::DoNotOptimize(terms.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_norm_squared_serial(benchmark::State &state) {
    auto terms = make_terms(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::norm_squared_serial(terms));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_norm_squared_parallel(benchmark::State &state) {
    auto terms = make_terms(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::norm_squared_parallel(terms));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

ScenarioConfig novy_attack_config() {
    ScenarioConfig c;
    c.protocol = Protocol::kNovyAttack;
    c.n = 8;
    c.psi = {Amplitude(0.6), Amplitude(0, 0.8)};
    return c;
}

void BM_run_trials_serial(benchmark::State &state) {
    ScenarioConfig c = novy_attack_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials_serial(c, state.range(0), 1).accepted);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_run_trials_parallel(benchmark::State &state) {
    ScenarioConfig c = novy_attack_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(c, state.range(0), 1).accepted);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_xor_relabel_serial)->Range(1 << 12, 1 << 20)->UseRealTime();
BENCHMARK(BM_xor_relabel_parallel)->Range(1 << 12, 1 << 20)->UseRealTime();
BENCHMARK(BM_norm_squared_serial)->Range(1 << 12, 1 << 20)->UseRealTime();
BENCHMARK(BM_norm_squared_parallel)->Range(1 << 12, 1 << 20)->UseRealTime();
BENCHMARK(BM_run_trials_serial)->Arg(2000)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK(BM_run_trials_parallel)->Arg(2000)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
