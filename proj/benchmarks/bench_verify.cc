// Copyright 2026 The Teleport Audit Authors
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

#include <benchmark/benchmark.h>

#include "teleport/report.h"
#include "teleport/scenarios.h"

namespace {

void BM_Execute(benchmark::State &state, const char *name) {
    const teleport::Protocol p = teleport::builtin(name).protocol;
    const auto point = teleport::fixed_params(p.input.family).back();
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport::execute(p, point));
    }
}
BENCHMARK_CAPTURE(BM_Execute, bell_1q, "bell-1q");
BENCHMARK_CAPTURE(BM_Execute, p1_2q, "p1-2q");
BENCHMARK_CAPTURE(BM_Execute, p2_2q, "p2-2q");

void BM_VerifyScenario(benchmark::State &state, const char *name) {
    const teleport::ScenarioDef def = teleport::builtin(name);
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport::verify_builtin(def));
    }
}
BENCHMARK_CAPTURE(BM_VerifyScenario, w_1q, "w-1q");
BENCHMARK_CAPTURE(BM_VerifyScenario, p1_2q, "p1-2q");

void BM_VerifyAllJson(benchmark::State &state) {
    for (auto _ : state) {
        std::vector<teleport::VerificationReport> reports;
        for (const auto &name : teleport::builtin_names()) {
            reports.push_back(teleport::verify_builtin(teleport::builtin(name)));
        }
        benchmark::DoNotOptimize(teleport::ledger_json(reports, 2024, 5));
    }
}
BENCHMARK(BM_VerifyAllJson)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
