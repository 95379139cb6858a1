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

#include <random>

#include "teleport/statevec.h"

namespace {

using teleport::Amplitude;
using teleport::Labels;
using teleport::PureState;

PureState random_state(std::size_t qubits) {
    std::mt19937_64 rng(qubits);
    std::normal_distribution<double> g;
    Labels labels;
    for (std::size_t k = 0; k < qubits; ++k) {
        labels.push_back(static_cast<int>(k) + 1);
    }
    std::vector<Amplitude> amps(std::size_t{1} << qubits);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return PureState::normalized(labels, std::move(amps));
}

void BM_Hadamard(benchmark::State &state) {
    const PureState s = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport::apply_1q(s, 1, teleport::gates::H));
    }
}
BENCHMARK(BM_Hadamard)->DenseRange(2, 7);

void BM_Cnot(benchmark::State &state) {
    const PureState s = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport::apply_cnot(s, 1, 2));
    }
}
BENCHMARK(BM_Cnot)->DenseRange(2, 7);

void BM_BellMeasurement(benchmark::State &state) {
    const PureState s = random_state(static_cast<std::size_t>(state.range(0)));
    const auto bell = teleport::MeasurementBasis::bell();
    for (auto _ : state) {
        benchmark::DoNotOptimize(teleport::measure(s, {1, 2}, bell));
    }
}
BENCHMARK(BM_BellMeasurement)->DenseRange(2, 7);

}  // namespace
