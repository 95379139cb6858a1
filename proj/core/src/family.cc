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

#include "teleport/family.h"

#include <cmath>
#include <random>

#include "teleport/tolerances.h"

namespace teleport {

namespace {

const Amplitude kI{0, 1};

}  // namespace

std::string_view family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::kSingle:
            return "single";
        case FamilyKind::kTwoQubitNonmax:
            return "twoqubit-nonmax";
        case FamilyKind::kTwoQubitNonmaxVariant:
            return "twoqubit-nonmax-variant";
        case FamilyKind::kTwoQubitSymmetric:
            return "twoqubit-symmetric";
        case FamilyKind::kGeneralTwo:
            return "general-two";
    }
    return "?";
}

std::vector<FamilyKind> all_families() {
    return {FamilyKind::kSingle, FamilyKind::kTwoQubitNonmax, FamilyKind::kTwoQubitNonmaxVariant,
            FamilyKind::kTwoQubitSymmetric, FamilyKind::kGeneralTwo};
}

FamilyKind parse_family(std::string_view name) {
    for (FamilyKind k : all_families()) {
        if (family_name(k) == name) {
            return k;
        }
    }
    throw ConstraintError("unknown input family '" + std::string(name) + "'");
}

std::size_t family_qubits(FamilyKind kind) {
    return kind == FamilyKind::kSingle ? 1 : 2;
}

std::size_t family_param_count(FamilyKind kind) {
    return kind == FamilyKind::kGeneralTwo ? 4 : 2;
}

std::vector<std::string> family_symbols(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::kTwoQubitSymmetric:
            return {"α", "γ"};
        case FamilyKind::kGeneralTwo:
            return {"α", "β", "γ", "δ"};
        default:
            return {"α", "β"};
    }
}

std::vector<double> family_weights(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::kSingle:
            return {1, 1};
        case FamilyKind::kTwoQubitNonmax:
        case FamilyKind::kTwoQubitNonmaxVariant:
            return {1, 2};
        case FamilyKind::kTwoQubitSymmetric:
            return {2, 2};
        case FamilyKind::kGeneralTwo:
            return {1, 1, 1, 1};
    }
    return {};
}

void check_constraint(FamilyKind kind, const ParamPoint &point) {
    if (point.values.size() != family_param_count(kind)) {
        throw ConstraintError(
            std::string(family_name(kind)) + " takes " + std::to_string(family_param_count(kind)) +
            " parameters, got " + std::to_string(point.values.size()));
    }
    double total = 0;
    auto weights = family_weights(kind);
    for (std::size_t k = 0; k < point.values.size(); k++) {
        const Amplitude &v = point.values[k];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ConstraintError("non-finite parameter");
        }
        total += weights[k] * std::norm(v);
    }
    if (std::abs(total - 1.0) > kConstraintTolerance) {
        throw ConstraintError(
            std::string(family_name(kind)) + " constraint violated: weighted norm " + std::to_string(total));
    }
}

PureState family_state(FamilyKind kind, const ParamPoint &point, const Labels &labels) {
    check_constraint(kind, point);
    if (labels.size() != family_qubits(kind)) {
        throw LabelError(std::string(family_name(kind)) + " lives on " + std::to_string(family_qubits(kind)) + " qubits");
    }
    const auto &p = point.values;
    std::vector<Amplitude> amps;
    switch (kind) {
        case FamilyKind::kSingle:
            amps = {p[0], p[1]};
            break;
        case FamilyKind::kTwoQubitNonmax:
            amps = {p[0], p[1], p[1], 0};
            break;
        case FamilyKind::kTwoQubitNonmaxVariant:
            amps = {0, p[1], p[1], p[0]};
            break;
        case FamilyKind::kTwoQubitSymmetric:
            amps = {p[0], p[1], p[1], p[0]};
            break;
        case FamilyKind::kGeneralTwo:
            // a|00> + b|11> + g|01> + d|10>
            amps = {p[0], p[2], p[3], p[1]};
            break;
    }
    return PureState::normalized(labels, std::move(amps));
}

std::vector<ParamPoint> family_basis_points(FamilyKind kind) {
    auto weights = family_weights(kind);
    std::vector<ParamPoint> points;
    for (std::size_t k = 0; k < weights.size(); k++) {
        ParamPoint p{std::vector<Amplitude>(weights.size(), 0)};
        p.values[k] = 1.0 / std::sqrt(weights[k]);
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<ParamPoint> fixed_params(FamilyKind kind) {
    const double r2 = 1 / std::sqrt(2.0);
    const double r3 = 1 / std::sqrt(3.0);
    switch (kind) {
        case FamilyKind::kSingle:
            return {{{1, 0}}, {{0, 1}}, {{r2, r2}}, {{r2, kI * r2}}, {{0.6, 0.8}}};
        case FamilyKind::kTwoQubitNonmax:
        case FamilyKind::kTwoQubitNonmaxVariant:
            return {{{1, 0}}, {{0, r2}}, {{r3, r3}}, {{r3, kI * r3}}, {{0.6, 0.8 * r2}}};
        case FamilyKind::kTwoQubitSymmetric:
            return {{{r2, 0}}, {{0, r2}}, {{0.5, 0.5}}, {{0.5, kI * 0.5}}, {{0.6 * r2, 0.8 * r2}}};
        case FamilyKind::kGeneralTwo:
            return {{{1, 0, 0, 0}},
                    {{0, 0, 0, 1}},
                    {{0.5, 0.5, 0.5, 0.5}},
                    {{0.5, kI * 0.5, -0.5, -kI * 0.5}},
                    {{0.6, 0, 0, 0.8}}};
    }
    return {};
}

std::vector<ParamPoint> sample_params(FamilyKind kind, std::size_t n, std::uint64_t seed) {
    std::vector<ParamPoint> points = fixed_params(kind);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto weights = family_weights(kind);
    for (std::size_t i = 0; i < n; i++) {
        ParamPoint p;
        double total = 0;
        for (double w : weights) {
            double re = gauss(rng);
            double im = gauss(rng);
            p.values.emplace_back(re, im);
            total += w * (re * re + im * im);
        }
        const double scale = 1 / std::sqrt(total);
        for (auto &v : p.values) {
            v *= scale;
        }
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace teleport
