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

#include "teleport/statevec.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "teleport/tolerances.h"

namespace teleport {

namespace {

std::string label_list(const Labels &labels) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < labels.size(); k++) {
        out << (k ? "," : "") << labels[k];
    }
    out << ")";
    return out.str();
}

void check_distinct(const Labels &labels) {
    std::set<Label> seen;
    for (Label l : labels) {
        if (!seen.insert(l).second) {
            throw LabelError("duplicate qubit label " + std::to_string(l) + " in " + label_list(labels));
        }
    }
}

void check_shape(const Labels &labels, const std::vector<Amplitude> &amps) {
    check_distinct(labels);
    if (labels.size() > 20) {
        throw StateError("registers above 20 qubits are not supported");
    }
    if (amps.size() != (std::size_t{1} << labels.size())) {
        throw StateError(
            "expected " + std::to_string(std::size_t{1} << labels.size()) + " amplitudes for " +
            std::to_string(labels.size()) + " qubits, got " + std::to_string(amps.size()));
    }
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw StateError("non-finite amplitude");
        }
    }
}

double squared_norm(std::span<const Amplitude> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

// Bit of the basis index that stores the qubit at `position` in an n-qubit register.
inline std::size_t bit_of(std::size_t position, std::size_t n) {
    return std::size_t{1} << (n - 1 - position);
}

// Gate outputs must already have unit norm; anything further off than the
// tolerance is a bug, not rounding.
PureState checked(Labels labels, std::vector<Amplitude> amps, const char *op) {
    double n = std::sqrt(squared_norm(amps));
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw InvariantError(std::string(op) + " produced a state of norm " + std::to_string(n));
    }
    return PureState::normalized(std::move(labels), std::move(amps));
}

}  // namespace

PureState::PureState(Labels labels, std::vector<Amplitude> amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
    check_shape(labels_, amps_);
    double n = std::sqrt(squared_norm(amps_));
    if (std::abs(n - 1.0) > kNormTolerance) {
        throw StateError("state is not normalized (norm " + std::to_string(n) + ")");
    }
}

PureState PureState::normalized(Labels labels, std::vector<Amplitude> amplitudes) {
    check_shape(labels, amplitudes);
    double n = std::sqrt(squared_norm(amplitudes));
    if (n == 0) {
        throw StateError("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes) {
        a /= n;
    }
    PureState result;
    result.labels_ = std::move(labels);
    result.amps_ = std::move(amplitudes);
    return result;
}

PureState PureState::basis(Labels labels, std::string_view bits) {
    if (bits.size() != labels.size()) {
        throw StateError("basis string '" + std::string(bits) + "' does not match " + label_list(labels));
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw StateError("basis string must contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    amps[index] = 1.0;
    return PureState(std::move(labels), std::move(amps));
}

bool PureState::has_label(Label label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t PureState::position(Label label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw LabelError("qubit " + std::to_string(label) + " is not in register " + label_list(labels_));
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

double PureState::norm() const {
    return std::sqrt(squared_norm(amps_));
}

PureState PureState::reordered(const Labels &order) const {
    if (order.size() != labels_.size()) {
        throw LabelError("cannot reorder " + label_list(labels_) + " into " + label_list(order));
    }
    check_distinct(order);
    const std::size_t n = labels_.size();
    // source_pos[k] = position in this state of the qubit placed at k in the result.
    std::vector<std::size_t> source_pos(n);
    for (std::size_t k = 0; k < n; k++) {
        source_pos[k] = position(order[k]);
    }
    PureState result;
    result.labels_ = order;
    result.amps_.assign(amps_.size(), 0);
    for (std::size_t dst = 0; dst < amps_.size(); dst++) {
        std::size_t src = 0;
        for (std::size_t k = 0; k < n; k++) {
            if (dst & bit_of(k, n)) {
                src |= bit_of(source_pos[k], n);
            }
        }
        result.amps_[dst] = amps_[src];
    }
    return result;
}

namespace gates {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
const Amplitude kI{0, 1};
}  // namespace

const Matrix2 I{1, 0, 0, 1};
const Matrix2 X{0, 1, 1, 0};
const Matrix2 Y{0, -kI, kI, 0};
const Matrix2 Z{1, 0, 0, -1};
const Matrix2 H{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
const Matrix2 S{1, 0, 0, kI};

bool is_known(std::string_view name) {
    return name == "I" || name == "X" || name == "Y" || name == "Z" || name == "H" || name == "S";
}

const Matrix2 &by_name(std::string_view name) {
    if (name == "I") return I;
    if (name == "X") return X;
    if (name == "Y") return Y;
    if (name == "Z") return Z;
    if (name == "H") return H;
    if (name == "S") return S;
    throw StateError("unknown gate '" + std::string(name) + "'");
}

}  // namespace gates

bool is_unitary(const Matrix2 &u, double tolerance) {
    // u^dagger u == I
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            Amplitude v = std::conj(u[0 * 2 + r]) * u[0 * 2 + c] + std::conj(u[1 * 2 + r]) * u[1 * 2 + c];
            Amplitude expected = r == c ? 1.0 : 0.0;
            if (std::abs(v - expected) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

MeasurementBasis::MeasurementBasis(std::string name, std::size_t arity, std::vector<BasisVector> vectors)
    : name_(std::move(name)), arity_(arity), vectors_(std::move(vectors)) {
    const std::size_t dim = std::size_t{1} << arity_;
    if (vectors_.size() != dim) {
        throw BasisError(
            "basis '" + name_ + "' has " + std::to_string(vectors_.size()) + " vectors, needs " + std::to_string(dim));
    }
    for (const auto &v : vectors_) {
        if (v.vector.size() != dim) {
            throw BasisError("basis vector '" + v.label + "' has the wrong dimension");
        }
    }
    for (std::size_t a = 0; a < dim; a++) {
        for (std::size_t b = a; b < dim; b++) {
            Amplitude dot = 0;
            for (std::size_t k = 0; k < dim; k++) {
                dot += std::conj(vectors_[a].vector[k]) * vectors_[b].vector[k];
            }
            Amplitude expected = a == b ? 1.0 : 0.0;
            if (std::abs(dot - expected) > kBasisTolerance) {
                throw BasisError(
                    "basis '" + name_ + "' is not orthonormal at (" + vectors_[a].label + ", " + vectors_[b].label + ")");
            }
        }
    }
}

MeasurementBasis MeasurementBasis::computational(std::size_t arity) {
    const std::size_t dim = std::size_t{1} << arity;
    std::vector<BasisVector> vectors;
    vectors.reserve(dim);
    for (std::size_t k = 0; k < dim; k++) {
        std::string label(arity, '0');
        for (std::size_t b = 0; b < arity; b++) {
            if (k & bit_of(b, arity)) {
                label[b] = '1';
            }
        }
        std::vector<Amplitude> v(dim);
        v[k] = 1.0;
        vectors.push_back({std::move(label), std::move(v)});
    }
    return MeasurementBasis("computational", arity, std::move(vectors));
}

MeasurementBasis MeasurementBasis::bell() {
    const double r = gates::kInvSqrt2;
    return MeasurementBasis(
        "bell", 2,
        {
            {"Phi+", {r, 0, 0, r}},
            {"Phi-", {r, 0, 0, -r}},
            {"Psi+", {0, r, r, 0}},
            {"Psi-", {0, r, -r, 0}},
        });
}

MeasurementBasis MeasurementBasis::plus_minus() {
    // |+> = (|0> + |1>)/sqrt2, |-> = (|0> - |1>)/sqrt2; first symbol is the first qubit.
    auto product = [](int s1, int s2) {
        return std::vector<Amplitude>{0.5, 0.5 * s2, 0.5 * s1, 0.5 * s1 * s2};
    };
    return MeasurementBasis(
        "pm", 2,
        {
            {"++", product(+1, +1)},
            {"-+", product(-1, +1)},
            {"--", product(-1, -1)},
            {"+-", product(+1, -1)},
        });
}

bool MeasurementBasis::is_known(std::string_view name) {
    return name == "computational" || name == "bell" || name == "pm";
}

MeasurementBasis MeasurementBasis::by_name(std::string_view name, std::size_t arity) {
    if (name == "computational") {
        return computational(arity);
    }
    if (name == "bell" || name == "pm") {
        if (arity != 2) {
            throw BasisError("basis '" + std::string(name) + "' measures exactly 2 qubits, not " + std::to_string(arity));
        }
        return name == "bell" ? bell() : plus_minus();
    }
    throw BasisError("unknown basis '" + std::string(name) + "'");
}

PureState tensor(const PureState &a, const PureState &b) {
    for (Label l : b.labels()) {
        if (a.has_label(l)) {
            throw LabelError("label conflict: qubit " + std::to_string(l) + " is in both registers");
        }
    }
    Labels labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::vector<Amplitude> amps(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); i++) {
        for (std::size_t j = 0; j < b.dimension(); j++) {
            amps[i * b.dimension() + j] = a[i] * b[j];
        }
    }
    return checked(std::move(labels), std::move(amps), "tensor");
}

PureState apply_1q(const PureState &s, Label label, const Matrix2 &u) {
    if (!is_unitary(u, kUnitaryTolerance)) {
        throw StateError("gate matrix is not unitary");
    }
    const std::size_t bit = bit_of(s.position(label), s.num_qubits());
    std::vector<Amplitude> out(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); i++) {
        if (i & bit) {
            continue;
        }
        const Amplitude a0 = s[i];
        const Amplitude a1 = s[i | bit];
        out[i] = u[0] * a0 + u[1] * a1;
        out[i | bit] = u[2] * a0 + u[3] * a1;
    }
    return checked(s.labels(), std::move(out), "apply_1q");
}

PureState apply_cnot(const PureState &s, Label control, Label target) {
    if (control == target) {
        throw LabelError("CNOT control and target are both qubit " + std::to_string(control));
    }
    const std::size_t n = s.num_qubits();
    const std::size_t cbit = bit_of(s.position(control), n);
    const std::size_t tbit = bit_of(s.position(target), n);
    std::vector<Amplitude> out(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t i = 0; i < out.size(); i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(out[i], out[i | tbit]);
        }
    }
    return PureState(s.labels(), std::move(out));
}

std::vector<Branch> measure(const PureState &s, const Labels &labels, const MeasurementBasis &basis) {
    if (basis.arity() != labels.size()) {
        throw BasisError(
            "basis '" + basis.name() + "' has arity " + std::to_string(basis.arity()) + " but " +
            std::to_string(labels.size()) + " qubits are measured");
    }
    check_distinct(labels);
    const std::size_t n = s.num_qubits();
    const std::size_t k = labels.size();
    std::vector<std::size_t> measured_pos(k);
    std::vector<bool> is_measured(n, false);
    for (std::size_t j = 0; j < k; j++) {
        measured_pos[j] = s.position(labels[j]);
        is_measured[measured_pos[j]] = true;
    }
    Labels rest;
    std::vector<std::size_t> rest_pos;
    for (std::size_t p = 0; p < n; p++) {
        if (!is_measured[p]) {
            rest.push_back(s.labels()[p]);
            rest_pos.push_back(p);
        }
    }

    // Split every register index into (measured index, rest index).
    const std::size_t rest_dim = std::size_t{1} << rest.size();
    std::vector<std::size_t> m_index(s.dimension()), r_index(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); i++) {
        std::size_t m = 0, r = 0;
        for (std::size_t j = 0; j < k; j++) {
            m = (m << 1) | static_cast<std::size_t>((i & bit_of(measured_pos[j], n)) != 0);
        }
        for (std::size_t p : rest_pos) {
            r = (r << 1) | static_cast<std::size_t>((i & bit_of(p, n)) != 0);
        }
        m_index[i] = m;
        r_index[i] = r;
    }

    std::vector<Branch> branches;
    for (const auto &v : basis.vectors()) {
        std::vector<Amplitude> post(rest_dim);
        for (std::size_t i = 0; i < s.dimension(); i++) {
            post[r_index[i]] += std::conj(v.vector[m_index[i]]) * s[i];
        }
        double p = squared_norm(post);
        if (p < kPruneThreshold) {
            continue;
        }
        branches.push_back({v.label, p, PureState::normalized(rest, std::move(post))});
    }
    return branches;
}

Amplitude inner_product(const PureState &a, const PureState &b) {
    const PureState aligned = b.labels() == a.labels() ? b : b.reordered(a.labels());
    Amplitude total = 0;
    for (std::size_t i = 0; i < a.dimension(); i++) {
        total += std::conj(a[i]) * aligned[i];
    }
    return total;
}

double fidelity(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits() ||
        !std::is_permutation(a.labels().begin(), a.labels().end(), b.labels().begin())) {
        throw LabelError("fidelity needs equal label sets, got " + label_list(a.labels()) + " and " + label_list(b.labels()));
    }
    return std::norm(inner_product(a, b));
}

}  // namespace teleport
