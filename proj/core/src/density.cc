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

#include "teleport/density.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <set>

namespace teleport {

DensityMatrix::DensityMatrix(Labels labels, Eigen::MatrixXcd entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << labels_.size());
    if (entries_.rows() != dim || entries_.cols() != dim) {
        throw StateError("density matrix size does not match its labels");
    }
}

double DensityMatrix::hermiticity_error() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::MatrixXcd herm = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

DensityMatrix reduce(const PureState &s, const Labels &keep) {
    std::set<Label> kept(keep.begin(), keep.end());
    if (kept.size() != keep.size()) {
        throw LabelError("reduce: duplicate label in the kept set");
    }
    Labels order = keep;
    for (Label l : s.labels()) {
        if (!kept.count(l)) {
            order.push_back(l);
        }
    }
    // Kept qubits become the most significant bits, so the state reads as a
    // (keep_dim x rest_dim) matrix psi and rho = psi psi^dagger.
    const PureState arranged = s.reordered(order);
    const std::size_t keep_dim = std::size_t{1} << keep.size();
    const std::size_t rest_dim = arranged.dimension() / keep_dim;
    Eigen::MatrixXcd psi(keep_dim, rest_dim);
    for (std::size_t a = 0; a < keep_dim; a++) {
        for (std::size_t r = 0; r < rest_dim; r++) {
            psi(a, r) = arranged[a * rest_dim + r];
        }
    }
    return DensityMatrix(keep, psi * psi.adjoint());
}

DensityMatrix mixture(std::span<const std::pair<double, DensityMatrix>> members) {
    if (members.empty()) {
        throw StateError("mixture of zero density matrices");
    }
    const Labels &labels = members.front().second.labels();
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(members.front().second.entries().rows(),
                                                    members.front().second.entries().cols());
    for (const auto &[weight, rho] : members) {
        if (rho.labels() != labels) {
            throw LabelError("mixture members disagree on labels");
        }
        total += weight * rho.entries();
    }
    return DensityMatrix(labels, std::move(total));
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.labels() != b.labels()) {
        throw LabelError("trace_distance needs identical label order");
    }
    DensityMatrix diff(a.labels(), a.entries() - b.entries());
    return 0.5 * diff.eigenvalues().cwiseAbs().sum();
}

}  // namespace teleport
