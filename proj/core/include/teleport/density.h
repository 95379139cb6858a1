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

#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>

#include "teleport/statevec.h"

namespace teleport {

/// Density matrix over ordered labels, same bit convention as PureState.
class DensityMatrix {
 public:
  DensityMatrix(Labels labels, Eigen::MatrixXcd entries);

  const Labels &labels() const { return labels_; }
  const Eigen::MatrixXcd &entries() const { return entries_; }

  Amplitude trace() const { return entries_.trace(); }
  /// Largest |rho - rho^dagger| entry.
  double hermiticity_error() const;
  /// Ascending eigenvalues of the Hermitian part.
  Eigen::VectorXd eigenvalues() const;

 private:
  Labels labels_;
  Eigen::MatrixXcd entries_;
};

/// Partial trace of |s><s| over every label not in keep. The result uses the
/// order of keep. Throws LabelError if keep is not a subset of s.labels().
DensityMatrix reduce(const PureState &s, const Labels &keep);

/// Probability-weighted mixture. All members must share the same labels.
DensityMatrix mixture(std::span<const std::pair<double, DensityMatrix>> members);

/// Half the trace norm of a - b.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

}  // namespace teleport
