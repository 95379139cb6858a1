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

namespace teleport {

// Numerical thresholds shared by every module. All registers are at most
// seven qubits, so double precision leaves several orders of headroom.

/// |norm - 1| allowed for any stored PureState.
inline constexpr double kNormTolerance = 1e-12;
/// Unitarity check for user-supplied 2x2 matrices.
inline constexpr double kUnitaryTolerance = 1e-12;
/// Basis orthonormality check.
inline constexpr double kBasisTolerance = 1e-12;
/// Measurement branches below this probability are dropped.
inline constexpr double kPruneThreshold = 1e-14;
/// A corrected leaf counts as teleporting at fidelity >= 1 - this.
inline constexpr double kFidelityTolerance = 1e-9;
/// Sum of leaf probabilities per parameter point.
inline constexpr double kProbabilitySumTolerance = 1e-10;
/// Max pairwise trace distance of Bob's state before communication.
inline constexpr double kNoSignalingTolerance = 1e-9;
/// |computed - claimed| for a stated claim to count as matched.
inline constexpr double kClaimTolerance = 1e-6;
/// Family constraint (e.g. |a|^2 + |b|^2 = 1).
inline constexpr double kConstraintTolerance = 1e-12;

}  // namespace teleport
