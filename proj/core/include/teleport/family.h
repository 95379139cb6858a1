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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "teleport/statevec.h"

namespace teleport {

/// The unknown states a protocol is asked to move.
///
///   single                   a|0> + b|1>                         |a|^2 + |b|^2 = 1
///   twoqubit-nonmax          a|00> + b(|01> + |10>)               |a|^2 + 2|b|^2 = 1
///   twoqubit-nonmax-variant  a|11> + b(|01> + |10>)               |a|^2 + 2|b|^2 = 1
///   twoqubit-symmetric       a(|00> + |11>) + g(|01> + |10>)      2|a|^2 + 2|g|^2 = 1
///   general-two              a|00> + b|11> + g|01> + d|10>        sum of squares = 1
enum class FamilyKind {
  kSingle,
  kTwoQubitNonmax,
  kTwoQubitNonmaxVariant,
  kTwoQubitSymmetric,
  kGeneralTwo,
};

class ConstraintError : public std::invalid_argument {
 public:
  explicit ConstraintError(const std::string &message) : std::invalid_argument(message) {}
};

/// Concrete values of the family's parameters, in the order listed above.
struct ParamPoint {
  std::vector<Amplitude> values;

  bool operator==(const ParamPoint &) const = default;
};

std::string_view family_name(FamilyKind kind);
/// Throws ConstraintError for unknown names.
FamilyKind parse_family(std::string_view name);
std::vector<FamilyKind> all_families();

std::size_t family_qubits(FamilyKind kind);
std::size_t family_param_count(FamilyKind kind);
/// Greek symbols used when rendering states ("α", "β", ...).
std::vector<std::string> family_symbols(FamilyKind kind);

/// Weight w_k of parameter k in the constraint sum_k w_k |p_k|^2 = 1.
std::vector<double> family_weights(FamilyKind kind);

/// Throws ConstraintError if the point has the wrong arity, non-finite
/// entries, or misses the constraint by more than kConstraintTolerance.
void check_constraint(FamilyKind kind, const ParamPoint &point);

/// The family member at `point`, placed on `labels` (first label = first ket bit).
PureState family_state(FamilyKind kind, const ParamPoint &point, const Labels &labels);

/// Points p_k = e_k / sqrt(w_k). Every leaf state of a protocol is linear in
/// the parameters, so executing at these points recovers the whole map.
std::vector<ParamPoint> family_basis_points(FamilyKind kind);

/// The fixed edge/generic points of the family followed by n seeded random
/// points (complex Gaussian, rescaled onto the constraint).
std::vector<ParamPoint> sample_params(FamilyKind kind, std::size_t n, std::uint64_t seed);

/// Fixed points only.
std::vector<ParamPoint> fixed_params(FamilyKind kind);

}  // namespace teleport
