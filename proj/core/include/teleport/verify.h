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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "teleport/protocol.h"
#include "teleport/tolerances.h"

namespace teleport {

/// phase * (P_1 ⊗ P_2 ⊗ ...), with P_k acting on the k-th receiver label.
struct CorrectionOp {
  std::string paulis;  // one of "IXYZ" per qubit
  int phase = 0;       // power of i: 0 -> 1, 1 -> i, 2 -> -1, 3 -> -i

  /// "iZ⊗X", "-I", "Y".
  std::string str() const;
  /// Applies the operator to `s`, whose labels must be `labels` in some order.
  PureState apply(const PureState &s, const Labels &labels) const;

  bool operator==(const CorrectionOp &) const = default;
};

/// First (phase, Pauli string) in search order with
///   fidelity(phase*P*state, target) >= 1 - tolerance  and
///   Re <target| phase*P |state> >= 1 - tolerance
/// at every aligned pair. Search order: Pauli strings lexicographic in
/// I < X < Y < Z with the first label most significant, then phase
/// 1, i, -1, -i. Targets fix the label order. Throws LabelError when a state
/// and its target cover different labels.
std::optional<CorrectionOp> solve_correction(std::span<const PureState> states, std::span<const PureState> targets,
                                             double tolerance = kFidelityTolerance);

/// Best min-over-points fidelity any Pauli string reaches (phase ignored).
double best_pauli_fidelity(std::span<const PureState> states, std::span<const PureState> targets);

struct Aggregate {
  std::vector<double> per_point;
  double mean = 0;
  double min = 0;
  double max = 0;
};
Aggregate summarize(std::vector<double> values);

struct LeafVerdict {
  std::string key;
  std::vector<OutcomeRecord> record;
  LeafStatus status = LeafStatus::kCompleted;
  bool has_regain = false;
  Labels receiver;
  int cbits = 0;
  /// Per sampled point; 0 where the leaf is unreachable.
  std::vector<double> probability;
  bool success = false;
  std::optional<CorrectionOp> correction;
  /// Post-correction fidelity for successes, best Pauli fidelity otherwise.
  /// Empty for aborted leaves.
  std::optional<double> min_fidelity;
  /// Residual state written in the family's symbols, scaled so the first
  /// nonzero coefficient is one, e.g. "α|1⟩ - β|0⟩".
  std::string state_text;
};

/// An outcome set a source document states for a scenario.
struct OutcomeSetClaim {
  std::string what;
  /// Only leaves whose record contains all of these (labels, outcome) pairs.
  std::vector<std::pair<Labels, std::string>> given;
  /// Measurements whose outcomes, joined with "·", name a leaf.
  std::vector<Labels> measured;
  bool regain = false;
  std::vector<std::string> expected;
  std::string citation;
};

struct OutcomeSetCheck {
  OutcomeSetClaim claim;
  std::vector<std::string> success;
  std::vector<std::string> failure;
  /// Outcomes of zero probability at every sampled point.
  std::vector<std::string> impossible;
  bool match = false;
};

struct ClaimCheck {
  std::optional<Claim> claim;
  /// max over points of |computed - claimed|.
  double delta = 0;
  bool match = false;
};

struct RegainReport {
  Labels target;
  /// Probability of reaching a regain-bearing abort, per point.
  Aggregate reached;
  /// Success probability of regain leaves, unconditional and divided by `reached`.
  Aggregate unconditional;
  Aggregate conditional;
  ClaimCheck claim;
  /// "unconditional", "conditional" or "" when neither reading matches.
  std::string matched_reading;
  int cbits = 0;
};

struct Invariants {
  double max_probability_sum_error = 0;
  double max_regain_sum_error = 0;
  double max_linearity_error = 0;
  double max_no_signaling = 0;
  double max_norm_error = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct VerificationReport {
  std::string scenario;
  std::string description;
  FamilyKind family = FamilyKind::kSingle;
  Labels receiver;
  std::uint64_t seed = 0;
  std::vector<ParamPoint> points;
  std::vector<LeafVerdict> leaves;
  std::vector<std::string> impossible;
  Aggregate aggregate;
  ClaimCheck claim;
  std::optional<RegainReport> regain;
  /// Largest send count on a completed path, and the bits needed to name
  /// the distinct corrections of the success leaves.
  int cbits_stated = 0;
  int cbits_min = 0;
  std::vector<OutcomeSetCheck> sets;
  /// Max pairwise trace distance of Bob's state, per step budget.
  std::vector<double> no_signaling;
  Invariants invariants;
};

struct VerifyOptions {
  std::size_t samples = 5;
  std::uint64_t seed = 2024;
  /// Replaces fixed + sampled points when set.
  std::optional<std::vector<ParamPoint>> points{};
  double claim_tolerance = kClaimTolerance;
  std::vector<OutcomeSetClaim> sets{};
};

VerificationReport verify_scenario(const Protocol &p, const VerifyOptions &options = {});

/// Max pairwise trace distance between Bob's reduced states across `points`,
/// for each per-path step budget up to the first send. Needs two points.
std::vector<double> no_signaling_check(const Protocol &p, std::span<const ParamPoint> points);

/// Renders sum_k symbols[k] * columns[k] over kets of `num_qubits` qubits.
std::string render_linear(const std::vector<std::vector<Amplitude>> &columns, const std::vector<std::string> &symbols,
                          std::size_t num_qubits);

struct LedgerRow {
  std::string scenario;
  /// "main" or "regain".
  std::string stage;
  std::optional<double> claimed;
  Aggregate computed;
  /// Regain rows only.
  std::optional<Aggregate> conditional;
  double delta = 0;
  std::optional<bool> match;
  std::string reading;
  std::string citation;
};

/// One row per scenario plus one per regain, sorted by scenario name.
std::vector<LedgerRow> ledger(std::span<const VerificationReport> reports);

}  // namespace teleport
