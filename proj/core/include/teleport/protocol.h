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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "teleport/channels.h"
#include "teleport/family.h"
#include "teleport/statevec.h"

namespace teleport {

/// Structural problem with a protocol. `path` names the offending step, e.g.
/// "steps[3].regain.steps[0]"; it is empty for top-level problems.
class ProtocolError : public std::invalid_argument {
 public:
  ProtocolError(std::string path, const std::string &message)
      : std::invalid_argument(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}

  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

enum class Party { kAlice, kBob };

struct Claim {
  double probability = 0;
  std::string citation;

  bool operator==(const Claim &) const = default;
};

struct Step;

struct CnotOp {
  Label control;
  Label target;
  bool operator==(const CnotOp &) const = default;
};

struct HOp {
  Label label;
  bool operator==(const HOp &) const = default;
};

struct GateOp {
  Label label;
  std::string gate;  // one of gates::by_name
  bool operator==(const GateOp &) const = default;
};

struct MeasureOp {
  Labels labels;
  std::string basis;  // computational | bell | pm
  bool operator==(const MeasureOp &) const = default;
};

struct SendOp {
  int bits;
  bool operator==(const SendOp &) const = default;
};

/// Steps run on an aborted branch to recover the input on `target`.
struct Regain {
  Labels target;
  std::vector<Step> steps;
  std::optional<Claim> claim;
  bool operator==(const Regain &) const = default;
};

/// Ends the branch if the latest measurement gave one of `outcomes`.
struct AbortOnOp {
  std::vector<std::string> outcomes;
  std::optional<Regain> regain;
  bool operator==(const AbortOnOp &) const = default;
};

struct SwitchCase {
  std::string outcome;
  std::vector<Step> steps;
  bool operator==(const SwitchCase &) const = default;
};

/// Continuation guarded by earlier computational outcomes of `labels`
/// (concatenated in the listed order). Branches matching no case fall through.
struct SwitchOp {
  Labels labels;
  std::vector<SwitchCase> cases;
  bool operator==(const SwitchOp &) const = default;
};

using StepOp = std::variant<CnotOp, HOp, GateOp, MeasureOp, SendOp, AbortOnOp, SwitchOp>;

struct Step {
  StepOp op;
  Party party = Party::kAlice;

  bool operator==(const Step &) const = default;
};

struct InputSpec {
  FamilyKind family = FamilyKind::kSingle;
  Labels labels;
  /// Default parameter point when the caller supplies none.
  std::optional<ParamPoint> params;

  bool operator==(const InputSpec &) const = default;
};

struct Protocol {
  std::string name;
  std::string description;
  ResourceState resource;
  InputSpec input;
  std::vector<Step> steps;
  std::optional<Claim> claim;

  /// Bob's qubits, which should end up holding the input.
  const Labels &receiver() const { return resource.bob; }

  bool operator==(const Protocol &) const = default;
};

/// Throws ProtocolError on label misuse, party violations, bad bases,
/// misplaced abort-on steps and malformed switches.
void validate(const Protocol &p);

/// One measurement along a branch.
struct OutcomeRecord {
  Labels labels;
  std::string basis;
  std::string outcome;
  /// Index of the outcome inside the basis; drives leaf ordering.
  int index = 0;
  bool regain = false;
  /// Set for the computational readout of Alice's leftover qubits.
  bool leftover = false;

  bool operator==(const OutcomeRecord &) const = default;
};

/// "(1,2,3)=010"; regain records carry an "R" prefix.
std::string format_record(const OutcomeRecord &r);
/// Space-joined records, the identity of a leaf across parameter points.
std::string leaf_key(const std::vector<OutcomeRecord> &record);

enum class LeafStatus {
  kCompleted,  // main steps ran to the end
  kAborted,    // cut by abort-on (main steps or inside a regain)
  kRegain,     // a regain sub-protocol ran to the end
};

std::string_view status_name(LeafStatus s);

struct Leaf {
  std::vector<OutcomeRecord> record;
  /// Product of branch probabilities along the path.
  double probability = 0;
  /// Residual state over `receiver`: Bob's labels for completed leaves, the
  /// regain target for regain leaves, every unmeasured label for aborted ones.
  PureState state;
  Labels receiver;
  int cbits = 0;
  LeafStatus status = LeafStatus::kCompleted;
  /// True for main-step aborts that carry a regain (its leaves follow).
  bool has_regain = false;

  std::string key() const { return leaf_key(record); }
};

struct BranchTree {
  /// Depth-first order; regain leaves directly follow their aborted parent.
  std::vector<Leaf> leaves;
  /// Outcome paths pruned for having probability below the threshold.
  std::vector<std::vector<OutcomeRecord>> impossible;
};

PureState initial_state(const Protocol &p, const ParamPoint &point);

/// Expands every measurement. Uses p.input.params when point is absent.
BranchTree execute(const Protocol &p, const std::optional<ParamPoint> &point = std::nullopt);

/// Branches after at most `budget` steps per path, stopping early at the
/// first send and at any Bob-side step. Regains are never entered and
/// leftovers are not measured. `done` is set when no path was cut short.
struct PrefixBranch {
  double probability;
  PureState state;
};
std::vector<PrefixBranch> execute_prefix(const Protocol &p, const ParamPoint &point, std::size_t budget, bool *done);

}  // namespace teleport
