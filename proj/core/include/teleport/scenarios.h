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

#include <string>
#include <string_view>
#include <vector>

#include "teleport/protocol.h"
#include "teleport/verify.h"

namespace teleport {

class ScenarioError : public std::invalid_argument {
 public:
  explicit ScenarioError(const std::string &message) : std::invalid_argument(message) {}
};

/// A built-in protocol together with the outcome sets stated for it.
struct ScenarioDef {
  Protocol protocol;
  std::vector<OutcomeSetClaim> sets;
};

/// bell-1q, ghz-1q, p1-1q, p1-2q, p2-1q, p2-2q, p3-1q, p3-1q-bob4, p4-1q,
/// w-1q, w-2q, w-variant-2q. Throws ScenarioError for other names.
ScenarioDef builtin(std::string_view name);

/// Alphabetical.
std::vector<std::string> builtin_names();
bool is_builtin(std::string_view name);

/// verify_scenario with the scenario's outcome sets attached.
VerificationReport verify_builtin(const ScenarioDef &def, VerifyOptions options = {});

}  // namespace teleport
