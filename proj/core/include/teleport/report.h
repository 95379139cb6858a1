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

#include <span>
#include <string>

#include "teleport/verify.h"

namespace teleport {

/// One scenario. JSON keys: scenario, description, family, receiver, seed,
/// params, leaves, impossible, aggregate, claim, discrepancy, regain, cbits,
/// sets, no_signaling, invariants. Output is byte-stable for equal inputs.
std::string report_json(const VerificationReport &r);
/// One leaf per row.
std::string report_csv(const VerificationReport &r);
/// Outcome, probability, receiver state and correction per leaf, then summaries.
std::string report_table(const VerificationReport &r);

/// {"seed", "samples", "ledger": [...], "reports": [...]}.
std::string ledger_json(std::span<const VerificationReport> reports, std::uint64_t seed, std::size_t samples);
std::string ledger_csv(std::span<const VerificationReport> reports);
std::string ledger_table(std::span<const VerificationReport> reports);

}  // namespace teleport
