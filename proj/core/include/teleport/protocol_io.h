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

#include "teleport/protocol.h"

namespace teleport {

/// Malformed JSON text. Line and column are 1-based.
class SyntaxError : public std::invalid_argument {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string &message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads a protocol document:
///
///   {
///     "name": "w-1q",
///     "description": "...",                       (optional)
///     "resource": "w3"
///               | {"catalog": "w3", "labels": [3, 4, 5]}
///               | {"labels": [...], "amplitudes": [[re, im], ...]},
///     "alice": [2, 3], "bob": [4],
///     "input": {"family": "single", "labels": [1], "params": [[re, im], ...]},
///     "steps": [{"op": "cnot", "control": 1, "target": 2}, ...],
///     "claim": {"probability": 0.5, "citation": "..."}  (optional)
///   }
///
/// Step ops: cnot{control,target} h{label} gate{label,gate}
/// measure{labels,basis} send{bits} abort-on{outcomes,regain?}
/// switch{labels,cases:[{outcome,steps}]}. Any step may carry
/// "party": "alice" | "bob". A regain is {target, steps, claim?}.
///
/// Throws SyntaxError for bad JSON and ProtocolError (with a JSON path) for
/// unknown fields, wrong types and every check done by validate().
Protocol parse_protocol(std::string_view text);

/// Inverse of parse_protocol; 2-space indented with a trailing newline.
std::string serialize_protocol(const Protocol &p);

/// parse_protocol on a file's contents. Throws ProtocolError if unreadable.
Protocol load_protocol_file(const std::string &path);

}  // namespace teleport
