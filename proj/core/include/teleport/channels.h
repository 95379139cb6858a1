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

#include "teleport/statevec.h"

namespace teleport {

class ChannelError : public std::invalid_argument {
 public:
  explicit ChannelError(const std::string &message) : std::invalid_argument(message) {}
};

/// An entangled channel and the split of its qubits between sender and receiver.
struct ResourceState {
  std::string name;
  PureState state;
  Labels alice;
  Labels bob;

  bool operator==(const ResourceState &) const = default;
};

/// Catalog entries: bell, ghz3, w3, w3-variant, p1, p2, p3, p4.
///
///   bell        (|00> + |11>)/sqrt2                     labels (2,3), Bob 3
///   ghz3        (|000> + |111>)/sqrt2                   labels (2,3,4), Bob 4
///   w3          (|100> + |010> + |001>)/sqrt3           labels (2,3,4), Bob 4
///   w3-variant  (|101> + |110> + |011>)/sqrt3           labels (2,3,4), Bob 4
///   p1          (|0001> + |0010> + |0100> + |1000>)/2   labels (3,4,5,6), Bob 6
///   p2          (|0000> + |1111> + |0011> + |0101> + |0110>)/sqrt5
///   p3          (|0000> + |0101> + |1000> + |1110>)/2
///   p4          (|0000> + |1011> + |1101> + |1110>)/2
///
/// p2..p4 also live on (3,4,5,6) with Bob holding 6.
ResourceState make_channel(std::string_view name);

/// Catalog names in alphabetical order.
std::vector<std::string> channel_names();
bool is_channel_name(std::string_view name);

/// Same state, new party split. Throws ChannelError unless alice and bob
/// partition the state's labels.
ResourceState assign_parties(const ResourceState &r, Labels alice, Labels bob);

/// Renames labels position by position; the party split follows the renaming.
ResourceState relabel(const ResourceState &r, const Labels &new_labels);

}  // namespace teleport
