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

#include "teleport/channels.h"

#include <algorithm>
#include <map>
#include <set>

namespace teleport {

namespace {

struct CatalogEntry {
    Labels labels;
    std::vector<std::string> terms;  // equal-weight basis states
    Labels bob;
};

const std::map<std::string, CatalogEntry, std::less<>> &catalog() {
    static const std::map<std::string, CatalogEntry, std::less<>> entries{
        {"bell", {{2, 3}, {"00", "11"}, {3}}},
        {"ghz3", {{2, 3, 4}, {"000", "111"}, {4}}},
        {"w3", {{2, 3, 4}, {"100", "010", "001"}, {4}}},
        {"w3-variant", {{2, 3, 4}, {"101", "110", "011"}, {4}}},
        {"p1", {{3, 4, 5, 6}, {"0001", "0010", "0100", "1000"}, {6}}},
        {"p2", {{3, 4, 5, 6}, {"0000", "1111", "0011", "0101", "0110"}, {6}}},
        {"p3", {{3, 4, 5, 6}, {"0000", "0101", "1000", "1110"}, {6}}},
        {"p4", {{3, 4, 5, 6}, {"0000", "1011", "1101", "1110"}, {6}}},
    };
    return entries;
}

PureState equal_superposition(const Labels &labels, const std::vector<std::string> &terms) {
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    for (const auto &t : terms) {
        amps[std::stoul(t, nullptr, 2)] += 1.0;
    }
    return PureState::normalized(labels, std::move(amps));
}

}  // namespace

ResourceState make_channel(std::string_view name) {
    auto it = catalog().find(name);
    if (it == catalog().end()) {
        throw ChannelError("unknown channel '" + std::string(name) + "'");
    }
    const CatalogEntry &e = it->second;
    Labels alice;
    for (Label l : e.labels) {
        if (std::find(e.bob.begin(), e.bob.end(), l) == e.bob.end()) {
            alice.push_back(l);
        }
    }
    return ResourceState{it->first, equal_superposition(e.labels, e.terms), std::move(alice), e.bob};
}

std::vector<std::string> channel_names() {
    std::vector<std::string> names;
    for (const auto &[name, entry] : catalog()) {
        names.push_back(name);
    }
    return names;
}

bool is_channel_name(std::string_view name) {
    return catalog().find(name) != catalog().end();
}

ResourceState assign_parties(const ResourceState &r, Labels alice, Labels bob) {
    std::set<Label> all(r.state.labels().begin(), r.state.labels().end());
    std::set<Label> seen;
    for (const Labels *side : {&alice, &bob}) {
        for (Label l : *side) {
            if (!all.count(l)) {
                throw ChannelError("qubit " + std::to_string(l) + " is not part of channel '" + r.name + "'");
            }
            if (!seen.insert(l).second) {
                throw ChannelError("qubit " + std::to_string(l) + " is assigned twice");
            }
        }
    }
    if (seen.size() != all.size()) {
        throw ChannelError("party assignment for '" + r.name + "' does not cover every qubit");
    }
    return ResourceState{r.name, r.state, std::move(alice), std::move(bob)};
}

ResourceState relabel(const ResourceState &r, const Labels &new_labels) {
    const Labels &old = r.state.labels();
    if (new_labels.size() != old.size()) {
        throw ChannelError("relabel of '" + r.name + "' needs " + std::to_string(old.size()) + " labels");
    }
    auto rename = [&](Label l) {
        return new_labels[static_cast<std::size_t>(std::find(old.begin(), old.end(), l) - old.begin())];
    };
    Labels alice, bob;
    std::transform(r.alice.begin(), r.alice.end(), std::back_inserter(alice), rename);
    std::transform(r.bob.begin(), r.bob.end(), std::back_inserter(bob), rename);
    std::vector<Amplitude> amps(r.state.amplitudes().begin(), r.state.amplitudes().end());
    return ResourceState{r.name, PureState(new_labels, std::move(amps)), std::move(alice), std::move(bob)};
}

}  // namespace teleport
