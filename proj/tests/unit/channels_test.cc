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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace teleport {
namespace {

struct Expected {
  Labels labels;
  std::vector<std::string> terms;
  Labels bob;
};

// Hand-built catalog; every listed basis state carries the same weight.
const std::map<std::string, Expected> &hand_built() {
    static const std::map<std::string, Expected> table{
        {"bell", {{2, 3}, {"00", "11"}, {3}}},
        {"ghz3", {{2, 3, 4}, {"000", "111"}, {4}}},
        {"w3", {{2, 3, 4}, {"100", "010", "001"}, {4}}},
        {"w3-variant", {{2, 3, 4}, {"101", "110", "011"}, {4}}},
        {"p1", {{3, 4, 5, 6}, {"0001", "0010", "0100", "1000"}, {6}}},
        {"p2", {{3, 4, 5, 6}, {"0000", "1111", "0011", "0101", "0110"}, {6}}},
        {"p3", {{3, 4, 5, 6}, {"0000", "0101", "1000", "1110"}, {6}}},
        {"p4", {{3, 4, 5, 6}, {"0000", "1011", "1101", "1110"}, {6}}},
    };
    return table;
}

TEST(Catalog, NamesAreComplete) {
    const auto names = channel_names();
    EXPECT_EQ(names.size(), hand_built().size());
    for (const auto &[name, e] : hand_built()) {
        EXPECT_TRUE(is_channel_name(name)) << name;
    }
    EXPECT_FALSE(is_channel_name("p5"));
}

TEST(Catalog, StatesMatchHandBuiltVectors) {
    for (const auto &[name, e] : hand_built()) {
        const ResourceState r = make_channel(name);
        EXPECT_EQ(r.name, name);
        EXPECT_EQ(r.state.labels(), e.labels) << name;
        EXPECT_EQ(r.bob, e.bob) << name;
        const double amp = 1 / std::sqrt(static_cast<double>(e.terms.size()));
        for (std::size_t i = 0; i < r.state.dimension(); ++i) {
            std::string bits;
            for (std::size_t k = 0; k < e.labels.size(); ++k) {
                bits += ((i >> (e.labels.size() - 1 - k)) & 1U) ? '1' : '0';
            }
            const bool listed = std::find(e.terms.begin(), e.terms.end(), bits) != e.terms.end();
            EXPECT_NEAR(std::abs(r.state[i] - Amplitude(listed ? amp : 0.0)), 0.0, 1e-15) << name << " " << bits;
        }
        EXPECT_NEAR(r.state.norm(), 1.0, 1e-12) << name;
    }
}

TEST(Catalog, PartiesPartitionTheLabels) {
    for (const auto &name : channel_names()) {
        const ResourceState r = make_channel(name);
        Labels all = r.alice;
        all.insert(all.end(), r.bob.begin(), r.bob.end());
        std::sort(all.begin(), all.end());
        Labels expected = r.state.labels();
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(all, expected) << name;
    }
}

TEST(Catalog, UnknownNameThrows) {
    EXPECT_THROW(make_channel("p5"), ChannelError);
}

TEST(AssignParties, ReassignsTheTwoQubitSplit) {
    const ResourceState r = assign_parties(make_channel("p1"), {3, 4}, {5, 6});
    EXPECT_EQ(r.alice, (Labels{3, 4}));
    EXPECT_EQ(r.bob, (Labels{5, 6}));
    EXPECT_EQ(r.state, make_channel("p1").state);
}

TEST(AssignParties, AcceptsEverythingOnAlice) {
    const ResourceState r = assign_parties(make_channel("bell"), {2, 3}, {});
    EXPECT_TRUE(r.bob.empty());
}

TEST(AssignParties, RejectsBadPartitions) {
    EXPECT_THROW(assign_parties(make_channel("bell"), {2}, {}), ChannelError);
    EXPECT_THROW(assign_parties(make_channel("bell"), {2, 3}, {3}), ChannelError);
    EXPECT_THROW(assign_parties(make_channel("bell"), {2, 9}, {3}), ChannelError);
}

TEST(Relabel, MovesTheWChannelUpOne) {
    const ResourceState r = assign_parties(relabel(make_channel("w3"), {3, 4, 5}), {3}, {4, 5});
    EXPECT_EQ(r.state.labels(), (Labels{3, 4, 5}));
    EXPECT_EQ(r.alice, (Labels{3}));
    EXPECT_EQ(r.bob, (Labels{4, 5}));
    EXPECT_NEAR(std::abs(r.state[0b100] - Amplitude(1 / std::sqrt(3.0))), 0.0, 1e-15);
    EXPECT_THROW(relabel(make_channel("w3"), {3, 4}), ChannelError);
}

}  // namespace
}  // namespace teleport
