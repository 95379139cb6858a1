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

#include "teleport/protocol.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>

namespace teleport {
namespace {

using ::testing::HasSubstr;

Protocol teleport_over_bell(std::vector<Step> steps) {
    Protocol p;
    p.name = "t";
    p.resource = make_channel("bell");
    p.input = {FamilyKind::kSingle, {1}, std::nullopt};
    p.steps = std::move(steps);
    return p;
}

std::vector<Step> standard_steps() {
    return {{CnotOp{1, 2}}, {HOp{1}}, {MeasureOp{{1, 2}, "computational"}}, {SendOp{2}}};
}

std::string validation_error(const Protocol &p) {
    try {
        validate(p);
    } catch (const ProtocolError &e) {
        return e.what();
    }
    return "";
}

TEST(Validate, AcceptsStandardTeleportation) {
    EXPECT_NO_THROW(validate(teleport_over_bell(standard_steps())));
}

TEST(Validate, MeasuredQubitCannotBeReused) {
    const Protocol p = teleport_over_bell({{MeasureOp{{1}, "computational"}}, {HOp{1}}});
    EXPECT_THAT(validation_error(p), HasSubstr("steps[1]: qubit 1 was already measured"));
}

TEST(Validate, UnknownQubit) {
    EXPECT_THAT(validation_error(teleport_over_bell({{HOp{9}}})), HasSubstr("steps[0]: unknown qubit 9"));
}

TEST(Validate, AliceCannotTouchBobsQubit) {
    EXPECT_THAT(validation_error(teleport_over_bell({{CnotOp{1, 3}}})), HasSubstr("Alice does not hold qubit 3"));
}

TEST(Validate, BobCannotTouchAlicesQubit) {
    EXPECT_THAT(validation_error(teleport_over_bell({{HOp{1}, Party::kBob}})), HasSubstr("Bob does not hold qubit 1"));
}

TEST(Validate, ReceiverQubitMustNotBeMeasured) {
    Protocol p = teleport_over_bell({{MeasureOp{{3}, "computational"}, Party::kBob}});
    EXPECT_THAT(validation_error(p), HasSubstr("receiver qubit 3"));
}

TEST(Validate, AbortMustFollowAMeasurement) {
    EXPECT_THAT(validation_error(teleport_over_bell({{HOp{1}}, {AbortOnOp{{"0"}, std::nullopt}}})),
                HasSubstr("abort-on must directly follow a measurement"));
}

TEST(Validate, AbortOutcomesMustBelongToTheMeasurement) {
    const Protocol p = teleport_over_bell({{MeasureOp{{1}, "computational"}}, {AbortOnOp{{"01"}, std::nullopt}}});
    EXPECT_THAT(validation_error(p), HasSubstr("'01' is not an outcome"));
}

TEST(Validate, RegainsCannotNest) {
    Regain inner{{1}, {}, std::nullopt};
    Regain outer{{1},
                 {{MeasureOp{{2}, "computational"}}, {AbortOnOp{{"0"}, inner}}},
                 std::nullopt};
    Protocol p = teleport_over_bell({{CnotOp{1, 2}}, {MeasureOp{{1}, "computational"}}});
    p.input.labels = {1};
    p.steps = {{CnotOp{1, 2}}, {MeasureOp{{2}, "computational"}}, {AbortOnOp{{"0"}, outer}}};
    EXPECT_THAT(validation_error(p), HasSubstr("regain"));
}

TEST(Validate, SwitchNeedsComputationallyMeasuredQubits) {
    SwitchOp sw{{1}, {{"0", {}}}};
    EXPECT_THAT(validation_error(teleport_over_bell({{Step{sw}}})), HasSubstr("switch reads qubit 1"));
    SwitchOp bell_sw{{1, 2}, {{"00", {}}}};
    EXPECT_THAT(validation_error(teleport_over_bell({{MeasureOp{{1, 2}, "bell"}}, {Step{bell_sw}}})),
                HasSubstr("switch reads qubit 1"));
}

TEST(Validate, SwitchCasesMustFitTheLabels) {
    SwitchOp sw{{1}, {{"00", {}}}};
    const Protocol p = teleport_over_bell({{MeasureOp{{1}, "computational"}}, {Step{sw}}});
    EXPECT_THAT(validation_error(p), HasSubstr("steps[1].cases[0]"));
}

TEST(Validate, InputLabelsMustNotCollideWithTheChannel) {
    Protocol p = teleport_over_bell(standard_steps());
    p.input.labels = {2};
    EXPECT_THAT(validation_error(p), HasSubstr("input.labels"));
}

TEST(Validate, ClaimOutsideTheUnitInterval) {
    Protocol p = teleport_over_bell(standard_steps());
    p.claim = Claim{1.5, "x"};
    EXPECT_THAT(validation_error(p), HasSubstr("claim: claimed probability must lie in [0, 1]"));
}

TEST(Records, FormatAndKey) {
    OutcomeRecord a{{1, 2}, "computational", "01", 1, false, false};
    OutcomeRecord b{{4, 5}, "computational", "10", 2, true, false};
    EXPECT_EQ(format_record(a), "(1,2)=01");
    EXPECT_EQ(format_record(b), "R(4,5)=10");
    EXPECT_EQ(leaf_key({a, b}), "(1,2)=01 R(4,5)=10");
    EXPECT_EQ(status_name(LeafStatus::kAborted), "aborted");
}

TEST(Execute, InitialStatePutsTheInputFirst) {
    const Protocol p = teleport_over_bell(standard_steps());
    const PureState s = initial_state(p, {{0.6, 0.8}});
    EXPECT_EQ(s.labels(), (Labels{1, 2, 3}));
    EXPECT_NEAR(s[0b000].real(), 0.6 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[0b111].real(), 0.8 / std::sqrt(2.0), 1e-15);
}

TEST(Execute, StandardTeleportationHasFourEqualLeaves) {
    const BranchTree t = execute(teleport_over_bell(standard_steps()), ParamPoint{{0.6, 0.8}});
    ASSERT_EQ(t.leaves.size(), 4u);
    EXPECT_TRUE(t.impossible.empty());
    for (const auto &leaf : t.leaves) {
        EXPECT_NEAR(leaf.probability, 0.25, 1e-15);
        EXPECT_EQ(leaf.receiver, (Labels{3}));
        EXPECT_EQ(leaf.cbits, 2);
        EXPECT_EQ(leaf.status, LeafStatus::kCompleted);
    }
    EXPECT_EQ(t.leaves[0].key(), "(1,2)=00");
    EXPECT_EQ(t.leaves[3].key(), "(1,2)=11");
    // Outcome 00 needs no correction.
    EXPECT_NEAR(fidelity(t.leaves[0].state, PureState({3}, {0.6, 0.8})), 1.0, 1e-15);
}

TEST(Execute, AbortStopsThePath) {
    const Protocol p = teleport_over_bell(
        {{CnotOp{1, 2}}, {MeasureOp{{2}, "computational"}}, {AbortOnOp{{"1"}, std::nullopt}}, {HOp{1}},
         {MeasureOp{{1}, "computational"}}});
    const BranchTree t = execute(p, ParamPoint{{0.6, 0.8}});
    ASSERT_EQ(t.leaves.size(), 3u);
    int aborted = 0;
    for (const auto &leaf : t.leaves) {
        if (leaf.status == LeafStatus::kAborted) {
            ++aborted;
            EXPECT_EQ(leaf.key(), "(2)=1");
            EXPECT_NEAR(leaf.probability, 0.5, 1e-15);
        }
    }
    EXPECT_EQ(aborted, 1);
}

TEST(Execute, LeftoverAliceQubitsAreReadOut) {
    const Protocol p = teleport_over_bell({{CnotOp{1, 2}}, {MeasureOp{{2}, "computational"}}});
    const BranchTree t = execute(p, ParamPoint{{0.6, 0.8}});
    ASSERT_FALSE(t.leaves.empty());
    for (const auto &leaf : t.leaves) {
        ASSERT_EQ(leaf.record.size(), 2u);
        EXPECT_TRUE(leaf.record[1].leftover);
        EXPECT_EQ(leaf.record[1].labels, (Labels{1}));
    }
}

TEST(Execute, ZeroProbabilityPathsAreListedAsImpossible) {
    const BranchTree t = execute(teleport_over_bell(standard_steps()), ParamPoint{{1, 0}});
    EXPECT_EQ(t.leaves.size(), 4u);
    const Protocol p = teleport_over_bell({{MeasureOp{{1}, "computational"}}});
    const BranchTree u = execute(p, ParamPoint{{1, 0}});
    ASSERT_EQ(u.impossible.size(), 1u);
    EXPECT_EQ(leaf_key(u.impossible[0]), "(1)=1");
}

TEST(Execute, RejectsOffSurfaceParameters) {
    EXPECT_THROW(execute(teleport_over_bell(standard_steps()), ParamPoint{{1, 1}}), ConstraintError);
}

TEST(Execute, PrefixBudgetsStopBeforeTheSend) {
    const Protocol p = teleport_over_bell(standard_steps());
    bool done = false;
    const auto none = execute_prefix(p, {{0.6, 0.8}}, 0, &done);
    ASSERT_EQ(none.size(), 1u);
    EXPECT_NEAR(none[0].probability, 1.0, 1e-15);
    EXPECT_FALSE(done);

    const auto measured = execute_prefix(p, {{0.6, 0.8}}, 3, &done);
    EXPECT_EQ(measured.size(), 4u);
    double total = 0;
    for (const auto &b : measured) {
        total += b.probability;
    }
    EXPECT_NEAR(total, 1.0, 1e-15);
    EXPECT_TRUE(done);
}

}  // namespace
}  // namespace teleport
