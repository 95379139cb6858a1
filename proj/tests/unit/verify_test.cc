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

#include "teleport/verify.h"

#include <gtest/gtest.h>

#include <cmath>

namespace teleport {
namespace {

const Amplitude kI{0, 1};

PureState target(Amplitude a, Amplitude b) {
    return PureState::normalized({7}, {a, b});
}

PureState scaled(const PureState &s, Amplitude phase) {
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (auto &a : amps) {
        a *= phase;
    }
    return PureState(s.labels(), std::move(amps));
}

Protocol standard_teleportation() {
    Protocol p;
    p.name = "std";
    p.resource = make_channel("bell");
    p.input = {FamilyKind::kSingle, {1}, std::nullopt};
    p.steps = {{CnotOp{1, 2}}, {HOp{1}}, {MeasureOp{{1, 2}, "computational"}}, {SendOp{2}}};
    p.claim = Claim{1.0, "deterministic"};
    return p;
}

TEST(CorrectionOp, Formatting) {
    EXPECT_EQ((CorrectionOp{"I", 0}).str(), "I");
    EXPECT_EQ((CorrectionOp{"ZX", 1}).str(), "iZ⊗X");
    EXPECT_EQ((CorrectionOp{"I", 2}).str(), "-I");
    EXPECT_EQ((CorrectionOp{"YY", 3}).str(), "-iY⊗Y");
}

TEST(CorrectionOp, ApplyUsesTheGivenLabelOrder) {
    const PureState s = PureState::basis({1, 2}, "10");
    const PureState out = CorrectionOp{"XI", 2}.apply(s, {1, 2});
    EXPECT_NEAR(std::abs(out[0b00] + 1.0), 0.0, 1e-15);
}

TEST(SolveCorrection, FindsTheIdentity) {
    const std::vector<PureState> t{target(0.6, 0.8)};
    const auto c = solve_correction(t, t);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->str(), "I");
}

TEST(SolveCorrection, FindsABitFlip) {
    const std::vector<PureState> t{target(0.6, 0.8), target(kI, 2.0)};
    const std::vector<PureState> s{target(0.8, 0.6), target(2.0, kI)};
    const auto c = solve_correction(s, t);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->str(), "X");
}

TEST(SolveCorrection, FindsSignedPhases) {
    // XZ|t> = -iY|t>, undone by iY.
    const std::vector<PureState> t{target(0.6, 0.8), target(0.3, kI * 0.7)};
    std::vector<PureState> s;
    for (const auto &x : t) {
        s.push_back(CorrectionOp{"X", 0}.apply(CorrectionOp{"Z", 0}.apply(x, {7}), {7}));
    }
    const auto c = solve_correction(s, t);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->str(), "iY");

    std::vector<PureState> negated;
    for (const auto &x : t) {
        negated.push_back(scaled(x, -1.0));
    }
    EXPECT_EQ(solve_correction(negated, t)->str(), "-I");
}

TEST(SolveCorrection, TwoQubitStringsPutTheFirstLabelFirst) {
    const PureState t = PureState::normalized({5, 6}, {0.1, 0.2, 0.3, kI * 0.4});
    const PureState s = CorrectionOp{"ZX", 0}.apply(t, {5, 6});
    const std::vector<PureState> ss{s};
    const std::vector<PureState> ts{t};
    EXPECT_EQ(solve_correction(ss, ts)->str(), "Z⊗X");
}

TEST(SolveCorrection, RejectsPointDependentPhases) {
    const std::vector<PureState> t{target(0.6, 0.8), target(0.8, 0.6)};
    const std::vector<PureState> s{t[0], scaled(t[1], kI)};
    EXPECT_FALSE(solve_correction(s, t).has_value());
    EXPECT_NEAR(best_pauli_fidelity(s, t), 1.0, 1e-15);
}

TEST(SolveCorrection, NonPauliRelationFails) {
    const std::vector<PureState> t{target(1, 0), target(0.6, 0.8)};
    const std::vector<PureState> s{target(1, 1), target(1.4, -0.2)};
    EXPECT_FALSE(solve_correction(s, t).has_value());
    EXPECT_LT(best_pauli_fidelity(s, t), 0.9);
}

TEST(SolveCorrection, RejectsMisalignedInputs) {
    const std::vector<PureState> one{target(1, 0)};
    const std::vector<PureState> two{target(1, 0), target(0, 1)};
    EXPECT_THROW(solve_correction(one, two), LabelError);
    const std::vector<PureState> other{PureState::basis({8}, "0")};
    EXPECT_THROW(solve_correction(other, one), LabelError);
}

TEST(Summarize, MeanMinMax) {
    const Aggregate a = summarize({0.25, 0.75, 0.5});
    EXPECT_DOUBLE_EQ(a.mean, 0.5);
    EXPECT_DOUBLE_EQ(a.min, 0.25);
    EXPECT_DOUBLE_EQ(a.max, 0.75);
    EXPECT_EQ(a.per_point.size(), 3u);
}

TEST(RenderLinear, WritesSymbolsAgainstKets) {
    EXPECT_EQ(render_linear({{1, 0}, {0, -1}}, {"α", "β"}, 1), "α|0⟩ - β|1⟩");
    EXPECT_EQ(render_linear({{0, 2}, {2, 0}}, {"α", "β"}, 1), "β|0⟩ + α|1⟩");
    EXPECT_EQ(render_linear({{1, 1}, {1, 0}}, {"α", "β"}, 1), "(α + β)|0⟩ + α|1⟩");
    EXPECT_EQ(render_linear({{0, 0}, {0, 0}}, {"α", "β"}, 1), "0");
}

TEST(NoSignaling, StandardTeleportationLeaksNothing) {
    const Protocol p = standard_teleportation();
    const auto pts = sample_params(FamilyKind::kSingle, 3, 7);
    for (double d : no_signaling_check(p, pts)) {
        EXPECT_LT(d, kNoSignalingTolerance);
    }
}

TEST(NoSignaling, DirectCouplingToTheReceiverIsDetected) {
    // Swapping the input straight into Bob's qubit is not a local operation;
    // the checker must see the input in Bob's marginal.
    Protocol p = standard_teleportation();
    p.steps.insert(p.steps.begin(), {Step{CnotOp{1, 3}}, Step{CnotOp{3, 1}}, Step{CnotOp{1, 3}}});
    const auto pts = fixed_params(FamilyKind::kSingle);
    const auto distances = no_signaling_check(p, pts);
    ASSERT_GE(distances.size(), 4u);
    EXPECT_LT(distances[0], kNoSignalingTolerance);
    EXPECT_GT(distances[3], 0.1);
}

TEST(NoSignaling, NeedsTwoPoints) {
    const auto pts = fixed_params(FamilyKind::kSingle);
    EXPECT_THROW(no_signaling_check(standard_teleportation(), std::span(pts).first(1)), ConstraintError);
}

TEST(VerifyScenario, StandardTeleportationIsDeterministic) {
    const VerificationReport r = verify_scenario(standard_teleportation(), {.samples = 4, .seed = 11});
    EXPECT_EQ(r.points.size(), 9u);
    ASSERT_EQ(r.leaves.size(), 4u);
    const std::vector<std::string> expected{"I", "X", "Z", "iY"};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_TRUE(r.leaves[i].success);
        ASSERT_TRUE(r.leaves[i].correction.has_value());
        EXPECT_EQ(r.leaves[i].correction->str(), expected[i]);
        EXPECT_GE(*r.leaves[i].min_fidelity, 1 - kFidelityTolerance);
    }
    EXPECT_NEAR(r.aggregate.min, 1.0, 1e-12);
    EXPECT_TRUE(r.claim.match);
    EXPECT_EQ(r.cbits_stated, 2);
    EXPECT_EQ(r.cbits_min, 2);
    EXPECT_TRUE(r.invariants.ok());
    EXPECT_LT(r.invariants.max_probability_sum_error, kProbabilitySumTolerance);
    EXPECT_LT(r.invariants.max_linearity_error, 1e-12);
}

TEST(VerifyScenario, ExplicitPointsReplaceSampling) {
    const std::vector<ParamPoint> pts{{{1, 0}}, {{0, 1}}};
    const VerificationReport r = verify_scenario(standard_teleportation(), {.points = pts});
    EXPECT_EQ(r.points, pts);
}

TEST(VerifyScenario, ClaimMismatchIsReported) {
    Protocol p = standard_teleportation();
    p.claim = Claim{0.5, "too low"};
    const VerificationReport r = verify_scenario(p);
    EXPECT_FALSE(r.claim.match);
    EXPECT_NEAR(r.claim.delta, 0.5, 1e-12);
}

TEST(VerifyScenario, OutcomeSetsAreChecked) {
    OutcomeSetClaim right{"all", {}, {{1, 2}}, false, {"00", "01", "10", "11"}, "x"};
    OutcomeSetClaim wrong{"half", {}, {{1, 2}}, false, {"00", "01"}, "x"};
    const VerificationReport r = verify_scenario(standard_teleportation(), {.sets = {right, wrong}});
    ASSERT_EQ(r.sets.size(), 2u);
    EXPECT_TRUE(r.sets[0].match);
    EXPECT_FALSE(r.sets[1].match);
    EXPECT_EQ(r.sets[1].success.size(), 4u);
}

TEST(VerifyScenario, LeafWithoutPauliRelationFails) {
    // Without the Hadamard, outcome bits on qubit 1 leave Bob holding a
    // collapsed state for generic inputs.
    Protocol p = standard_teleportation();
    p.steps.erase(p.steps.begin() + 1);
    p.claim.reset();
    const VerificationReport r = verify_scenario(p);
    for (const auto &leaf : r.leaves) {
        EXPECT_FALSE(leaf.success) << leaf.key;
        EXPECT_FALSE(leaf.correction.has_value());
    }
    EXPECT_DOUBLE_EQ(r.aggregate.max, 0.0);
}

TEST(Ledger, OneRowPerStage) {
    const std::vector<VerificationReport> reports{verify_scenario(standard_teleportation())};
    const auto rows = ledger(reports);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].stage, "main");
    EXPECT_EQ(rows[0].claimed, 1.0);
    EXPECT_TRUE(rows[0].match.value_or(false));
}

}  // namespace
}  // namespace teleport
