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

#include "teleport/scenarios.h"

#include <functional>
#include <map>

namespace teleport {

namespace {

Step cnot(Label control, Label target) {
    return {CnotOp{control, target}};
}

Step h(Label label) {
    return {HOp{label}};
}

Step measure(Labels labels, std::string basis = "computational") {
    return {MeasureOp{std::move(labels), std::move(basis)}};
}

Step send(int bits) {
    return {SendOp{bits}};
}

Step abort_on(std::vector<std::string> outcomes, std::optional<Regain> regain = std::nullopt) {
    return {AbortOnOp{std::move(outcomes), std::move(regain)}};
}

Step by_bob(Step s) {
    s.party = Party::kBob;
    return s;
}

ResourceState split(const ResourceState &r, Labels alice, Labels bob) {
    return assign_parties(r, std::move(alice), std::move(bob));
}

Protocol single_qubit(std::string name, std::string description, ResourceState resource, std::vector<Step> steps,
                      std::optional<Claim> claim) {
    Protocol p;
    p.name = std::move(name);
    p.description = std::move(description);
    p.resource = std::move(resource);
    p.input = {FamilyKind::kSingle, {1}, std::nullopt};
    p.steps = std::move(steps);
    p.claim = std::move(claim);
    return p;
}

Protocol two_qubit(std::string name, std::string description, ResourceState resource, FamilyKind family,
                   std::vector<Step> steps, std::optional<Claim> claim) {
    Protocol p = single_qubit(std::move(name), std::move(description), std::move(resource), std::move(steps),
                              std::move(claim));
    p.input = {family, {1, 2}, std::nullopt};
    return p;
}

ScenarioDef bell_1q() {
    return {single_qubit("bell-1q", "standard teleportation of one qubit over a Bell pair", make_channel("bell"),
                         {cnot(1, 2), h(1), measure({1, 2}), send(2)},
                         Claim{1.0, "deterministic, two classical bits"}),
            {}};
}

ScenarioDef ghz_1q() {
    // Label 3 is read out in the X basis; a Z readout would collapse the channel.
    return {single_qubit("ghz-1q", "one qubit over a three-qubit GHZ channel", make_channel("ghz3"),
                         {cnot(1, 2), h(1), h(3), measure({1, 2, 3}), send(3)},
                         Claim{1.0, "deterministic on the GHZ channel"}),
            {}};
}

ScenarioDef w_1q() {
    return {single_qubit("w-1q", "one qubit over a W channel, three-qubit computational readout", make_channel("w3"),
                         {cnot(1, 2), h(1), measure({1, 2, 3}), send(3)},
                         Claim{0.5, "reported success probability one half"}),
            {{"teleporting outcomes of (1,2,3)",
              {},
              {{1, 2, 3}},
              false,
              {"010", "000", "110", "100"},
              "four listed teleporting outcomes"}}};
}

ScenarioDef w_2q() {
    Regain regain{{1, 2},
                  {by_bob(h(5)), by_bob(measure({4, 5})), by_bob(send(1))},
                  Claim{0.5, "reported recovery probability one half with one classical bit"}};
    return {two_qubit("w-2q", "two-qubit nonmaximal state over a relabelled W channel, with recovery",
                      split(relabel(make_channel("w3"), {3, 4, 5}), {3}, {4, 5}), FamilyKind::kTwoQubitNonmax,
                      {cnot(2, 3), cnot(1, 3), measure({3}), abort_on({"0"}, std::move(regain)), h(1), measure({2}),
                       abort_on({"1"}), measure({1}), send(2)},
                      Claim{0.25, "reported success probability one quarter"}),
            {{"teleporting outcomes of (1) after (3)=1, (2)=0",
              {{{3}, "1"}, {{2}, "0"}},
              {{1}},
              false,
              {"0", "1"},
              "two tabulated rows"},
             {"recovering outcomes of (4,5) after (3)=0",
              {{{3}, "0"}},
              {{4, 5}},
              true,
              {"00", "01"},
              "two tabulated recovery rows"}}};
}

ScenarioDef w_variant_2q() {
    // The variant is the W problem under X on every qubit, so both abort
    // predicates flip.
    Regain regain{{1, 2}, {by_bob(h(5)), by_bob(measure({4, 5})), by_bob(send(1))}, std::nullopt};
    return {two_qubit("w-variant-2q", "two-qubit variant state over the complemented W channel",
                      split(relabel(make_channel("w3-variant"), {3, 4, 5}), {3}, {4, 5}),
                      FamilyKind::kTwoQubitNonmaxVariant,
                      {cnot(2, 3), cnot(1, 3), measure({3}), abort_on({"1"}, std::move(regain)), h(1), measure({2}),
                       abort_on({"0"}), measure({1}), send(2)},
                      std::nullopt),
            {}};
}

ScenarioDef p1_1q() {
    std::vector<std::string> matched;
    for (const char *a : {"Phi+", "Phi-"}) {
        for (const char *b : {"Phi+", "Phi-"}) {
            matched.push_back(std::string(a) + "·" + b);
        }
    }
    for (const char *a : {"Psi+", "Psi-"}) {
        for (const char *b : {"Psi+", "Psi-"}) {
            matched.push_back(std::string(a) + "·" + b);
        }
    }
    return {single_qubit("p1-1q", "one qubit over the four-qubit W channel with two Bell measurements",
                         make_channel("p1"),
                         {cnot(1, 5), cnot(3, 4), measure({1, 3}, "bell"), measure({4, 5}, "bell"), send(1)},
                         Claim{0.5, "reported success probability one half"}),
            {{"teleporting Bell pairs on (1,3) and (4,5)",
              {},
              {{1, 3}, {4, 5}},
              false,
              std::move(matched),
              "matched Bell pairs only"}}};
}

ScenarioDef p1_2q() {
    Regain regain{{1, 2},
                  {measure({3}), abort_on({"1"}), by_bob(h(6)), by_bob(measure({5, 6})), by_bob(send(1))},
                  Claim{0.25, "reported recovery probability one quarter"}};
    return {two_qubit("p1-2q", "two-qubit nonmaximal state over the four-qubit W channel, with recovery",
                      split(make_channel("p1"), {3, 4}, {5, 6}), FamilyKind::kTwoQubitNonmax,
                      {cnot(1, 4), cnot(2, 4), cnot(3, 4), measure({4}), abort_on({"0"}, std::move(regain)), h(2),
                       measure({1, 2, 3}), send(3)},
                      std::nullopt),
            {{"teleporting outcomes of (1,2,3) after (4)=1",
              {{{4}, "1"}},
              {{1, 2, 3}},
              false,
              {"000", "010"},
              "two tabulated rows"},
             {"recovering outcomes of (5,6) after (4)=0",
              {{{4}, "0"}},
              {{5, 6}},
              true,
              {"00", "01"},
              "recovery fails on the other two outcomes"}}};
}

ScenarioDef p2_1q() {
    return {single_qubit("p2-1q", "one qubit over the five-term four-qubit channel", make_channel("p2"),
                         {cnot(1, 4), h(1), measure({3}), abort_on({"1"}), measure({4}), measure({1, 5}), send(2)},
                         std::nullopt),
            {}};
}

ScenarioDef p2_2q() {
    SwitchOp sw{{3, 4},
                {{"00", {measure({1, 2}, "pm"), send(2)}}, {"01", {h(2), measure({1, 2}), send(2)}}}};
    return {two_qubit("p2-2q", "two-qubit symmetric state over the five-term four-qubit channel",
                      split(make_channel("p2"), {3, 4}, {5, 6}), FamilyKind::kTwoQubitSymmetric,
                      {cnot(1, 4), cnot(2, 4), measure({4}), measure({3}), Step{std::move(sw)}}, std::nullopt),
            {{"teleporting product-basis outcomes of (1,2) after (3)=0, (4)=0",
              {{{3}, "0"}, {{4}, "0"}},
              {{1, 2}},
              false,
              {"++", "-+", "--", "+-"},
              "four tabulated corrections"},
             {"teleporting outcomes of (1,2) after (3)=0, (4)=1",
              {{{3}, "0"}, {{4}, "1"}},
              {{1, 2}},
              false,
              {"00", "01"},
              "two listed teleporting outcomes"}}};
}

ScenarioDef p3_1q() {
    return {single_qubit("p3-1q", "one qubit over the third four-qubit channel, receiver holds 6",
                         make_channel("p3"), {cnot(1, 3), cnot(1, 4), h(1), measure({1, 3, 4, 5}), send(4)},
                         Claim{1.0 / 3.0, "reported success probability one third"}),
            {{"teleporting outcomes of (1,3,4,5)",
              {},
              {{1, 3, 4, 5}},
              false,
              {"0000", "1000", "0011", "1011"},
              "four listed teleporting outcomes"}}};
}

ScenarioDef p3_1q_bob4() {
    // With the receiver on 4, the second CNOT is retargeted to Alice's 6.
    return {single_qubit("p3-1q-bob4", "one qubit over the third four-qubit channel, receiver holds 4",
                         split(make_channel("p3"), {3, 5, 6}, {4}),
                         {cnot(1, 3), cnot(1, 6), h(1), measure({1, 3, 5, 6}), send(4)},
                         Claim{1.0 / 3.0, "reported success probability one third"}),
            {}};
}

ScenarioDef p4_1q() {
    return {single_qubit("p4-1q", "one qubit over the fourth four-qubit channel", make_channel("p4"),
                         {cnot(1, 5), h(1), measure({1}), abort_on({"0"}), measure({3, 4, 5}), send(3)},
                         std::nullopt),
            {}};
}

const std::map<std::string, std::function<ScenarioDef()>, std::less<>> &registry() {
    static const std::map<std::string, std::function<ScenarioDef()>, std::less<>> entries{
        {"bell-1q", bell_1q}, {"ghz-1q", ghz_1q}, {"p1-1q", p1_1q},           {"p1-2q", p1_2q},
        {"p2-1q", p2_1q},     {"p2-2q", p2_2q},   {"p3-1q", p3_1q},           {"p3-1q-bob4", p3_1q_bob4},
        {"p4-1q", p4_1q},     {"w-1q", w_1q},     {"w-2q", w_2q},             {"w-variant-2q", w_variant_2q},
    };
    return entries;
}

}  // namespace

ScenarioDef builtin(std::string_view name) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        throw ScenarioError("unknown scenario '" + std::string(name) + "'");
    }
    return it->second();
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto &[name, make] : registry()) {
        names.push_back(name);
    }
    return names;
}

bool is_builtin(std::string_view name) {
    return registry().find(name) != registry().end();
}

VerificationReport verify_builtin(const ScenarioDef &def, VerifyOptions options) {
    options.sets = def.sets;
    return verify_scenario(def.protocol, options);
}

}  // namespace teleport
