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

#include <algorithm>
#include <set>
#include <sstream>

namespace teleport {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_labels(const Labels &labels) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < labels.size(); k++) {
        out << (k ? "," : "") << labels[k];
    }
    out << ")";
    return out.str();
}

std::string step_path(const std::string &prefix, std::size_t index) {
    return prefix + "[" + std::to_string(index) + "]";
}

// ---------------------------------------------------------------------------
// Validation.

struct Scope {
    std::set<Label> live;
    std::set<Label> computational;  // labels measured in the Z basis so far
    // Basis name and arity of the latest measurement, if the previous step was one.
    std::optional<std::pair<std::string, std::size_t>> just_measured;
};

class Validator {
   public:
    explicit Validator(const Protocol &p) : p_(p) {
        alice_.insert(p.input.labels.begin(), p.input.labels.end());
        alice_.insert(p.resource.alice.begin(), p.resource.alice.end());
        bob_.insert(p.resource.bob.begin(), p.resource.bob.end());
    }

    void run() {
        check_top_level();
        Scope scope;
        scope.live = alice_;
        scope.live.insert(bob_.begin(), bob_.end());
        walk(p_.steps, "steps", scope, false);
        for (Label l : p_.resource.bob) {
            if (!scope.live.count(l)) {
                throw ProtocolError("", "receiver qubit " + std::to_string(l) + " is measured before the end");
            }
        }
    }

   private:
    void check_top_level() {
        if (p_.name.empty()) {
            throw ProtocolError("name", "protocol name is empty");
        }
        if (p_.input.labels.size() != family_qubits(p_.input.family)) {
            throw ProtocolError("input.labels", std::string(family_name(p_.input.family)) + " needs " +
                                                    std::to_string(family_qubits(p_.input.family)) + " labels");
        }
        std::set<Label> seen;
        for (Label l : p_.input.labels) {
            if (!seen.insert(l).second) {
                throw ProtocolError("input.labels", "duplicate label " + std::to_string(l));
            }
            if (p_.resource.state.has_label(l)) {
                throw ProtocolError("input.labels", "label " + std::to_string(l) + " is also a channel qubit");
            }
        }
        try {
            assign_parties(p_.resource, p_.resource.alice, p_.resource.bob);
        } catch (const ChannelError &e) {
            throw ProtocolError("resource", e.what());
        }
        if (p_.resource.bob.empty()) {
            throw ProtocolError("bob", "the receiver holds no qubits");
        }
        if (p_.resource.bob.size() != family_qubits(p_.input.family)) {
            throw ProtocolError("bob", "receiver holds " + std::to_string(p_.resource.bob.size()) +
                                           " qubits but the input has " +
                                           std::to_string(family_qubits(p_.input.family)));
        }
        if (p_.input.params) {
            try {
                check_constraint(p_.input.family, *p_.input.params);
            } catch (const ConstraintError &e) {
                throw ProtocolError("input.params", e.what());
            }
        }
        if (p_.claim) {
            check_claim(*p_.claim, "claim");
        }
    }

    static void check_claim(const Claim &c, const std::string &path) {
        if (!(c.probability >= 0 && c.probability <= 1)) {
            throw ProtocolError(path, "claimed probability must lie in [0, 1]");
        }
    }

    void use(const std::string &path, const Scope &scope, Party party, Label l) const {
        if (!scope.live.count(l)) {
            bool known = alice_.count(l) || bob_.count(l);
            throw ProtocolError(path, known ? "qubit " + std::to_string(l) + " was already measured"
                                            : "unknown qubit " + std::to_string(l));
        }
        const auto &owned = party == Party::kAlice ? alice_ : bob_;
        if (!owned.count(l)) {
            throw ProtocolError(path, std::string(party == Party::kAlice ? "Alice" : "Bob") +
                                          " does not hold qubit " + std::to_string(l));
        }
    }

    void walk(const std::vector<Step> &steps, const std::string &prefix, Scope &scope, bool in_regain) {
        for (std::size_t i = 0; i < steps.size(); i++) {
            const std::string path = step_path(prefix, i);
            const Step &step = steps[i];
            auto measured = std::exchange(scope.just_measured, std::nullopt);
            std::visit(
                Overloaded{
                    [&](const CnotOp &op) {
                        if (op.control == op.target) {
                            throw ProtocolError(path, "cnot control and target coincide");
                        }
                        use(path, scope, step.party, op.control);
                        use(path, scope, step.party, op.target);
                    },
                    [&](const HOp &op) { use(path, scope, step.party, op.label); },
                    [&](const GateOp &op) {
                        if (!gates::is_known(op.gate)) {
                            throw ProtocolError(path, "unknown gate '" + op.gate + "'");
                        }
                        use(path, scope, step.party, op.label);
                    },
                    [&](const MeasureOp &op) {
                        if (op.labels.empty()) {
                            throw ProtocolError(path, "measurement of no qubits");
                        }
                        try {
                            MeasurementBasis::by_name(op.basis, op.labels.size());
                        } catch (const BasisError &e) {
                            throw ProtocolError(path, e.what());
                        }
                        std::set<Label> distinct(op.labels.begin(), op.labels.end());
                        if (distinct.size() != op.labels.size()) {
                            throw ProtocolError(path, "duplicate qubit in measurement");
                        }
                        for (Label l : op.labels) {
                            use(path, scope, step.party, l);
                        }
                        for (Label l : op.labels) {
                            scope.live.erase(l);
                            if (op.basis == "computational") {
                                scope.computational.insert(l);
                            }
                        }
                        scope.just_measured = std::make_pair(op.basis, op.labels.size());
                    },
                    [&](const SendOp &op) {
                        if (op.bits < 1) {
                            throw ProtocolError(path, "send needs at least one bit");
                        }
                    },
                    [&](const AbortOnOp &op) {
                        if (!measured) {
                            throw ProtocolError(path, "abort-on must directly follow a measurement");
                        }
                        if (op.outcomes.empty()) {
                            throw ProtocolError(path, "abort-on lists no outcomes");
                        }
                        auto basis = MeasurementBasis::by_name(measured->first, measured->second);
                        for (const auto &o : op.outcomes) {
                            bool found = std::any_of(basis.vectors().begin(), basis.vectors().end(),
                                                     [&](const BasisVector &v) { return v.label == o; });
                            if (!found) {
                                throw ProtocolError(path, "'" + o + "' is not an outcome of the preceding measurement");
                            }
                        }
                        if (op.regain) {
                            if (in_regain) {
                                throw ProtocolError(path + ".regain", "regains cannot nest");
                            }
                            check_regain(*op.regain, path + ".regain", scope);
                        }
                        // An abort ends the matching branches only; the rest may
                        // still follow up with another abort on the same outcome.
                        scope.just_measured = measured;
                    },
                    [&](const SwitchOp &op) { check_switch(op, path, scope, in_regain); },
                },
                step.op);
        }
    }

    void check_regain(const Regain &r, const std::string &path, const Scope &scope) {
        if (r.target.size() != family_qubits(p_.input.family)) {
            throw ProtocolError(path + ".target", "regain target must hold " +
                                                      std::to_string(family_qubits(p_.input.family)) + " qubits");
        }
        for (Label l : r.target) {
            if (!scope.live.count(l)) {
                throw ProtocolError(path + ".target", "qubit " + std::to_string(l) + " is not available");
            }
        }
        if (r.claim) {
            check_claim(*r.claim, path + ".claim");
        }
        Scope inner = scope;
        inner.just_measured.reset();
        walk(r.steps, path + ".steps", inner, true);
        for (Label l : r.target) {
            if (!inner.live.count(l)) {
                throw ProtocolError(path + ".target", "qubit " + std::to_string(l) + " is measured during the regain");
            }
        }
    }

    void check_switch(const SwitchOp &op, const std::string &path, Scope &scope, bool in_regain) {
        if (op.labels.empty()) {
            throw ProtocolError(path, "switch on no qubits");
        }
        for (Label l : op.labels) {
            if (!scope.computational.count(l)) {
                throw ProtocolError(path, "switch reads qubit " + std::to_string(l) +
                                              ", which has no computational outcome yet");
            }
        }
        std::set<std::string> seen;
        Scope merged = scope;
        for (std::size_t k = 0; k < op.cases.size(); k++) {
            const auto &c = op.cases[k];
            const std::string case_path = step_path(path + ".cases", k);
            if (c.outcome.size() != op.labels.size() ||
                c.outcome.find_first_not_of("01") != std::string::npos) {
                throw ProtocolError(case_path, "outcome '" + c.outcome + "' does not fit " + join_labels(op.labels));
            }
            if (!seen.insert(c.outcome).second) {
                throw ProtocolError(case_path, "duplicate case '" + c.outcome + "'");
            }
            Scope inner = scope;
            walk(c.steps, case_path + ".steps", inner, in_regain);
            // Only labels alive on every path stay usable after the switch.
            std::set<Label> both;
            std::set_intersection(merged.live.begin(), merged.live.end(), inner.live.begin(), inner.live.end(),
                                  std::inserter(both, both.begin()));
            merged.live = std::move(both);
            std::set<Label> z;
            std::set_intersection(merged.computational.begin(), merged.computational.end(),
                                  inner.computational.begin(), inner.computational.end(), std::inserter(z, z.begin()));
            merged.computational = std::move(z);
        }
        merged.just_measured.reset();
        scope = std::move(merged);
    }

    const Protocol &p_;
    std::set<Label> alice_;
    std::set<Label> bob_;
};

// ---------------------------------------------------------------------------
// Execution.

struct Cursor {
    const std::vector<Step> *steps;
    std::size_t index;
};

struct Frame {
    PureState state;
    double probability;
    std::vector<OutcomeRecord> record;
    int cbits;
    std::vector<Cursor> stack;
    std::size_t used = 0;  // steps consumed, for prefix runs
};

class Executor {
   public:
    Executor(const Protocol &p, std::optional<std::size_t> budget) : p_(p), budget_(budget) {}

    BranchTree tree;
    std::vector<PrefixBranch> prefix;
    bool cut_short = false;

    void start(PureState s) {
        Frame f{std::move(s), 1.0, {}, 0, {{&p_.steps, 0}}};
        run(std::move(f), nullptr);
    }

   private:
    // `regain` is null on the main steps.
    void run(Frame f, const Regain *regain) {
        while (true) {
            while (!f.stack.empty() && f.stack.back().index == f.stack.back().steps->size()) {
                f.stack.pop_back();
            }
            if (f.stack.empty()) {
                finish(std::move(f), regain);
                return;
            }
            Cursor &cur = f.stack.back();
            const Step &step = (*cur.steps)[cur.index];
            if (budget_) {
                if (std::holds_alternative<SendOp>(step.op) || step.party == Party::kBob) {
                    prefix.push_back({f.probability, std::move(f.state)});
                    return;
                }
                if (f.used == *budget_) {
                    cut_short = true;
                    prefix.push_back({f.probability, std::move(f.state)});
                    return;
                }
            }
            cur.index++;
            f.used++;
            bool keep_going = std::visit(
                Overloaded{
                    [&](const CnotOp &op) {
                        f.state = apply_cnot(f.state, op.control, op.target);
                        return true;
                    },
                    [&](const HOp &op) {
                        f.state = apply_1q(f.state, op.label, gates::H);
                        return true;
                    },
                    [&](const GateOp &op) {
                        f.state = apply_1q(f.state, op.label, gates::by_name(op.gate));
                        return true;
                    },
                    [&](const MeasureOp &op) {
                        branch(f, op.labels, op.basis, regain != nullptr, false, [&](Frame g) { run(std::move(g), regain); });
                        return false;
                    },
                    [&](const SendOp &op) {
                        f.cbits += op.bits;
                        return true;
                    },
                    [&](const AbortOnOp &op) {
                        if (f.record.empty()) {
                            throw ProtocolError("", "abort-on before any measurement");
                        }
                        const std::string &last = f.record.back().outcome;
                        if (std::find(op.outcomes.begin(), op.outcomes.end(), last) == op.outcomes.end()) {
                            return true;
                        }
                        abort(std::move(f), regain == nullptr && op.regain ? &*op.regain : nullptr);
                        return false;
                    },
                    [&](const SwitchOp &op) {
                        std::string key = switch_key(f.record, op.labels);
                        for (const auto &c : op.cases) {
                            if (c.outcome == key) {
                                f.stack.push_back({&c.steps, 0});
                                break;
                            }
                        }
                        return true;
                    },
                },
                step.op);
            if (!keep_going) {
                return;
            }
        }
    }

    static std::string switch_key(const std::vector<OutcomeRecord> &record, const Labels &labels) {
        std::string key;
        for (Label l : labels) {
            char bit = '?';
            for (const auto &r : record) {
                auto it = std::find(r.labels.begin(), r.labels.end(), l);
                if (it != r.labels.end() && r.basis == "computational") {
                    bit = r.outcome[static_cast<std::size_t>(it - r.labels.begin())];
                }
            }
            if (bit == '?') {
                throw ProtocolError("", "switch reads qubit " + std::to_string(l) + " before it is measured");
            }
            key += bit;
        }
        return key;
    }

    template <class Next>
    void branch(const Frame &f, const Labels &labels, const std::string &basis_name, bool in_regain, bool leftover,
                Next next) {
        const MeasurementBasis basis = MeasurementBasis::by_name(basis_name, labels.size());
        std::vector<Branch> branches = measure(f.state, labels, basis);
        std::size_t b = 0;
        for (std::size_t k = 0; k < basis.vectors().size(); k++) {
            OutcomeRecord rec{labels, basis_name, basis.vectors()[k].label, static_cast<int>(k), in_regain, leftover};
            if (b < branches.size() && branches[b].outcome == rec.outcome) {
                Frame g{branches[b].post_state, f.probability * branches[b].probability, f.record, f.cbits, f.stack,
                        f.used};
                g.record.push_back(std::move(rec));
                next(std::move(g));
                b++;
            } else if (!budget_) {
                auto record = f.record;
                record.push_back(std::move(rec));
                tree.impossible.push_back(std::move(record));
            }
        }
    }

    void abort(Frame f, const Regain *regain) {
        if (budget_) {
            prefix.push_back({f.probability, std::move(f.state)});
            return;
        }
        Labels remaining = f.state.labels();
        tree.leaves.push_back(Leaf{f.record, f.probability, f.state, remaining, f.cbits, LeafStatus::kAborted,
                                   regain != nullptr});
        if (regain) {
            Frame g{std::move(f.state), f.probability, std::move(f.record), f.cbits, {{&regain->steps, 0}}, f.used};
            run(std::move(g), regain);
        }
    }

    void finish(Frame f, const Regain *regain) {
        if (budget_) {
            prefix.push_back({f.probability, std::move(f.state)});
            return;
        }
        const Labels &receiver = regain ? regain->target : p_.resource.bob;
        Labels leftover;
        for (Label l : f.state.labels()) {
            if (std::find(receiver.begin(), receiver.end(), l) == receiver.end()) {
                leftover.push_back(l);
            }
        }
        if (!leftover.empty()) {
            branch(f, leftover, "computational", regain != nullptr, true, [&](Frame g) { emit(std::move(g), regain); });
            return;
        }
        emit(std::move(f), regain);
    }

    void emit(Frame f, const Regain *regain) {
        const Labels &receiver = regain ? regain->target : p_.resource.bob;
        PureState s = f.state.reordered(receiver);
        tree.leaves.push_back(Leaf{std::move(f.record), f.probability, std::move(s), receiver, f.cbits,
                                   regain ? LeafStatus::kRegain : LeafStatus::kCompleted, false});
    }

    const Protocol &p_;
    std::optional<std::size_t> budget_;
};

}  // namespace

void validate(const Protocol &p) {
    Validator(p).run();
}

std::string format_record(const OutcomeRecord &r) {
    return (r.regain ? "R" : "") + join_labels(r.labels) + "=" + r.outcome;
}

std::string leaf_key(const std::vector<OutcomeRecord> &record) {
    std::string key;
    for (const auto &r : record) {
        if (!key.empty()) {
            key += ' ';
        }
        key += format_record(r);
    }
    return key;
}

std::string_view status_name(LeafStatus s) {
    switch (s) {
        case LeafStatus::kCompleted:
            return "completed";
        case LeafStatus::kAborted:
            return "aborted";
        case LeafStatus::kRegain:
            return "regain";
    }
    return "?";
}

PureState initial_state(const Protocol &p, const ParamPoint &point) {
    return tensor(family_state(p.input.family, point, p.input.labels), p.resource.state);
}

namespace {

ParamPoint resolve_point(const Protocol &p, const std::optional<ParamPoint> &point) {
    if (point) {
        return *point;
    }
    if (p.input.params) {
        return *p.input.params;
    }
    return fixed_params(p.input.family).back();
}

}  // namespace

BranchTree execute(const Protocol &p, const std::optional<ParamPoint> &point) {
    Executor ex(p, std::nullopt);
    ex.start(initial_state(p, resolve_point(p, point)));
    return std::move(ex.tree);
}

std::vector<PrefixBranch> execute_prefix(const Protocol &p, const ParamPoint &point, std::size_t budget, bool *done) {
    Executor ex(p, budget);
    ex.start(initial_state(p, point));
    if (done) {
        *done = !ex.cut_short;
    }
    return std::move(ex.prefix);
}

}  // namespace teleport
