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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "teleport/density.h"

namespace teleport {

namespace {

const Amplitude kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
constexpr char kPauliNames[] = "IXYZ";

std::string pauli_string(std::size_t index, std::size_t k) {
    std::string out(k, 'I');
    for (std::size_t q = k; q-- > 0;) {
        out[q] = kPauliNames[index % 4];
        index /= 4;
    }
    return out;
}

PureState apply_paulis(const PureState &s, const Labels &labels, const std::string &paulis) {
    PureState out = s.reordered(labels);
    for (std::size_t q = 0; q < labels.size(); q++) {
        if (paulis[q] != 'I') {
            out = apply_1q(out, labels[q], gates::by_name(std::string_view(&paulis[q], 1)));
        }
    }
    return out;
}

bool is_main(const std::vector<OutcomeRecord> &record) {
    return std::none_of(record.begin(), record.end(), [](const OutcomeRecord &r) { return r.regain; });
}

std::vector<int> order_of(const std::vector<OutcomeRecord> &record) {
    std::vector<int> out;
    for (const auto &r : record) {
        out.push_back(r.index);
    }
    return out;
}

const Regain *find_regain(const std::vector<Step> &steps) {
    for (const auto &s : steps) {
        if (const auto *a = std::get_if<AbortOnOp>(&s.op); a && a->regain) {
            return &*a->regain;
        }
        if (const auto *sw = std::get_if<SwitchOp>(&s.op)) {
            for (const auto &c : sw->cases) {
                if (const Regain *r = find_regain(c.steps)) {
                    return r;
                }
            }
        }
    }
    return nullptr;
}

ClaimCheck check_claim(const std::optional<Claim> &claim, const std::vector<double> &values, double tolerance) {
    ClaimCheck out;
    out.claim = claim;
    if (!claim) {
        return out;
    }
    for (double v : values) {
        out.delta = std::max(out.delta, std::abs(v - claim->probability));
    }
    out.match = out.delta <= tolerance;
    return out;
}

// Unnormalized leaf vector sqrt(p) * state; every leaf amplitude is linear in
// the input parameters, so this is the quantity that superposes.
std::vector<Amplitude> unnormalized(const Leaf &leaf) {
    std::vector<Amplitude> out(leaf.state.amplitudes().begin(), leaf.state.amplitudes().end());
    const double scale = std::sqrt(leaf.probability);
    for (auto &a : out) {
        a *= scale;
    }
    return out;
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

// Coefficient in front of a symbol: "" for 1, "-" for -1, "i", "0.5", "(0.5+0.5i)".
std::string format_coefficient(Amplitude c) {
    constexpr double eps = 1e-9;
    const bool has_re = std::abs(c.real()) > eps;
    const bool has_im = std::abs(c.imag()) > eps;
    if (has_re && !has_im) {
        if (std::abs(c.real() - 1) < eps) {
            return "";
        }
        if (std::abs(c.real() + 1) < eps) {
            return "-";
        }
        return format_number(c.real());
    }
    if (has_im && !has_re) {
        if (std::abs(c.imag() - 1) < eps) {
            return "i";
        }
        if (std::abs(c.imag() + 1) < eps) {
            return "-i";
        }
        return format_number(c.imag()) + "i";
    }
    std::string im = format_number(c.imag());
    return "(" + format_number(c.real()) + (c.imag() >= 0 ? "+" : "") + im + "i)";
}

std::string join_outcomes(const std::vector<std::string> &parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); k++) {
        out += (k ? "·" : "") + parts[k];
    }
    return out;
}

bool same_labels(const Labels &a, const Labels &b) {
    return a == b;
}

// Name of a path under a set claim, or nothing if the path does not qualify.
std::optional<std::string> set_name(const std::vector<OutcomeRecord> &record, const OutcomeSetClaim &claim) {
    if (is_main(record) == claim.regain) {
        return std::nullopt;
    }
    for (const auto &[labels, outcome] : claim.given) {
        bool found = std::any_of(record.begin(), record.end(), [&](const OutcomeRecord &r) {
            return same_labels(r.labels, labels) && r.outcome == outcome;
        });
        if (!found) {
            return std::nullopt;
        }
    }
    std::vector<std::string> parts;
    for (const auto &labels : claim.measured) {
        auto it = std::find_if(record.begin(), record.end(), [&](const OutcomeRecord &r) {
            return same_labels(r.labels, labels) && r.regain == claim.regain && !r.leftover;
        });
        if (it == record.end()) {
            return std::nullopt;
        }
        parts.push_back(it->outcome);
    }
    return join_outcomes(parts);
}

}  // namespace

std::string CorrectionOp::str() const {
    static const char *const prefixes[4] = {"", "i", "-", "-i"};
    std::string out = prefixes[phase & 3];
    for (std::size_t q = 0; q < paulis.size(); q++) {
        if (q) {
            out += "⊗";
        }
        out += paulis[q];
    }
    return out;
}

PureState CorrectionOp::apply(const PureState &s, const Labels &labels) const {
    PureState out = apply_paulis(s, labels, paulis);
    std::vector<Amplitude> amps(out.amplitudes().begin(), out.amplitudes().end());
    for (auto &a : amps) {
        a *= kPhases[phase & 3];
    }
    return PureState(labels, std::move(amps));
}

std::optional<CorrectionOp> solve_correction(std::span<const PureState> states, std::span<const PureState> targets,
                                             double tolerance) {
    if (states.size() != targets.size()) {
        throw LabelError("solve_correction: states and targets are not aligned");
    }
    if (states.empty()) {
        return std::nullopt;
    }
    const Labels &labels = targets.front().labels();
    for (std::size_t i = 0; i < states.size(); i++) {
        const Labels &a = states[i].labels();
        const Labels &b = targets[i].labels();
        if (b != labels || !std::is_permutation(a.begin(), a.end(), b.begin(), b.end())) {
            throw LabelError("solve_correction: state and target cover different qubits");
        }
    }
    const std::size_t k = labels.size();
    const std::size_t count = std::size_t{1} << (2 * k);
    for (std::size_t index = 0; index < count; index++) {
        const std::string paulis = pauli_string(index, k);
        // <target|P|state> per point; the phase choice only rotates it.
        std::vector<Amplitude> overlaps;
        for (std::size_t i = 0; i < states.size(); i++) {
            overlaps.push_back(inner_product(targets[i], apply_paulis(states[i], labels, paulis)));
        }
        for (int phase = 0; phase < 4; phase++) {
            bool ok = std::all_of(overlaps.begin(), overlaps.end(), [&](Amplitude o) {
                Amplitude v = kPhases[phase] * o;
                return std::norm(v) >= 1 - tolerance && v.real() >= 1 - tolerance;
            });
            if (ok) {
                return CorrectionOp{paulis, phase};
            }
        }
    }
    return std::nullopt;
}

double best_pauli_fidelity(std::span<const PureState> states, std::span<const PureState> targets) {
    if (states.empty()) {
        return 0;
    }
    const Labels &labels = targets.front().labels();
    const std::size_t count = std::size_t{1} << (2 * labels.size());
    double best = 0;
    for (std::size_t index = 0; index < count; index++) {
        const std::string paulis = pauli_string(index, labels.size());
        double worst = 1;
        for (std::size_t i = 0; i < states.size(); i++) {
            worst = std::min(worst, fidelity(targets[i], apply_paulis(states[i], labels, paulis)));
        }
        best = std::max(best, worst);
    }
    return best;
}

Aggregate summarize(std::vector<double> values) {
    Aggregate a;
    a.per_point = std::move(values);
    if (a.per_point.empty()) {
        return a;
    }
    a.mean = std::accumulate(a.per_point.begin(), a.per_point.end(), 0.0) / static_cast<double>(a.per_point.size());
    a.min = *std::min_element(a.per_point.begin(), a.per_point.end());
    a.max = *std::max_element(a.per_point.begin(), a.per_point.end());
    return a;
}

std::string render_linear(const std::vector<std::vector<Amplitude>> &columns, const std::vector<std::string> &symbols,
                          std::size_t num_qubits) {
    constexpr double eps = 1e-9;
    const std::size_t dim = std::size_t{1} << num_qubits;
    Amplitude pivot = 0;
    for (std::size_t j = 0; j < dim && pivot == Amplitude{0}; j++) {
        for (const auto &col : columns) {
            if (std::abs(col[j]) > eps) {
                pivot = col[j];
                break;
            }
        }
    }
    if (pivot == Amplitude{0}) {
        return "0";
    }
    std::string out;
    for (std::size_t j = 0; j < dim; j++) {
        std::vector<std::pair<Amplitude, const std::string *>> terms;
        for (std::size_t k = 0; k < columns.size(); k++) {
            Amplitude c = columns[k][j] / pivot;
            if (std::abs(c) > eps) {
                terms.emplace_back(c, &symbols[k]);
            }
        }
        if (terms.empty()) {
            continue;
        }
        std::string ket = "|";
        for (std::size_t q = 0; q < num_qubits; q++) {
            ket += (j >> (num_qubits - 1 - q)) & 1 ? '1' : '0';
        }
        ket += "⟩";
        std::string term;
        if (terms.size() == 1) {
            term = format_coefficient(terms[0].first) + *terms[0].second + ket;
        } else {
            std::string form;
            for (const auto &[c, sym] : terms) {
                std::string piece = format_coefficient(c) + *sym;
                if (form.empty()) {
                    form = piece;
                } else if (piece[0] == '-') {
                    form += " - " + piece.substr(1);
                } else {
                    form += " + " + piece;
                }
            }
            term = "(" + form + ")" + ket;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

std::vector<double> no_signaling_check(const Protocol &p, std::span<const ParamPoint> points) {
    if (points.size() < 2) {
        throw ConstraintError("no-signaling check needs at least two parameter points");
    }
    std::vector<double> out;
    const Labels &bob = p.receiver();
    for (std::size_t budget = 0;; budget++) {
        bool all_done = true;
        std::vector<DensityMatrix> rhos;
        for (const auto &point : points) {
            bool done = false;
            auto branches = execute_prefix(p, point, budget, &done);
            all_done = all_done && done;
            std::vector<std::pair<double, DensityMatrix>> members;
            for (const auto &b : branches) {
                members.emplace_back(b.probability, reduce(b.state, bob));
            }
            rhos.push_back(mixture(members));
        }
        double worst = 0;
        for (std::size_t i = 0; i < rhos.size(); i++) {
            for (std::size_t j = i + 1; j < rhos.size(); j++) {
                worst = std::max(worst, trace_distance(rhos[i], rhos[j]));
            }
        }
        out.push_back(worst);
        if (all_done) {
            return out;
        }
    }
}

VerificationReport verify_scenario(const Protocol &p, const VerifyOptions &options) {
    validate(p);
    VerificationReport report;
    report.scenario = p.name;
    report.description = p.description;
    report.family = p.input.family;
    report.receiver = p.receiver();
    report.seed = options.seed;
    report.points = options.points ? *options.points : sample_params(p.input.family, options.samples, options.seed);
    for (const auto &point : report.points) {
        check_constraint(p.input.family, point);
    }
    const std::size_t n = report.points.size();

    std::vector<BranchTree> trees;
    for (const auto &point : report.points) {
        trees.push_back(execute(p, point));
    }
    std::vector<BranchTree> basis_trees;
    for (const auto &point : family_basis_points(p.input.family)) {
        basis_trees.push_back(execute(p, point));
    }
    const auto weights = family_weights(p.input.family);
    const auto symbols = family_symbols(p.input.family);

    // Align leaves across points by their outcome path.
    struct Slot {
        std::vector<int> order;
        std::vector<const Leaf *> at;
    };
    std::map<std::string, Slot> slots;
    std::set<std::string> reachable_prefixes;
    for (std::size_t i = 0; i < n; i++) {
        for (const auto &leaf : trees[i].leaves) {
            Slot &slot = slots[leaf.key()];
            if (slot.at.empty()) {
                slot.order = order_of(leaf.record);
                slot.at.assign(n, nullptr);
            }
            slot.at[i] = &leaf;
            for (std::size_t len = 1; len <= leaf.record.size(); len++) {
                reachable_prefixes.insert(
                    leaf_key(std::vector<OutcomeRecord>(leaf.record.begin(), leaf.record.begin() + len)));
            }
        }
    }
    std::vector<std::pair<std::vector<int>, std::string>> ordered;
    for (const auto &[key, slot] : slots) {
        ordered.emplace_back(slot.order, key);
    }
    std::sort(ordered.begin(), ordered.end());

    std::map<std::string, std::vector<OutcomeRecord>> impossible;
    for (const auto &tree : trees) {
        for (const auto &record : tree.impossible) {
            std::string key = leaf_key(record);
            if (!reachable_prefixes.count(key)) {
                impossible.emplace(key, record);
            }
        }
    }
    for (const auto &[key, record] : impossible) {
        report.impossible.push_back(key);
    }

    Invariants &inv = report.invariants;
    std::vector<double> main_sum(n, 0.0), regain_sum(n, 0.0), regain_parent(n, 0.0);
    std::vector<double> success(n, 0.0), regain_success(n, 0.0);
    std::set<std::string> corrections;

    for (const auto &[order, key] : ordered) {
        const Slot &slot = slots.at(key);
        const Leaf *any = *std::find_if(slot.at.begin(), slot.at.end(), [](const Leaf *l) { return l != nullptr; });
        LeafVerdict v;
        v.key = key;
        v.record = any->record;
        v.status = any->status;
        v.has_regain = any->has_regain;
        v.receiver = any->receiver;
        v.cbits = any->cbits;
        v.probability.assign(n, 0.0);

        std::vector<PureState> states, targets;
        for (std::size_t i = 0; i < n; i++) {
            const Leaf *leaf = slot.at[i];
            if (!leaf) {
                continue;
            }
            v.probability[i] = leaf->probability;
            inv.max_norm_error = std::max(inv.max_norm_error, std::abs(leaf->state.norm() - 1));
            if (v.status != LeafStatus::kAborted) {
                states.push_back(leaf->state);
                targets.push_back(family_state(p.input.family, report.points[i], leaf->receiver));
            }
        }
        if (v.status != LeafStatus::kAborted) {
            v.correction = solve_correction(states, targets);
            v.success = v.correction.has_value();
            if (v.correction) {
                double worst = 1;
                for (std::size_t i = 0; i < states.size(); i++) {
                    worst = std::min(worst, fidelity(targets[i], v.correction->apply(states[i], targets[i].labels())));
                }
                v.min_fidelity = worst;
            } else {
                v.min_fidelity = best_pauli_fidelity(states, targets);
            }
        }

        // Linear map from parameters to the unnormalized leaf vector.
        std::vector<std::vector<Amplitude>> columns;
        const std::size_t dim = any->state.dimension();
        for (std::size_t k = 0; k < basis_trees.size(); k++) {
            std::vector<Amplitude> col(dim, 0.0);
            for (const auto &leaf : basis_trees[k].leaves) {
                if (leaf.key() == key) {
                    col = unnormalized(leaf);
                    for (auto &a : col) {
                        a *= std::sqrt(weights[k]);
                    }
                }
            }
            columns.push_back(std::move(col));
        }
        v.state_text = render_linear(columns, symbols, any->state.num_qubits());
        for (std::size_t i = 0; i < n; i++) {
            std::vector<Amplitude> actual =
                slot.at[i] ? unnormalized(*slot.at[i]) : std::vector<Amplitude>(dim, 0.0);
            for (std::size_t j = 0; j < dim; j++) {
                Amplitude predicted = 0;
                for (std::size_t k = 0; k < columns.size(); k++) {
                    predicted += report.points[i].values[k] * columns[k][j];
                }
                inv.max_linearity_error = std::max(inv.max_linearity_error, std::abs(predicted - actual[j]));
            }
        }

        const bool main = is_main(v.record);
        for (std::size_t i = 0; i < n; i++) {
            (main ? main_sum : regain_sum)[i] += v.probability[i];
            if (v.has_regain) {
                regain_parent[i] += v.probability[i];
            }
            if (v.success) {
                (main ? success : regain_success)[i] += v.probability[i];
            }
        }
        if (main && v.status == LeafStatus::kCompleted) {
            report.cbits_stated = std::max(report.cbits_stated, v.cbits);
            if (v.success) {
                corrections.insert(v.correction->paulis);
            }
        }
        report.leaves.push_back(std::move(v));
    }

    report.aggregate = summarize(success);
    report.claim = check_claim(p.claim, success, options.claim_tolerance);
    report.cbits_min = corrections.size() > 1 ? static_cast<int>(std::ceil(std::log2(corrections.size()))) : 0;

    for (std::size_t i = 0; i < n; i++) {
        inv.max_probability_sum_error = std::max(inv.max_probability_sum_error, std::abs(main_sum[i] - 1));
        inv.max_regain_sum_error = std::max(inv.max_regain_sum_error, std::abs(regain_sum[i] - regain_parent[i]));
    }

    if (const Regain *r = find_regain(p.steps)) {
        RegainReport rr;
        rr.target = r->target;
        std::vector<double> conditional(n, 0.0);
        for (std::size_t i = 0; i < n; i++) {
            conditional[i] = regain_parent[i] > kPruneThreshold ? regain_success[i] / regain_parent[i] : 0.0;
        }
        rr.reached = summarize(regain_parent);
        rr.unconditional = summarize(regain_success);
        rr.conditional = summarize(conditional);
        ClaimCheck u = check_claim(r->claim, regain_success, options.claim_tolerance);
        ClaimCheck c = check_claim(r->claim, conditional, options.claim_tolerance);
        if (u.match || !c.match) {
            rr.claim = u;
            rr.matched_reading = u.match ? "unconditional" : "";
            rr.claim.delta = std::min(u.delta, c.delta);
        } else {
            rr.claim = c;
            rr.matched_reading = "conditional";
        }
        for (const auto &leaf : report.leaves) {
            if (!is_main(leaf.record)) {
                rr.cbits = std::max(rr.cbits, leaf.cbits);
            }
        }
        report.regain = std::move(rr);
    }

    for (const auto &claim : options.sets) {
        OutcomeSetCheck check;
        check.claim = claim;
        std::map<std::string, bool> named;  // name -> every leaf succeeds
        for (const auto &leaf : report.leaves) {
            if (auto name = set_name(leaf.record, claim)) {
                auto [it, fresh] = named.emplace(*name, leaf.success);
                if (!fresh) {
                    it->second = it->second && leaf.success;
                }
            }
        }
        std::set<std::string> gone;
        for (const auto &[key, record] : impossible) {
            if (auto name = set_name(record, claim); name && !named.count(*name)) {
                gone.insert(*name);
            }
        }
        for (const auto &[name, ok] : named) {
            (ok ? check.success : check.failure).push_back(name);
        }
        check.impossible.assign(gone.begin(), gone.end());
        std::vector<std::string> expected = claim.expected;
        std::sort(expected.begin(), expected.end());
        check.match = expected == check.success;
        report.sets.push_back(std::move(check));
    }

    report.no_signaling = n >= 2 ? no_signaling_check(p, report.points) : std::vector<double>{};
    for (double d : report.no_signaling) {
        inv.max_no_signaling = std::max(inv.max_no_signaling, d);
    }

    auto flag = [&](bool bad, const std::string &what, double value) {
        if (bad) {
            inv.violations.push_back(what + " " + format_number(value));
        }
    };
    flag(inv.max_probability_sum_error > kProbabilitySumTolerance, "leaf probability sum off by",
         inv.max_probability_sum_error);
    flag(inv.max_regain_sum_error > kProbabilitySumTolerance, "regain probability sum off by",
         inv.max_regain_sum_error);
    flag(inv.max_norm_error > kNormTolerance, "leaf state norm off by", inv.max_norm_error);
    flag(inv.max_linearity_error > kFidelityTolerance, "leaf map not linear, error", inv.max_linearity_error);
    flag(inv.max_no_signaling > kNoSignalingTolerance, "receiver state depends on input, trace distance",
         inv.max_no_signaling);
    return report;
}

std::vector<LedgerRow> ledger(std::span<const VerificationReport> reports) {
    std::vector<LedgerRow> rows;
    for (const auto &r : reports) {
        LedgerRow row;
        row.scenario = r.scenario;
        row.stage = "main";
        row.computed = r.aggregate;
        if (r.claim.claim) {
            row.claimed = r.claim.claim->probability;
            row.citation = r.claim.claim->citation;
            row.delta = r.claim.delta;
            row.match = r.claim.match;
        }
        rows.push_back(std::move(row));
        if (r.regain) {
            LedgerRow rr;
            rr.scenario = r.scenario;
            rr.stage = "regain";
            rr.computed = r.regain->unconditional;
            rr.conditional = r.regain->conditional;
            if (r.regain->claim.claim) {
                rr.claimed = r.regain->claim.claim->probability;
                rr.citation = r.regain->claim.claim->citation;
                rr.delta = r.regain->claim.delta;
                rr.match = r.regain->claim.match;
                rr.reading = r.regain->matched_reading;
            }
            rows.push_back(std::move(rr));
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const LedgerRow &a, const LedgerRow &b) { return a.scenario < b.scenario; });
    return rows;
}

}  // namespace teleport
