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

#include "teleport/protocol_io.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace teleport {

using Json = nlohmann::ordered_json;

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string &message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------------------
// Reading.

void only_fields(const Json &j, const std::string &path, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw ProtocolError(path, "expected an object");
    }
    for (const auto &[key, value] : j.items()) {
        bool ok = false;
        for (auto a : allowed) {
            ok = ok || a == key;
        }
        if (!ok) {
            throw ProtocolError(path, "unknown field '" + key + "'");
        }
    }
}

const Json &field(const Json &j, const std::string &path, const char *name) {
    auto it = j.find(name);
    if (it == j.end()) {
        throw ProtocolError(path, std::string("missing field '") + name + "'");
    }
    return *it;
}

std::string sub(const std::string &path, const char *name) {
    return path.empty() ? std::string(name) : path + "." + name;
}

std::string get_string(const Json &j, const std::string &path) {
    if (!j.is_string()) {
        throw ProtocolError(path, "expected a string");
    }
    return j.get<std::string>();
}

double get_number(const Json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ProtocolError(path, "expected a number");
    }
    return j.get<double>();
}

Label get_label(const Json &j, const std::string &path) {
    if (!j.is_number_integer()) {
        throw ProtocolError(path, "expected an integer qubit label");
    }
    return j.get<Label>();
}

Labels get_labels(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        throw ProtocolError(path, "expected an array of qubit labels");
    }
    Labels out;
    for (std::size_t k = 0; k < j.size(); k++) {
        out.push_back(get_label(j[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
}

std::vector<Amplitude> get_amplitudes(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        throw ProtocolError(path, "expected an array of [re, im] pairs");
    }
    std::vector<Amplitude> out;
    for (std::size_t k = 0; k < j.size(); k++) {
        const std::string p = path + "[" + std::to_string(k) + "]";
        if (!j[k].is_array() || j[k].size() != 2) {
            throw ProtocolError(p, "expected a [re, im] pair");
        }
        out.emplace_back(get_number(j[k][0], p), get_number(j[k][1], p));
    }
    return out;
}

Claim get_claim(const Json &j, const std::string &path) {
    only_fields(j, path, {"probability", "citation"});
    Claim c;
    c.probability = get_number(field(j, path, "probability"), sub(path, "probability"));
    if (j.contains("citation")) {
        c.citation = get_string(j["citation"], sub(path, "citation"));
    }
    return c;
}

std::vector<Step> get_steps(const Json &j, const std::string &path);

Step get_step(const Json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ProtocolError(path, "expected a step object");
    }
    const std::string op = get_string(field(j, path, "op"), sub(path, "op"));
    Step step;
    if (j.contains("party")) {
        const std::string party = get_string(j["party"], sub(path, "party"));
        if (party == "bob") {
            step.party = Party::kBob;
        } else if (party != "alice") {
            throw ProtocolError(sub(path, "party"), "party must be 'alice' or 'bob'");
        }
    }
    if (op == "cnot") {
        only_fields(j, path, {"op", "party", "control", "target"});
        step.op = CnotOp{get_label(field(j, path, "control"), sub(path, "control")),
                         get_label(field(j, path, "target"), sub(path, "target"))};
    } else if (op == "h") {
        only_fields(j, path, {"op", "party", "label"});
        step.op = HOp{get_label(field(j, path, "label"), sub(path, "label"))};
    } else if (op == "gate") {
        only_fields(j, path, {"op", "party", "label", "gate"});
        step.op = GateOp{get_label(field(j, path, "label"), sub(path, "label")),
                         get_string(field(j, path, "gate"), sub(path, "gate"))};
    } else if (op == "measure") {
        only_fields(j, path, {"op", "party", "labels", "basis"});
        std::string basis = "computational";
        if (j.contains("basis")) {
            basis = get_string(j["basis"], sub(path, "basis"));
            if (!MeasurementBasis::is_known(basis)) {
                throw ProtocolError(sub(path, "basis"), "unknown basis '" + basis + "'");
            }
        }
        step.op = MeasureOp{get_labels(field(j, path, "labels"), sub(path, "labels")), basis};
    } else if (op == "send") {
        only_fields(j, path, {"op", "party", "bits"});
        const Json &bits = field(j, path, "bits");
        if (!bits.is_number_integer()) {
            throw ProtocolError(sub(path, "bits"), "expected an integer");
        }
        step.op = SendOp{bits.get<int>()};
    } else if (op == "abort-on") {
        only_fields(j, path, {"op", "party", "outcomes", "regain"});
        AbortOnOp abort;
        const Json &outcomes = field(j, path, "outcomes");
        if (!outcomes.is_array()) {
            throw ProtocolError(sub(path, "outcomes"), "expected an array of outcome strings");
        }
        for (std::size_t k = 0; k < outcomes.size(); k++) {
            abort.outcomes.push_back(get_string(outcomes[k], sub(path, "outcomes") + "[" + std::to_string(k) + "]"));
        }
        if (j.contains("regain")) {
            const std::string rp = sub(path, "regain");
            const Json &r = j["regain"];
            only_fields(r, rp, {"target", "steps", "claim"});
            Regain regain;
            regain.target = get_labels(field(r, rp, "target"), sub(rp, "target"));
            regain.steps = get_steps(field(r, rp, "steps"), sub(rp, "steps"));
            if (r.contains("claim")) {
                regain.claim = get_claim(r["claim"], sub(rp, "claim"));
            }
            abort.regain = std::move(regain);
        }
        step.op = std::move(abort);
    } else if (op == "switch") {
        only_fields(j, path, {"op", "party", "labels", "cases"});
        SwitchOp sw;
        sw.labels = get_labels(field(j, path, "labels"), sub(path, "labels"));
        const Json &cases = field(j, path, "cases");
        if (!cases.is_array()) {
            throw ProtocolError(sub(path, "cases"), "expected an array of cases");
        }
        for (std::size_t k = 0; k < cases.size(); k++) {
            const std::string cp = sub(path, "cases") + "[" + std::to_string(k) + "]";
            only_fields(cases[k], cp, {"outcome", "steps"});
            sw.cases.push_back({get_string(field(cases[k], cp, "outcome"), sub(cp, "outcome")),
                                get_steps(field(cases[k], cp, "steps"), sub(cp, "steps"))});
        }
        step.op = std::move(sw);
    } else {
        throw ProtocolError(sub(path, "op"), "unknown op '" + op + "'");
    }
    return step;
}

std::vector<Step> get_steps(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        throw ProtocolError(path, "expected an array of steps");
    }
    std::vector<Step> out;
    for (std::size_t k = 0; k < j.size(); k++) {
        out.push_back(get_step(j[k], path + "[" + std::to_string(k) + "]"));
    }
    return out;
}

ResourceState get_resource(const Json &doc) {
    const Json &r = field(doc, "", "resource");
    Labels alice = get_labels(field(doc, "", "alice"), "alice");
    Labels bob = get_labels(field(doc, "", "bob"), "bob");
    auto base = [&]() -> ResourceState {
        if (r.is_string()) {
            const std::string name = r.get<std::string>();
            if (!is_channel_name(name)) {
                throw ProtocolError("resource", "unknown channel '" + name + "'");
            }
            return make_channel(name);
        }
        if (r.is_object() && r.contains("catalog")) {
            only_fields(r, "resource", {"catalog", "labels"});
            const std::string name = get_string(r["catalog"], "resource.catalog");
            if (!is_channel_name(name)) {
                throw ProtocolError("resource.catalog", "unknown channel '" + name + "'");
            }
            return relabel(make_channel(name), get_labels(field(r, "resource", "labels"), "resource.labels"));
        }
        if (r.is_object()) {
            only_fields(r, "resource", {"labels", "amplitudes"});
            Labels labels = get_labels(field(r, "resource", "labels"), "resource.labels");
            auto amps = get_amplitudes(field(r, "resource", "amplitudes"), "resource.amplitudes");
            return ResourceState{"custom", PureState(std::move(labels), std::move(amps)), {}, {}};
        }
        throw ProtocolError("resource", "expected a channel name or an object");
    };
    try {
        return assign_parties(base(), std::move(alice), std::move(bob));
    } catch (const ProtocolError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ProtocolError("resource", e.what());
    } catch (const InvariantError &e) {
        throw ProtocolError("resource", e.what());
    }
}

// ---------------------------------------------------------------------------
// Writing.

Json amplitudes_json(std::span<const Amplitude> amps) {
    Json out = Json::array();
    for (const auto &a : amps) {
        out.push_back(Json::array({a.real(), a.imag()}));
    }
    return out;
}

Json claim_json(const Claim &c) {
    Json out = Json::object();
    out["probability"] = c.probability;
    out["citation"] = c.citation;
    return out;
}

Json steps_json(const std::vector<Step> &steps);

Json step_json(const Step &step) {
    Json out = Json::object();
    std::visit(
        [&](const auto &op) {
            using T = std::decay_t<decltype(op)>;
            if constexpr (std::is_same_v<T, CnotOp>) {
                out["op"] = "cnot";
                out["control"] = op.control;
                out["target"] = op.target;
            } else if constexpr (std::is_same_v<T, HOp>) {
                out["op"] = "h";
                out["label"] = op.label;
            } else if constexpr (std::is_same_v<T, GateOp>) {
                out["op"] = "gate";
                out["label"] = op.label;
                out["gate"] = op.gate;
            } else if constexpr (std::is_same_v<T, MeasureOp>) {
                out["op"] = "measure";
                out["labels"] = op.labels;
                out["basis"] = op.basis;
            } else if constexpr (std::is_same_v<T, SendOp>) {
                out["op"] = "send";
                out["bits"] = op.bits;
            } else if constexpr (std::is_same_v<T, AbortOnOp>) {
                out["op"] = "abort-on";
                out["outcomes"] = op.outcomes;
                if (op.regain) {
                    Json r = Json::object();
                    r["target"] = op.regain->target;
                    r["steps"] = steps_json(op.regain->steps);
                    if (op.regain->claim) {
                        r["claim"] = claim_json(*op.regain->claim);
                    }
                    out["regain"] = std::move(r);
                }
            } else if constexpr (std::is_same_v<T, SwitchOp>) {
                out["op"] = "switch";
                out["labels"] = op.labels;
                Json cases = Json::array();
                for (const auto &c : op.cases) {
                    Json cj = Json::object();
                    cj["outcome"] = c.outcome;
                    cj["steps"] = steps_json(c.steps);
                    cases.push_back(std::move(cj));
                }
                out["cases"] = std::move(cases);
            }
        },
        step.op);
    if (step.party == Party::kBob) {
        out["party"] = "bob";
    }
    return out;
}

Json steps_json(const std::vector<Step> &steps) {
    Json out = Json::array();
    for (const auto &s : steps) {
        out.push_back(step_json(s));
    }
    return out;
}

Json resource_json(const ResourceState &r) {
    if (is_channel_name(r.name)) {
        ResourceState base = make_channel(r.name);
        if (base.state == r.state) {
            return r.name;
        }
        if (base.state.num_qubits() == r.state.num_qubits()) {
            ResourceState moved = relabel(base, r.state.labels());
            if (moved.state == r.state) {
                Json out = Json::object();
                out["catalog"] = r.name;
                out["labels"] = r.state.labels();
                return out;
            }
        }
    }
    Json out = Json::object();
    out["labels"] = r.state.labels();
    out["amplitudes"] = amplitudes_json(r.state.amplitudes());
    return out;
}

bool is_flat(const Json &j) {
    if (!j.is_array()) {
        return !j.is_object();
    }
    return std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_primitive(); });
}

// Like dump(2), but arrays of scalars (labels, [re, im] pairs) stay on one line.
void pretty(const Json &j, std::size_t depth, std::string &out) {
    const std::string pad((depth + 1) * 2, ' ');
    const std::string close(depth * 2, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t k = 0;
        for (const auto &[key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            pretty(value, depth + 1, out);
            out += ++k < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    } else if (j.is_array() && !j.empty() && !is_flat(j)) {
        const bool pairs = std::all_of(j.begin(), j.end(), [](const Json &e) { return e.is_array() && is_flat(e); });
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); k++) {
            out += pad;
            if (pairs) {
                out += j[k].dump(-1, ' ', false);
            } else {
                pretty(j[k], depth + 1, out);
            }
            out += k + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    } else if (j.is_array()) {
        out += "[";
        for (std::size_t k = 0; k < j.size(); k++) {
            out += (k ? ", " : "") + j[k].dump();
        }
        out += "]";
    } else {
        out += j.dump();
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); k++) {
        if (text[k] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

}  // namespace

Protocol parse_protocol(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        // nlohmann reports the byte just past the offending token.
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string message = e.what();
        auto cut = message.find("syntax error");
        throw SyntaxError(line, column, cut == std::string::npos ? message : message.substr(cut));
    }
    only_fields(doc, "", {"name", "description", "resource", "alice", "bob", "input", "steps", "claim"});
    Protocol p;
    p.name = get_string(field(doc, "", "name"), "name");
    if (doc.contains("description")) {
        p.description = get_string(doc["description"], "description");
    }
    p.resource = get_resource(doc);

    const Json &input = field(doc, "", "input");
    only_fields(input, "input", {"family", "labels", "params"});
    try {
        p.input.family = parse_family(get_string(field(input, "input", "family"), "input.family"));
    } catch (const ConstraintError &e) {
        throw ProtocolError("input.family", e.what());
    }
    p.input.labels = get_labels(field(input, "input", "labels"), "input.labels");
    if (input.contains("params")) {
        p.input.params = ParamPoint{get_amplitudes(input["params"], "input.params")};
    }
    p.steps = get_steps(field(doc, "", "steps"), "steps");
    if (doc.contains("claim")) {
        p.claim = get_claim(doc["claim"], "claim");
    }
    validate(p);
    return p;
}

std::string serialize_protocol(const Protocol &p) {
    Json doc = Json::object();
    doc["name"] = p.name;
    if (!p.description.empty()) {
        doc["description"] = p.description;
    }
    doc["resource"] = resource_json(p.resource);
    doc["alice"] = p.resource.alice;
    doc["bob"] = p.resource.bob;
    Json input = Json::object();
    input["family"] = std::string(family_name(p.input.family));
    input["labels"] = p.input.labels;
    if (p.input.params) {
        input["params"] = amplitudes_json(p.input.params->values);
    }
    doc["input"] = std::move(input);
    doc["steps"] = steps_json(p.steps);
    if (p.claim) {
        doc["claim"] = claim_json(*p.claim);
    }
    std::string out;
    pretty(doc, 0, out);
    return out + "\n";
}

Protocol load_protocol_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ProtocolError("", "cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_protocol(buf.str());
}

}  // namespace teleport
