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

#include "teleport/report.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace teleport {

using Json = nlohmann::ordered_json;

namespace {

Json aggregate_json(const Aggregate &a) {
    Json out = Json::object();
    out["per_param"] = a.per_point;
    out["mean"] = a.mean;
    out["min"] = a.min;
    out["max"] = a.max;
    return out;
}

Json claim_json(const ClaimCheck &c) {
    Json out = Json::object();
    if (c.claim) {
        out["value"] = c.claim->probability;
        out["citation"] = c.claim->citation;
    } else {
        out["value"] = nullptr;
        out["citation"] = "none stated";
    }
    return out;
}

Json discrepancy_json(const ClaimCheck &c) {
    Json out = Json::object();
    out["flag"] = c.claim.has_value() && !c.match;
    out["delta"] = c.claim ? Json(c.delta) : Json(nullptr);
    return out;
}

Json record_json(const OutcomeRecord &r) {
    Json out = Json::object();
    out["labels"] = r.labels;
    out["basis"] = r.basis;
    out["outcome"] = r.outcome;
    out["stage"] = r.regain ? "regain" : "main";
    if (r.leftover) {
        out["leftover"] = true;
    }
    return out;
}

Json leaf_json(const LeafVerdict &v) {
    Json out = Json::object();
    out["outcome"] = v.key;
    Json record = Json::array();
    for (const auto &r : v.record) {
        record.push_back(record_json(r));
    }
    out["record"] = std::move(record);
    out["status"] = std::string(status_name(v.status));
    out["receiver"] = v.receiver;
    out["probability"] = v.probability;
    out["success"] = v.success;
    out["correction"] = v.correction ? Json(v.correction->str()) : Json(nullptr);
    out["min_fidelity"] = v.min_fidelity ? Json(*v.min_fidelity) : Json(nullptr);
    out["state"] = v.state_text;
    out["cbits"] = v.cbits;
    return out;
}

Json params_json(const std::vector<ParamPoint> &points) {
    Json out = Json::array();
    for (const auto &p : points) {
        Json point = Json::array();
        for (const auto &v : p.values) {
            point.push_back(Json::array({v.real(), v.imag()}));
        }
        out.push_back(std::move(point));
    }
    return out;
}

Json report_object(const VerificationReport &r) {
    Json out = Json::object();
    out["scenario"] = r.scenario;
    out["description"] = r.description;
    out["family"] = std::string(family_name(r.family));
    out["receiver"] = r.receiver;
    out["seed"] = r.seed;
    out["params"] = params_json(r.points);
    Json leaves = Json::array();
    for (const auto &v : r.leaves) {
        leaves.push_back(leaf_json(v));
    }
    out["leaves"] = std::move(leaves);
    out["impossible"] = r.impossible;
    out["aggregate"] = aggregate_json(r.aggregate);
    out["claim"] = claim_json(r.claim);
    out["discrepancy"] = discrepancy_json(r.claim);
    if (r.regain) {
        const RegainReport &g = *r.regain;
        Json regain = Json::object();
        regain["target"] = g.target;
        regain["reached"] = aggregate_json(g.reached);
        regain["unconditional"] = aggregate_json(g.unconditional);
        regain["conditional"] = aggregate_json(g.conditional);
        regain["claim"] = claim_json(g.claim);
        regain["discrepancy"] = discrepancy_json(g.claim);
        regain["matched_reading"] = g.matched_reading;
        regain["cbits"] = g.cbits;
        out["regain"] = std::move(regain);
    } else {
        out["regain"] = nullptr;
    }
    Json cbits = Json::object();
    cbits["stated"] = r.cbits_stated;
    cbits["min"] = r.cbits_min;
    out["cbits"] = std::move(cbits);
    Json sets = Json::array();
    for (const auto &s : r.sets) {
        Json j = Json::object();
        j["what"] = s.claim.what;
        j["citation"] = s.claim.citation;
        j["expected"] = s.claim.expected;
        j["success"] = s.success;
        j["failure"] = s.failure;
        j["impossible"] = s.impossible;
        j["match"] = s.match;
        sets.push_back(std::move(j));
    }
    out["sets"] = std::move(sets);
    out["no_signaling"] = r.no_signaling;
    const Invariants &inv = r.invariants;
    Json invariants = Json::object();
    invariants["ok"] = inv.ok();
    invariants["max_probability_sum_error"] = inv.max_probability_sum_error;
    invariants["max_regain_sum_error"] = inv.max_regain_sum_error;
    invariants["max_norm_error"] = inv.max_norm_error;
    invariants["max_linearity_error"] = inv.max_linearity_error;
    invariants["max_no_signaling"] = inv.max_no_signaling;
    invariants["violations"] = inv.violations;
    out["invariants"] = std::move(invariants);
    return out;
}

Json ledger_row_json(const LedgerRow &row) {
    Json out = Json::object();
    out["scenario"] = row.scenario;
    out["stage"] = row.stage;
    out["claimed"] = row.claimed ? Json(*row.claimed) : Json(nullptr);
    out["computed"] = aggregate_json(row.computed);
    if (row.conditional) {
        out["conditional"] = aggregate_json(*row.conditional);
    }
    out["delta"] = row.claimed ? Json(row.delta) : Json(nullptr);
    out["match"] = row.match ? Json(*row.match) : Json(nullptr);
    if (!row.reading.empty()) {
        out["reading"] = row.reading;
    }
    out["citation"] = row.claimed ? row.citation : "none stated";
    return out;
}

std::string fixed(double x, int digits = 6) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

std::string short_number(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

std::string csv_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

// Column width in code points, good enough for the symbols we print.
std::size_t display_width(const std::string &s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        w += (c & 0xC0) != 0x80;
    }
    return w;
}

std::string render_table(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()));
        for (std::size_t c = 0; c < row.size(); c++) {
            widths[c] = std::max(widths[c], display_width(row[c]));
        }
    }
    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); r++) {
        std::string line;
        for (std::size_t c = 0; c < rows[r].size(); c++) {
            line += rows[r][c];
            if (c + 1 < rows[r].size()) {
                line += std::string(widths[c] - display_width(rows[r][c]) + 2, ' ');
            }
        }
        out << line << "\n";
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t w : widths) {
                total += w + 2;
            }
            out << std::string(total - 2, '-') << "\n";
        }
    }
    return out.str();
}

std::string range(const Aggregate &a) {
    if (a.max - a.min < 1e-12) {
        return fixed(a.mean);
    }
    return fixed(a.mean) + " [" + fixed(a.min) + ", " + fixed(a.max) + "]";
}

std::string verdict(const LeafVerdict &v) {
    if (v.status == LeafStatus::kAborted) {
        return v.has_regain ? "abort, recover" : "abort";
    }
    return v.success ? "success" : "fail";
}

}  // namespace

std::string report_json(const VerificationReport &r) {
    return report_object(r).dump(2) + "\n";
}

std::string report_csv(const VerificationReport &r) {
    std::ostringstream out;
    out << "scenario,outcome,status,probability_mean,probability_min,probability_max,success,correction,min_fidelity,"
           "state\n";
    for (const auto &v : r.leaves) {
        Aggregate p = summarize(v.probability);
        out << csv_quote(r.scenario) << ',' << csv_quote(v.key) << ',' << status_name(v.status) << ','
            << fixed(p.mean, 12) << ',' << fixed(p.min, 12) << ',' << fixed(p.max, 12) << ','
            << (v.success ? "true" : "false") << ',' << csv_quote(v.correction ? v.correction->str() : "") << ','
            << (v.min_fidelity ? fixed(*v.min_fidelity, 12) : "") << ',' << csv_quote(v.state_text) << '\n';
    }
    return out.str();
}

std::string report_table(const VerificationReport &r) {
    std::ostringstream out;
    out << r.scenario << ": " << r.description << "\n";
    out << "input " << family_name(r.family) << ", receiver (";
    for (std::size_t k = 0; k < r.receiver.size(); k++) {
        out << (k ? "," : "") << r.receiver[k];
    }
    out << "), " << r.points.size() << " parameter points, seed " << r.seed << "\n\n";

    std::vector<std::vector<std::string>> rows{{"outcome", "probability", "qubits", "state", "correction", "verdict"}};
    for (const auto &v : r.leaves) {
        std::string qubits;
        for (Label l : v.receiver) {
            qubits += (qubits.empty() ? "" : ",") + std::to_string(l);
        }
        rows.push_back({v.key, range(summarize(v.probability)), qubits, v.state_text,
                        v.correction ? v.correction->str() : "-", verdict(v)});
    }
    out << render_table(rows);
    if (!r.impossible.empty()) {
        out << "zero-probability outcomes:";
        for (const auto &k : r.impossible) {
            out << "  " << k;
        }
        out << "\n";
    }
    out << "\nsuccess probability  " << range(r.aggregate) << "\n";
    if (r.claim.claim) {
        out << "claimed              " << fixed(r.claim.claim->probability) << "  (" << r.claim.claim->citation
            << ")  delta " << short_number(r.claim.delta) << "  " << (r.claim.match ? "MATCH" : "MISMATCH") << "\n";
    } else {
        out << "claimed              none stated\n";
    }
    out << "classical bits       " << r.cbits_stated << " sent, " << r.cbits_min << " needed for corrections\n";
    if (r.regain) {
        const RegainReport &g = *r.regain;
        out << "recovery             unconditional " << range(g.unconditional) << ", conditional "
            << range(g.conditional) << ", " << g.cbits << " cbit(s)\n";
        if (g.claim.claim) {
            out << "recovery claimed     " << fixed(g.claim.claim->probability) << "  (" << g.claim.claim->citation
                << ")  " << (g.claim.match ? "MATCH (" + g.matched_reading + ")" : "MISMATCH (both readings)")
                << "\n";
        }
    }
    for (const auto &s : r.sets) {
        out << "outcome set          " << s.claim.what << ": " << (s.match ? "MATCH" : "MISMATCH") << "\n";
        auto list = [&](const char *title, const std::vector<std::string> &items) {
            out << "  " << title;
            for (const auto &i : items) {
                out << ' ' << i;
            }
            out << "\n";
        };
        list("expected  ", s.claim.expected);
        list("success   ", s.success);
        list("failure   ", s.failure);
        if (!s.impossible.empty()) {
            list("impossible", s.impossible);
        }
    }
    const Invariants &inv = r.invariants;
    out << "invariants           " << (inv.ok() ? "ok" : "VIOLATED") << " (probability sum "
        << short_number(inv.max_probability_sum_error) << ", no-signaling " << short_number(inv.max_no_signaling)
        << ", linearity " << short_number(inv.max_linearity_error) << ")\n";
    for (const auto &v : inv.violations) {
        out << "  " << v << "\n";
    }
    return out.str();
}

std::string ledger_json(std::span<const VerificationReport> reports, std::uint64_t seed, std::size_t samples) {
    Json out = Json::object();
    out["seed"] = seed;
    out["samples"] = samples;
    Json rows = Json::array();
    for (const auto &row : ledger(reports)) {
        rows.push_back(ledger_row_json(row));
    }
    out["ledger"] = std::move(rows);
    Json all = Json::array();
    for (const auto &r : reports) {
        all.push_back(report_object(r));
    }
    out["reports"] = std::move(all);
    return out.dump(2) + "\n";
}

std::string ledger_csv(std::span<const VerificationReport> reports) {
    std::ostringstream out;
    out << "scenario,stage,claimed,computed_mean,computed_min,computed_max,conditional_mean,delta,match,reading,"
           "citation\n";
    for (const auto &row : ledger(reports)) {
        out << csv_quote(row.scenario) << ',' << row.stage << ',' << (row.claimed ? fixed(*row.claimed, 12) : "")
            << ',' << fixed(row.computed.mean, 12) << ',' << fixed(row.computed.min, 12) << ','
            << fixed(row.computed.max, 12) << ',' << (row.conditional ? fixed(row.conditional->mean, 12) : "") << ','
            << (row.claimed ? fixed(row.delta, 12) : "") << ','
            << (row.match ? (*row.match ? "true" : "false") : "") << ',' << row.reading << ','
            << csv_quote(row.claimed ? row.citation : "none stated") << '\n';
    }
    return out.str();
}

std::string ledger_table(std::span<const VerificationReport> reports) {
    std::vector<std::vector<std::string>> rows{
        {"scenario", "stage", "claimed", "computed", "conditional", "delta", "match", "citation"}};
    for (const auto &row : ledger(reports)) {
        std::string match = row.match ? (*row.match ? "yes" : "NO") : "-";
        if (row.match && *row.match && !row.reading.empty()) {
            match += " (" + row.reading + ")";
        }
        rows.push_back({row.scenario, row.stage, row.claimed ? fixed(*row.claimed) : "-", range(row.computed),
                        row.conditional ? range(*row.conditional) : "-", row.claimed ? short_number(row.delta) : "-",
                        match, row.claimed ? row.citation : "none stated"});
    }
    std::string out = render_table(rows);
    bool ok = true;
    for (const auto &r : reports) {
        for (const auto &v : r.invariants.violations) {
            ok = false;
            out += "invariant violated in " + r.scenario + ": " + v + "\n";
        }
    }
    if (ok) {
        out += "all invariants hold\n";
    }
    return out;
}

}  // namespace teleport
