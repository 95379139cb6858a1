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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "teleport/protocol_io.h"
#include "teleport/report.h"
#include "teleport/scenarios.h"

namespace teleport::cli {

namespace {

struct Options {
    std::string target;
    std::vector<std::string> names;
    std::string params;
    std::size_t samples = 5;
    std::uint64_t seed = 2024;
    std::string format = "table";
    std::string out;
    bool all = false;
    bool strict = false;
    double tolerance = kClaimTolerance;
};

// A builtin name or a protocol file.
ScenarioDef resolve(const std::string &target) {
    if (is_builtin(target)) {
        return builtin(target);
    }
    if (std::filesystem::exists(target)) {
        return ScenarioDef{load_protocol_file(target), {}};
    }
    throw ScenarioError("'" + target + "' is neither a builtin scenario nor a readable file");
}

ParamPoint parse_params(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConstraintError(std::string("--params is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw ConstraintError("--params must be a JSON array");
    }
    ParamPoint p;
    for (const auto &v : j) {
        if (v.is_number()) {
            p.values.emplace_back(v.get<double>(), 0.0);
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            p.values.emplace_back(v[0].get<double>(), v[1].get<double>());
        } else {
            throw ConstraintError("--params entries must be numbers or [re, im] pairs");
        }
    }
    return p;
}

void emit(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw ScenarioError("cannot write '" + o.out + "'");
    }
    file << text;
}

int cmd_list(std::ostream &out) {
    for (const auto &name : builtin_names()) {
        const Protocol p = builtin(name).protocol;
        out << name << "  " << p.description;
        if (p.claim) {
            out << "  [claim " << p.claim->probability << ": " << p.claim->citation << "]";
        }
        if (const auto *regain = [&]() -> const Regain * {
                for (const auto &s : p.steps) {
                    if (const auto *a = std::get_if<AbortOnOp>(&s.op); a && a->regain) {
                        return &*a->regain;
                    }
                }
                return nullptr;
            }();
            regain && regain->claim) {
            out << "  [recovery claim " << regain->claim->probability << ": " << regain->claim->citation << "]";
        }
        out << "\n";
    }
    return kOk;
}

int cmd_run(const Options &o, std::ostream &out, std::ostream &err) {
    ScenarioDef def = resolve(o.target);
    VerifyOptions vo;
    vo.samples = o.samples;
    vo.seed = o.seed;
    vo.claim_tolerance = o.tolerance;
    if (!o.params.empty()) {
        ParamPoint point = parse_params(o.params);
        check_constraint(def.protocol.input.family, point);
        vo.points = std::vector<ParamPoint>{point};
    }
    VerificationReport r = verify_builtin(def, vo);
    if (o.format == "json") {
        emit(o, report_json(r), out);
    } else if (o.format == "csv") {
        emit(o, report_csv(r), out);
    } else {
        emit(o, report_table(r), out);
    }
    if (!r.invariants.ok()) {
        for (const auto &v : r.invariants.violations) {
            err << "invariant violated: " << v << "\n";
        }
        return kInvariantViolation;
    }
    return kOk;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err) {
    std::vector<std::string> targets = o.names;
    if (o.all || targets.empty()) {
        targets = builtin_names();
    }
    std::vector<VerificationReport> reports;
    for (const auto &t : targets) {
        VerifyOptions vo;
        vo.samples = o.samples;
        vo.seed = o.seed;
        vo.claim_tolerance = o.tolerance;
        reports.push_back(verify_builtin(resolve(t), vo));
    }
    if (o.format == "json") {
        emit(o, ledger_json(reports, o.seed, o.samples), out);
    } else if (o.format == "csv") {
        emit(o, ledger_csv(reports), out);
    } else {
        emit(o, ledger_table(reports), out);
    }
    bool violated = false;
    for (const auto &r : reports) {
        for (const auto &v : r.invariants.violations) {
            err << r.scenario << ": invariant violated: " << v << "\n";
            violated = true;
        }
    }
    if (violated) {
        return kInvariantViolation;
    }
    if (o.strict) {
        for (const auto &row : ledger(reports)) {
            if (row.match && !*row.match) {
                err << row.scenario << " (" << row.stage << "): claim mismatch, delta " << row.delta << "\n";
                violated = true;
            }
        }
        if (violated) {
            return kClaimMismatch;
        }
    }
    return kOk;
}

int cmd_export(const Options &o, std::ostream &out) {
    emit(o, serialize_protocol(resolve(o.target).protocol), out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Pure-state simulator and verifier for probabilistic teleportation protocols", "teleport"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"table", "json", "csv"};

    app.add_subcommand("list", "List the builtin scenarios");

    CLI::App *run_cmd = app.add_subcommand("run", "Execute one scenario and report every branch");
    run_cmd->add_option("target", o.target, "Builtin name or protocol file")->required();
    run_cmd->add_option("--params", o.params, "Explicit parameter point, e.g. '[[0.6,0],[0.8,0]]'");

    CLI::App *verify_cmd = app.add_subcommand("verify", "Audit claims and print the discrepancy ledger");
    verify_cmd->add_option("names", o.names, "Builtin names or protocol files");
    verify_cmd->add_flag("--all", o.all, "Verify every builtin (default when no name is given)");
    verify_cmd->add_flag("--strict", o.strict, "Exit 3 when a claim mismatches");

    for (CLI::App *cmd : {run_cmd, verify_cmd}) {
        cmd->add_option("--samples", o.samples, "Random points added to the fixed ones")->capture_default_str();
        cmd->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
        cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
        cmd->add_option("--out", o.out, "Write the report to a file");
        cmd->add_option("--tolerance", o.tolerance, "Claim match tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }

    CLI::App *export_cmd = app.add_subcommand("export", "Print a builtin as a protocol document");
    export_cmd->add_option("target", o.target, "Builtin name or protocol file")->required();
    export_cmd->add_option("--out", o.out, "Write to a file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (app.got_subcommand("list")) {
            return cmd_list(out);
        }
        if (app.got_subcommand(run_cmd)) {
            return cmd_run(o, out, err);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(o, out, err);
        }
        return cmd_export(o, out);
    } catch (const SyntaxError &e) {
        err << "syntax error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvariantError &e) {
        err << "invariant violated: " << e.what() << "\n";
        return kInvariantViolation;
    }
}

}  // namespace teleport::cli
