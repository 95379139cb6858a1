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

#include <gtest/gtest.h>

#include "json.hpp"
#include <sstream>

#include "teleport/scenarios.h"

namespace teleport {
namespace {

using Json = nlohmann::json;

const VerificationReport &w2q() {
    static const VerificationReport r = verify_builtin(builtin("w-2q"));
    return r;
}

const VerificationReport &p22q() {
    static const VerificationReport r = verify_builtin(builtin("p2-2q"));
    return r;
}

TEST(ReportJson, HasTheDocumentedKeys) {
    const Json j = Json::parse(report_json(w2q()));
    for (const char *key : {"scenario", "params", "leaves", "aggregate", "claim", "discrepancy", "cbits", "regain",
                            "sets", "no_signaling", "invariants"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["scenario"], "w-2q");
    EXPECT_EQ(j["params"].size(), w2q().points.size());
    EXPECT_EQ(j["params"][0].size(), 2u);
    EXPECT_EQ(j["params"][0][0].size(), 2u);
    for (const char *key : {"per_param", "mean", "min", "max"}) {
        EXPECT_TRUE(j["aggregate"].contains(key)) << key;
    }
    EXPECT_EQ(j["claim"]["value"], 0.25);
    EXPECT_TRUE(j["discrepancy"]["flag"].get<bool>());
    EXPECT_EQ(j["cbits"]["stated"], 2);
    EXPECT_TRUE(j["invariants"]["ok"].get<bool>());
}

TEST(ReportJson, LeavesCarryVerdicts) {
    const Json j = Json::parse(report_json(w2q()));
    bool found = false;
    for (const auto &leaf : j["leaves"]) {
        if (leaf["outcome"] == "(3)=1 (2)=0 (1)=1") {
            found = true;
            EXPECT_TRUE(leaf["success"].get<bool>());
            EXPECT_EQ(leaf["correction"], "Z⊗Z");
            EXPECT_EQ(leaf["probability"].size(), w2q().points.size());
            EXPECT_EQ(leaf["status"], "completed");
        }
    }
    EXPECT_TRUE(found);
}

TEST(ReportJson, UnclaimedScenarioSaysSo) {
    const Json j = Json::parse(report_json(p22q()));
    EXPECT_TRUE(j["claim"]["value"].is_null());
    EXPECT_EQ(j["claim"]["citation"], "none stated");
    EXPECT_FALSE(j["discrepancy"]["flag"].get<bool>());
}

TEST(ReportJson, IsDeterministic) {
    EXPECT_EQ(report_json(w2q()), report_json(verify_builtin(builtin("w-2q"))));
}

TEST(ReportCsv, OneRowPerLeaf) {
    const std::string csv = report_csv(w2q());
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("scenario,outcome,status,", 0), 0u);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, w2q().leaves.size());
}

TEST(ReportTable, ShowsStatesAndCorrections) {
    const std::string table = report_table(p22q());
    EXPECT_NE(table.find("(4)=0 (3)=0 (1,2)=--"), std::string::npos);
    EXPECT_NE(table.find("α|00⟩ - γ|01⟩ - γ|10⟩ + α|11⟩"), std::string::npos);
    EXPECT_NE(table.find("-Y⊗Y"), std::string::npos);
    EXPECT_NE(table.find("zero-probability outcomes"), std::string::npos);
}

TEST(Ledger, JsonCsvAndTable) {
    const std::vector<VerificationReport> reports{w2q(), p22q()};
    const Json j = Json::parse(ledger_json(reports, 2024, 5));
    EXPECT_EQ(j["seed"], 2024);
    EXPECT_EQ(j["samples"], 5);
    EXPECT_EQ(j["ledger"].size(), 3u);
    EXPECT_EQ(j["reports"].size(), 2u);
    EXPECT_EQ(j["ledger"][0]["scenario"], "p2-2q");

    const std::string csv = ledger_csv(reports);
    EXPECT_EQ(csv.rfind("scenario,stage,claimed,", 0), 0u);

    const std::string table = ledger_table(reports);
    EXPECT_NE(table.find("w-2q      regain"), std::string::npos);
    EXPECT_NE(table.find("all invariants hold"), std::string::npos);
}

}  // namespace
}  // namespace teleport
