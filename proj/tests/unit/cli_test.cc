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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

using ::testing::HasSubstr;
using teleport::cli::run;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string shipped(const std::string &name) {
    return std::string(TELEPORT_SOURCE_DIR) + "/protocols/" + name + ".json";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Cli, ListNamesEveryBuiltin) {
    const Result r = call({"list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_THAT(r.out, HasSubstr("w-variant-2q"));
    EXPECT_THAT(r.out, HasSubstr("bell-1q"));
}

TEST(Cli, MissingSubcommandIsAnInputError) {
    EXPECT_EQ(call({}).code, 1);
    EXPECT_EQ(call({"frobnicate"}).code, 1);
}

TEST(Cli, UnknownScenarioIsAnInputError) {
    const Result r = call({"run", "w-9q"});
    EXPECT_EQ(r.code, 1);
    EXPECT_THAT(r.err, HasSubstr("w-9q"));
}

TEST(Cli, BadFormatIsRejected) {
    EXPECT_EQ(call({"run", "bell-1q", "--format", "xml"}).code, 1);
}

TEST(Cli, RunPrintsTheBranchTable) {
    const Result r = call({"run", "w-2q"});
    EXPECT_EQ(r.code, 0);
    EXPECT_THAT(r.out, HasSubstr("(3)=1 (2)=0 (1)=1"));
    EXPECT_THAT(r.out, HasSubstr("Z⊗Z"));
}

TEST(Cli, RunAcceptsAProtocolFile) {
    const Result from_file = call({"run", shipped("p1-1q"), "--format", "json"});
    const Result builtin = call({"run", "p1-1q", "--format", "json"});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    const auto a = nlohmann::json::parse(from_file.out);
    const auto b = nlohmann::json::parse(builtin.out);
    EXPECT_EQ(a["leaves"], b["leaves"]);
    EXPECT_EQ(a["aggregate"], b["aggregate"]);
}

TEST(Cli, RunWithExplicitParams) {
    const Result r = call({"run", "bell-1q", "--params", "[[0.6,0],[0,0.8]]", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["params"].size(), 1u);
    EXPECT_EQ(j["aggregate"]["min"], 1.0);
}

TEST(Cli, OffSurfaceParamsAreRejected) {
    const Result r = call({"run", "bell-1q", "--params", "[[1,0],[1,0]]"});
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, MalformedProtocolFileReportsTheLine) {
    const auto path = std::filesystem::temp_directory_path() / "teleport_cli_bad.json";
    std::ofstream(path) << "{\n  \"name\": \"x\",\n  oops\n}\n";
    const Result r = call({"run", path.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_THAT(r.err, HasSubstr("line 3"));
    std::filesystem::remove(path);
}

TEST(Cli, VerifyStrictFailsOnMismatch) {
    const Result r = call({"verify", "w-1q", "--strict"});
    EXPECT_EQ(r.code, 3);
    EXPECT_THAT(r.err, HasSubstr("w-1q"));
    EXPECT_EQ(call({"verify", "bell-1q", "--strict"}).code, 0);
    EXPECT_EQ(call({"verify", "w-1q"}).code, 0);
}

TEST(Cli, VerifyJsonIsByteIdenticalAcrossRuns) {
    const Result a = call({"verify", "--all", "--seed", "77", "--format", "json"});
    const Result b = call({"verify", "--all", "--seed", "77", "--format", "json"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["seed"], 77);
    EXPECT_EQ(j["reports"].size(), 12u);
    EXPECT_NE(a.out, call({"verify", "--all", "--seed", "78", "--format", "json"}).out);
}

TEST(Cli, VerifyCsvHasOneRowPerStage) {
    const Result r = call({"verify", "w-2q", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, ExportMatchesTheShippedFile) {
    const Result r = call({"export", "p2-2q"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, read_file(shipped("p2-2q")));
}

TEST(Cli, OutWritesAFile) {
    const auto path = std::filesystem::temp_directory_path() / "teleport_cli_out.json";
    const Result r = call({"verify", "bell-1q", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(read_file(path.string())).contains("ledger"));
    std::filesystem::remove(path);
}

TEST(CliBinary, ExitCodesReachTheShell) {
    const std::string cli = TELEPORT_CLI_PATH;
    auto status = [&](const std::string &args) {
        const int raw = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("list"), 0);
    EXPECT_EQ(status("run nope"), 1);
    EXPECT_EQ(status("verify w-1q --strict"), 3);
}

}  // namespace
