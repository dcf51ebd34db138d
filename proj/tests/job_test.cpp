// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cayley/job.hpp"

#include <sstream>
#include <string>

#include "gtest/gtest.h"

namespace cayley {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_text(const std::string& text) {
  std::ostringstream out, err;
  const int code = run(Json::parse(text), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseJobTest, GroupForms) {
  EXPECT_EQ(parse_job(Json::parse(R"j({"group": "cyclic(6)"})j")).group.family, "cyclic");
  EXPECT_EQ(parse_job(Json::parse(R"j({"group": {"family": "dihedral", "params": [4]}})j")).group.params,
            std::vector<int>{4});
  const auto prod = parse_job(Json::parse(R"j({"group": {"product": ["cyclic(2)", "cyclic(3)", "cyclic(5)"]}})j"));
  EXPECT_EQ(build_group(prod.group).n, 30u);
  EXPECT_EQ(parse_job(Json::parse(R"j({"group": {"generators": ["(1 2)"]}})j")).command, Command::kVerifyAll);
}

TEST(ParseJobTest, Errors) {
  for (const char* bad : {
           R"j([1, 2])j",
           R"j({"command": "spectrum"})j",
           R"j({"v": "v2", "group": "cyclic(3)"})j",
           R"j({"group": "cyclic(3)", "command": "eigen"})j",
           R"j({"group": "cyclic(3)", "tolerance": -1})j",
           R"j({"group": "cyclic(3)", "connection": "some"})j",
           R"j({"group": "cyclic(3)", "gamma": {"generators": ["x"]}})j",
           R"j({"group": "cyclic(3)", "cap": 0})j",
           R"j({"group": 5})j",
       })
    EXPECT_THROW(parse_job(Json::parse(bad)), InputError) << bad;
}

TEST(RunTest, InputErrorsExitTwo) {
  const auto partial = run_text(R"j({"group": {"generators": ["(1 2)", "(1 2 3)"]},
                                    "connection": {"elements": ["(1 2)"]}, "command": "spectrum"})j");
  EXPECT_EQ(partial.code, 2);
  EXPECT_TRUE(partial.out.empty());
  EXPECT_NE(partial.err.find("class 1"), std::string::npos);

  EXPECT_EQ(run_text(R"j({"group": "symmetric(5)", "cap": 50})j").code, 2);
  EXPECT_EQ(run_text(R"j({"group": "cyclic(5)", "gamma": {"generators": [5]}, "command": "check-theorem2",
                         "connection": "all-nonidentity"})j").code, 2);
  EXPECT_EQ(run_text(R"j({"jobs": 3})j").code, 2);
}

TEST(RunTest, CheckIntegralityCyclicFive) {
  const auto r = run_text(R"j({"group": "cyclic(5)", "connection": {"elements": [1, 4]}, "command": "check-integrality"})j");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["v"], "v1");
  EXPECT_EQ(j["command"], "check-integrality");
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["integral"], false);
  EXPECT_EQ(j["results"][0]["power_closed"], false);
  EXPECT_EQ(j["results"][0]["agree"], true);
}

TEST(RunTest, SpectrumWithOracle) {
  const auto r = run_text(R"j({"group": {"generators": ["(1 2)", "(1 2 3)"]}, "connection": {"classes": [1]},
                              "command": "spectrum", "oracle": "on"})j");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  const auto& res = j["results"][0];
  EXPECT_EQ(res["oracle"]["pass"], true);
  EXPECT_EQ(res["oracle"]["backend"], "exact");
  EXPECT_EQ(res["spectrum"].size(), 3u);
}

TEST(RunTest, SweepCoversEverySubsetOfNonIdentityClasses) {
  const auto r = run_text(R"j({"group": "cyclic(4)", "connection": "sweep", "command": "check-theorem1"})j");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 8u);
  EXPECT_EQ(j["all_agree"], true);
}

TEST(RunTest, FieldCheckGammaForms) {
  for (const char* gamma : {R"j("rational")j", R"j("splitting")j", R"j({"generators": [4]})j"}) {
    const auto r = run_text(std::string(R"j({"group": "cyclic(5)", "connection": "sweep", "command": "check-theorem2", "gamma": )j") +
                            gamma + "}");
    ASSERT_EQ(r.code, 0) << gamma << r.err;
    EXPECT_EQ(Json::parse(r.out)["all_agree"], true);
  }
}

TEST(RunTest, OtherCommands) {
  for (const char* cmd : {"classes", "character-table", "verify-all"}) {
    const auto r = run_text(std::string(R"j({"group": "alternating(4)", "command": ")j") + cmd + "\"}");
    EXPECT_EQ(r.code, 0) << cmd << r.err;
    EXPECT_NO_THROW(Json::parse(r.out));
  }
  const auto table = run_text(R"j({"group": "quaternion(8)", "command": "character-table", "output": "table"})j");
  EXPECT_EQ(table.code, 0);
  EXPECT_FALSE(table.out.empty());
  EXPECT_THROW(Json::parse(table.out), Json::exception);
}

TEST(RunTest, BatchAndDeterminism) {
  const std::string doc = R"j({"jobs": [{"group": "symmetric(4)", "command": "verify-all"},
                                       {"group": "dihedral(5)", "command": "spectrum", "connection": "all-nonidentity"}]})j";
  const auto first = run_text(doc);
  const auto second = run_text(doc);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  const Json j = Json::parse(first.out);
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][0]["passed"], true);
}

TEST(RunTest, OverrideHookAppliesToEveryJob) {
  std::ostringstream out, err;
  const int code = run(Json::parse(R"j({"group": "cyclic(3)", "command": "classes"})j"), out, err,
                       [](JobSpec& j) { j.command = Command::kCharacterTable; });
  EXPECT_EQ(code, 0);
  EXPECT_TRUE(Json::parse(out.str()).contains("character_table"));
}

}  // namespace
}  // namespace cayley
