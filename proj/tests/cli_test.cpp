// Copyright 2026 The chromacount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "chromacount/list_assignment.hpp"
#include "cli.hpp"

namespace chromacount::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chromacount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, Chrompoly) {
  const Result r = run_cli({"chrompoly", "theta:2,2,4", "--m", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("P(G,3) = 102"), std::string::npos);
  const auto j = json_of(run_cli({"chrompoly", "cycle:5", "--m", "3", "--format", "json"}));
  EXPECT_EQ(j["value"], "30");
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, ListcfWithWitness) {
  const Result r = run_cli({"listcf", "theta:2,2,4", "--m", "2", "--exact", "--witness"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("P_l(G,2) = 1 (exact)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("v6: {"), std::string::npos);
  const auto j = json_of(run_cli({"listcf", "theta:2,2,4", "--m", "2", "--witness", "--format", "json"}));
  EXPECT_EQ(j["P_l"]["value"], "1");
  EXPECT_TRUE(ListAssignment::parse(j["P_l"]["witness"]["text"].get<std::string>()).is_m_assignment(2));
  EXPECT_FALSE(j["P_l"]["stats"].contains("wall_seconds"));
}

TEST(Cli, ListcfBudgetIsNotAnError) {
  const Result r = run_cli({"listcf", "bipartite:2,3", "--m", "3", "--budget", "5", "--format", "json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(json_of(r)["P_l"]["status"], "budget_exhausted");
  const auto h = json_of(run_cli({"listcf", "theta:2,2,4", "--m", "3", "--heuristic", "--budget", "200",
                                  "--seed", "3", "--format", "json"}));
  EXPECT_EQ(h["P_l"]["status"], "upper_bound_only");
}

TEST(Cli, Dpcf) {
  const Result r = run_cli({"dpcf", "theta:2,2,4", "--m", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("P_DP(G,3) = 78"), std::string::npos) << r.out;
}

TEST(Cli, NuTauAndEcc) {
  const auto j = json_of(run_cli({"nu-tau", "cycle:4", "--format", "json"}));
  EXPECT_EQ(j["result"]["nu"]["hi"], 2);
  const auto e = json_of(run_cli({"check-ecc", "theta:2,2,4", "--budget", "20000", "--heuristic-budget", "500", "--format", "json"}));
  EXPECT_EQ(e["weakly_ecc"]["value"], "false");
}

TEST(Cli, Classify) {
  const char* dir = std::getenv("CHROMACOUNT_TEST_DATA");
  ASSERT_NE(dir, nullptr);
  const Result r = run_cli({"classify", "--in", std::string(dir) + "/connected_bipartite_le7.g6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 72);
  EXPECT_NE(r.out.find("NotECC"), std::string::npos);
}

TEST(Cli, Witness) {
  const Result t = run_cli({"witness", "theta", "--k", "3"});
  EXPECT_EQ(t.code, kOk);
  EXPECT_NE(t.out.find("1 proper coloring\n"), std::string::npos) << t.out;
  const auto j = json_of(run_cli({"witness", "k224", "--format", "json"}));
  EXPECT_EQ(j["count"], "4");
}

TEST(Cli, Validate) {
  const Result r = run_cli({"validate", "--lemma", "L3.5", "--trials", "20", "--seed", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("L3.5: 20/20"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli({"validate", "--lemma", "Z1"}).code, kUsage);
}

TEST(Cli, ReproduceSingleRow) {
  const Result r = run_cli({"reproduce-paper", "--only", "Fig1", "--format", "json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["rows"].size(), 1u);
  EXPECT_EQ(j["rows"][0]["anchor"], "Fig1");
  EXPECT_EQ(run_cli({"reproduce-paper", "--only", "Fig1", "--format", "json"}).out, r.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"listcf", "theta:2,2,4"}).code, kUsage);
  EXPECT_EQ(run_cli({"listcf", "theta:2,2,4", "--m", "2", "--exact", "--heuristic"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST(Cli, ParseErrorsShowPosition) {
  const Result r = run_cli({"chrompoly", "theta:2,x", "--m", "2"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("at byte"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("^"), std::string::npos);
}

}  // namespace
}  // namespace chromacount::cli
