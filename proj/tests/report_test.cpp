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

#include <gtest/gtest.h>
#include <json.hpp>

#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/list_search.hpp"
#include "chromacount/report.hpp"
#include "chromacount/reproduce.hpp"
#include "chromacount/witness.hpp"

namespace chromacount {
namespace {

TEST(Report, SearchReportSchema) {
  const SearchReport r = list_color_function(build_graph("theta:2,2,4"), 2, ExactMode{});
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["value"], "1");
  EXPECT_EQ(j["status"], "exact");
  EXPECT_FALSE(j["stats"].contains("wall_seconds"));
  EXPECT_TRUE(to_json(r, true)["stats"].contains("wall_seconds"));
  const ListAssignment back = ListAssignment::parse(j["witness"]["text"].get<std::string>());
  EXPECT_EQ(back, *r.witness);
}

TEST(Report, WideCountsAreStrings) {
  EXPECT_EQ(to_json(pow(WideCount(10), 30)), "1000000000000000000000000000000");
  EXPECT_EQ(interval_text(WideCount(0), WideCount(4)), "[0, 4]");
  EXPECT_EQ(interval_text(WideCount(4), WideCount(4)), "4");
}

TEST(Reproduce, SingleAnchor) {
  ReproduceOptions o;
  o.only = {"Fig1"};
  const auto rows = reproduce_paper(o);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].anchor, "Fig1");
  EXPECT_TRUE(rows[0].pass);
  EXPECT_EQ(rows[0].data["count"], "1");
  const nlohmann::json doc = reproduce_json(rows, o, false);
  EXPECT_EQ(doc["summary"]["failed"], 0);
  EXPECT_EQ(doc["rows"].size(), 1u);
  EXPECT_EQ(reproduce_json(rows, o, false).dump(), doc.dump());
  EXPECT_NE(reproduce_table(rows, false).find("Fig1"), std::string::npos);
}

TEST(Reproduce, UnknownAnchor) {
  ReproduceOptions o;
  o.only = {"Nope"};
  EXPECT_THROW(reproduce_paper(o), InvalidArgument);
}

TEST(Reproduce, AnchorsAreListed) {
  const auto& a = reproduce_anchors();
  EXPECT_EQ(a.front(), "Fig1");
  EXPECT_NE(std::find(a.begin(), a.end(), "T1.7@n<=7"), a.end());
}

}  // namespace
}  // namespace chromacount
