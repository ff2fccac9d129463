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

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "chromacount/color_count.hpp"
#include "chromacount/dp_color.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_search.hpp"
#include "oracles.hpp"

namespace chromacount {
namespace {

WideCount w(std::uint64_t v) { return WideCount(v); }

Cover random_cover(const Graph& g, int m, std::mt19937_64& rng) {
  Cover c = identity_cover(g, m);
  for (auto& p : c.perms) std::shuffle(p.begin(), p.end(), rng);
  return c;
}

TEST(DpCount, IdentityCoverIsChromaticPolynomial) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_connected_graph(1 + static_cast<int>(rng() % 7), 50, rng);
    for (int m = 1; m <= 4; ++m) {
      EXPECT_EQ(count_dp_colorings(g, identity_cover(g, m)), count_proper_colorings(g, m)) << to_graph6(g);
    }
  }
}

TEST(DpCount, MatchesBruteForceTransversals) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 150; ++i) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 5), 50, rng);
    const int m = 1 + static_cast<int>(rng() % 3);
    const Cover c = random_cover(g, m, rng);
    const long long expected = oracle::transversals(g, c);
    EXPECT_EQ(count_dp_colorings(g, c), w(expected)) << to_graph6(g);
    const CappedDpCount capped = count_dp_colorings(g, c, w(3));
    EXPECT_EQ(capped.reached_cap, expected >= 3);
  }
}

TEST(DpCount, PartialCoversFromLists) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = random_connected_graph(n, 50, rng);
    const ListAssignment l = random_m_assignment(n, 2 + static_cast<int>(rng() % 2), 5, rng);
    const Cover c = cover_from_list_assignment(g, l);
    c.validate(g);
    EXPECT_EQ(count_dp_colorings(g, c), count_list_colorings(g, l));
    EXPECT_EQ(oracle::transversals(g, c), oracle::list_colorings(g, l));
    const Cover full = complete_cover(c);
    EXPECT_TRUE(full.is_full());
    EXPECT_LE(count_dp_colorings(g, full), count_dp_colorings(g, c));
  }
}

TEST(DpCount, ValidateRejectsBadCovers) {
  const Graph g = build_graph("cycle:4");
  Cover c = identity_cover(g, 3);
  c.perms[0] = {0, 0, 1};
  EXPECT_THROW(c.validate(g), InvalidArgument);
  c = identity_cover(g, 3);
  c.edges.pop_back();
  EXPECT_THROW(c.validate(g), InvalidArgument);
  EXPECT_THROW(identity_cover(g, 65), InvalidArgument);
}

TEST(DpColorFunction, MatchesBruteForceMinimum) {
  struct Case {
    const char* spec;
    int m;
  };
  for (const Case c : {Case{"cycle:4", 2}, Case{"cycle:4", 3}, Case{"cycle:5", 3}, Case{"complete:3", 3},
                       Case{"complete:4", 3}, Case{"path:4", 2}, Case{"bipartite:2,3", 2},
                       Case{"theta:2,2,2", 3}}) {
    const Graph g = build_graph(c.spec);
    const DpReport r = dp_color_function(g, c.m);
    EXPECT_TRUE(r.exact());
    EXPECT_EQ(r.hi, w(oracle::min_transversals(g, c.m))) << c.spec << " m=" << c.m;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(count_dp_colorings(g, *r.witness), r.hi);
  }
}

TEST(DpColorFunction, ThetaFormula) {
  const DpReport r = dp_color_function(build_graph("theta:2,2,4"), 3);
  EXPECT_EQ(r.hi, w(78));
  EXPECT_EQ(r.space, w(36));
  EXPECT_EQ(theta_dp_formula(2, 3), w(78));
  EXPECT_EQ(dp_color_function(build_graph("theta:2,2,6"), 3).hi, theta_dp_formula(3, 3));
  EXPECT_EQ(dp_color_function(build_graph("theta:2,2,4"), 4).hi, theta_dp_formula(2, 4));
  EXPECT_EQ(theta_dp_formula(3, 3), w(318));
  EXPECT_THROW(theta_dp_formula(1, 3), InvalidArgument);
}

TEST(DpColorFunction, SandwichOnRandomGraphs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 4), 50, rng);
    const WideCount dp = dp_color_function(g, 2).hi;
    const WideCount l = list_color_function(g, 2, ExactMode{}).hi;
    EXPECT_LE(dp, l) << to_graph6(g);
    EXPECT_LE(l, count_proper_colorings(g, 2)) << to_graph6(g);
  }
}

TEST(DpColorFunction, TreesNeedNoSearch) {
  const DpReport r = dp_color_function(build_graph("path:6"), 5);
  EXPECT_EQ(r.hi, count_proper_colorings(build_graph("path:6"), 5));
  EXPECT_EQ(r.space, w(1));
}

TEST(DpColorFunction, ThreadsAndBudget) {
  const Graph g = build_graph("theta:2,2,4");
  EXPECT_EQ(dp_color_function(g, 3, DpOptions{kDefaultExactBudget, 3}).hi, w(78));
  const DpReport cut = dp_color_function(g, 3, DpOptions{5, 1});
  EXPECT_EQ(cut.status, SearchStatus::BudgetExhausted);
  EXPECT_GE(cut.hi, w(78));
}

}  // namespace
}  // namespace chromacount
