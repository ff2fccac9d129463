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

#include <random>

#include <gtest/gtest.h>

#include "chromacount/color_count.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_search.hpp"
#include "chromacount/structure.hpp"
#include "oracles.hpp"

namespace chromacount {
namespace {

WideCount w(std::uint64_t v) { return WideCount(v); }

SearchReport exact(const Graph& g, int m, Enumeration e = Enumeration::ConnectedClasses, int threads = 1) {
  return list_color_function(g, m, ExactMode{kDefaultExactBudget, threads, e});
}

void expect_witness(const Graph& g, int m, const SearchReport& r) {
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->is_m_assignment(m));
  EXPECT_EQ(count_list_colorings(g, *r.witness), r.hi);
}

TEST(ListColorFunction, MatchesBruteForceMinimum) {
  struct Case {
    const char* spec;
    int m;
    int pool;
  };
  for (const Case c : {Case{"path:3", 2, 6}, Case{"cycle:4", 2, 8}, Case{"complete:3", 3, 9},
                       Case{"path:3", 3, 9}, Case{"bipartite:1,3", 2, 8}}) {
    const Graph g = build_graph(c.spec);
    const long long expected = oracle::min_list_colorings(g, c.m, c.pool);
    for (auto e : {Enumeration::ConnectedClasses, Enumeration::RestrictedGrowth}) {
      const SearchReport r = exact(g, c.m, e);
      EXPECT_TRUE(r.exact());
      EXPECT_EQ(r.lo, r.hi);
      EXPECT_EQ(r.hi, w(expected)) << c.spec << " m=" << c.m;
      expect_witness(g, c.m, r);
    }
  }
}

TEST(ListColorFunction, EnumeratorsAgreeOnRandomGraphs) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 4), 50, rng);
    const SearchReport a = exact(g, 2, Enumeration::ConnectedClasses);
    const SearchReport b = exact(g, 2, Enumeration::RestrictedGrowth);
    EXPECT_EQ(a.hi, b.hi) << to_graph6(g);
    EXPECT_LE(a.hi, count_proper_colorings(g, 2));
  }
}

TEST(ListColorFunction, ThetaHasAGap) {
  const Graph g = build_graph("theta:2,2,4");
  const SearchReport r = exact(g, 2);
  EXPECT_EQ(r.hi, w(1));
  EXPECT_EQ(count_proper_colorings(g, 2), w(2));
  expect_witness(g, 2, r);
}

TEST(ListColorFunction, ThreadsDoNotChangeValues) {
  for (const char* spec : {"theta:2,2,4", "bipartite:2,3", "cycle:6"}) {
    const Graph g = build_graph(spec);
    const SearchReport one = exact(g, 2);
    for (int t : {2, 4}) {
      const SearchReport many = exact(g, 2, Enumeration::ConnectedClasses, t);
      EXPECT_EQ(many.hi, one.hi) << spec;
      EXPECT_EQ(many.status, SearchStatus::Exact);
      expect_witness(g, 2, many);
    }
  }
  const Graph k23 = build_graph("bipartite:2,3");
  EXPECT_EQ(exact(k23, 3, Enumeration::RestrictedGrowth, 3).hi, exact(k23, 3).hi);
}

TEST(ListColorFunction, BudgetExhaustionGivesInterval) {
  const Graph g = build_graph("bipartite:2,3");
  const SearchReport r = list_color_function(g, 3, ExactMode{10, 1, Enumeration::ConnectedClasses});
  EXPECT_EQ(r.status, SearchStatus::BudgetExhausted);
  EXPECT_EQ(r.lo, w(0));
  EXPECT_GE(r.hi, exact(g, 3).hi);
  EXPECT_LE(r.stats.assignments_visited, 10u);
}

TEST(ListColorFunction, HeuristicIsAnUpperBound) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 15; ++i) {
    const Graph g = random_connected_graph(3 + static_cast<int>(rng() % 3), 50, rng);
    const SearchReport h = list_color_function(g, 2, HeuristicMode{500, i + 1ull});
    EXPECT_EQ(h.status, SearchStatus::UpperBoundOnly);
    EXPECT_GE(h.hi, exact(g, 2).hi);
    expect_witness(g, 2, h);
  }
  const Graph theta = build_graph("pendant:1+theta:2,2,6");
  EXPECT_EQ(list_color_function(theta, 2, HeuristicMode{10, 1}).hi, w(1));
}

TEST(ListColorFunction, HeuristicIsDeterministic) {
  const Graph g = build_graph("theta:2,2,4");
  const SearchReport a = list_color_function(g, 3, HeuristicMode{2000, 5});
  const SearchReport b = list_color_function(g, 3, HeuristicMode{2000, 5});
  EXPECT_EQ(a.hi, b.hi);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(Choosability, ClassicalResults) {
  EXPECT_TRUE(is_m_choosable(build_graph("cycle:4"), 2));
  EXPECT_TRUE(is_m_choosable(build_graph("bipartite:2,3"), 2));
  EXPECT_TRUE(is_m_choosable(build_graph("theta:2,2,4"), 2));
  EXPECT_FALSE(is_m_choosable(build_graph("cycle:5"), 2));
  EXPECT_TRUE(is_m_choosable(build_graph("cycle:5"), 3));
  EXPECT_FALSE(is_m_choosable(build_graph("complete:4"), 3));

  const ChoosabilityResult k24 = choosability(build_graph("bipartite:2,4"), 2);
  EXPECT_FALSE(k24.choosable);
  ASSERT_TRUE(k24.witness.has_value());
  EXPECT_EQ(count_list_colorings(build_graph("bipartite:2,4"), *k24.witness), w(0));

  EXPECT_TRUE(choosability(build_graph("path:5"), 2).decided_by_bound);
  EXPECT_EQ(list_chromatic_number(build_graph("theta:2,2,6")), 2);
  EXPECT_EQ(list_chromatic_number(build_graph("bipartite:3,3")), 3);
  EXPECT_EQ(list_chromatic_number(Graph(3)), 1);
}

TEST(NuTau, SmallGraphs) {
  const NuTauReport c4 = nu_tau(build_graph("cycle:4"));
  EXPECT_EQ(c4.chi, 2);
  EXPECT_EQ(c4.nu_lo, 2);
  EXPECT_EQ(c4.nu_hi, 2);
  EXPECT_EQ(c4.tau_lo, 2);
  EXPECT_EQ(c4.tau_hi, 2);

  const NuTauReport tri = nu_tau(build_graph("complete:3"));
  EXPECT_TRUE(tri.certified_by_theorem);
  EXPECT_EQ(tri.nu_hi, 3);
  EXPECT_EQ(tri.tau_hi, 3);

  const NuTauReport theta = nu_tau(build_graph("theta:2,2,4"), NuTauOptions{20'000, 2000, 1, 1});
  EXPECT_GE(theta.nu_lo, 3);
  EXPECT_GE(theta.tau_lo, 3);
  EXPECT_LE(theta.tau_hi, 7);
}

TEST(Ecc, Verdicts) {
  EXPECT_EQ(is_ecc(build_graph("bipartite:2,3"), NuTauOptions{1'000'000, 2000, 1, 1}).value, TriState::True);
  EXPECT_EQ(is_weakly_ecc(build_graph("cycle:6")).value, TriState::True);

  const EccVerdict theta = is_weakly_ecc(build_graph("theta:2,2,4"));
  EXPECT_EQ(theta.value, TriState::False);
  ASSERT_TRUE(theta.witness.has_value());
  EXPECT_EQ(theta.witness_count, w(1));
  EXPECT_EQ(is_ecc(build_graph("theta:2,2,4")).value, TriState::False);

  const Graph k224 = build_graph("multipartite:2,2,4");
  const EccVerdict v = is_weakly_ecc(k224, NuTauOptions{1000, 2000, 1, 1});
  EXPECT_EQ(v.value, TriState::False);
  EXPECT_EQ(v.witness_m, 3);
  EXPECT_LT(*v.witness_count, count_proper_colorings(k224, 3));
}

TEST(ClassifyBipartite, Cores) {
  EXPECT_TRUE(classify_bipartite(build_graph("path:4")).ecc);
  EXPECT_TRUE(classify_bipartite(build_graph("pendant:2+cycle:6")).ecc);
  EXPECT_TRUE(classify_bipartite(build_graph("bipartite:2,3")).ecc);
  EXPECT_FALSE(classify_bipartite(build_graph("bipartite:2,4")).ecc);
  const BipartiteClassification t = classify_bipartite(build_graph("pendant:2+theta:2,2,4"));
  EXPECT_FALSE(t.ecc);
  EXPECT_EQ(t.core.kind, CoreKind::Theta222k);
  EXPECT_EQ(t.witness_count, w(1));
  ASSERT_TRUE(t.witness.has_value());
  EXPECT_EQ(count_list_colorings(build_graph("pendant:2+theta:2,2,4"), *t.witness), w(1));
}

}  // namespace
}  // namespace chromacount
