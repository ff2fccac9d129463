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
#include <set>

#include <gtest/gtest.h>

#include "chromacount/color_count.hpp"
#include "chromacount/enumeration.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/lemmas.hpp"
#include "oracles.hpp"

namespace chromacount {
namespace {

using Lists = std::vector<ColorSet>;

template <class Enumerator>
std::vector<Lists> collect(const Enumerator& e, const typename Enumerator::Unit& unit) {
  std::vector<Lists> out;
  e.run(unit, [&](std::span<const ColorSet> l) {
    out.emplace_back(l.begin(), l.end());
    return true;
  });
  return out;
}

template <class Enumerator>
long long min_count(const Graph& g, const Enumerator& e) {
  ListColoringCounter counter(g);
  long long best = -1;
  e.run(e.root(), [&](std::span<const ColorSet> l) {
    const auto c = static_cast<long long>(*counter.count(l).to_u64());
    if (best < 0 || c < best) best = c;
    return true;
  });
  return best;
}

TEST(RestrictedGrowth, EveryAssignmentIsReachedUpToRenaming) {
  std::mt19937_64 rng(9);
  for (auto [n, m] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    RestrictedGrowthEnumerator e(n, m);
    std::set<Lists> seen;
    for (const auto& l : collect(e, e.root())) {
      for (ColorSet s : l) EXPECT_EQ(color_count(s), m);
      EXPECT_TRUE(seen.insert(l).second) << "visited twice";
    }
    for (int i = 0; i < 300; ++i) {
      const ListAssignment l = random_m_assignment(n, m, m * n, rng).canonicalized();
      EXPECT_TRUE(seen.count(Lists(l.lists().begin(), l.lists().end()))) << l.to_text();
    }
  }
}

TEST(RestrictedGrowth, SplitPreservesOrder) {
  RestrictedGrowthEnumerator e(5, 2);
  const auto all = collect(e, e.root());
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<Lists> joined;
    for (const auto& u : e.split(depth)) {
      const auto part = collect(e, u);
      joined.insert(joined.end(), part.begin(), part.end());
    }
    EXPECT_EQ(joined, all) << "depth " << depth;
  }
}

TEST(RestrictedGrowth, MinimumMatchesBruteForce) {
  for (const char* spec : {"path:3", "cycle:3", "bipartite:1,2"}) {
    const Graph g = build_graph(spec);
    RestrictedGrowthEnumerator e(g.order(), 2);
    EXPECT_EQ(min_count(g, e), oracle::min_list_colorings(g, 2, 6)) << spec;
  }
}

TEST(RestrictedGrowth, RejectsLargeUniverse) {
  EXPECT_THROW(RestrictedGrowthEnumerator(30, 5), InvalidArgument);
  EXPECT_THROW(RestrictedGrowthEnumerator(3, 0), InvalidArgument);
}

TEST(ClassMultiset, LeavesAreAssignments) {
  const Graph g = build_graph("cycle:4");
  ClassMultisetEnumerator e(g, 3);
  const auto leaves = collect(e, e.root());
  EXPECT_EQ(leaves.size(), 409u);
  EXPECT_EQ(ListAssignment(leaves.front()), ListAssignment::constant(4, 3));
  for (const auto& l : leaves) {
    for (ColorSet s : l) EXPECT_EQ(color_count(s), 3);
  }
}

TEST(ClassMultiset, KnownLeafCounts) {
  EXPECT_EQ(collect(ClassMultisetEnumerator(build_graph("theta:2,2,4"), 2), {}).size(), 16551u);
  EXPECT_EQ(collect(ClassMultisetEnumerator(build_graph("bipartite:2,3"), 3), {}).size(), 9488u);
  EXPECT_EQ(collect(ClassMultisetEnumerator(build_graph("bipartite:2,4"), 2), {}).size(), 6258u);
  EXPECT_EQ(collect(ClassMultisetEnumerator(build_graph("bipartite:3,4"), 2, true), {}).size(), 12928u);
}

TEST(ClassMultiset, SplitCoversSameLeaves) {
  const Graph g = build_graph("theta:2,2,4");
  ClassMultisetEnumerator e(g, 2);
  const auto all = collect(e, e.root());
  for (int depth = 1; depth <= 4; ++depth) {
    std::vector<Lists> joined;
    for (const auto& u : e.split(depth)) {
      const auto part = collect(e, u);
      joined.insert(joined.end(), part.begin(), part.end());
    }
    EXPECT_EQ(joined, all) << "depth " << depth;
  }
}

TEST(ClassMultiset, MinimumMatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const Graph g = random_connected_graph(n, 50, rng);
    ClassMultisetEnumerator e(g, 2);
    EXPECT_EQ(min_count(g, e), oracle::min_list_colorings(g, 2, 2 * n)) << to_graph6(g);
  }
  const Graph c4 = build_graph("cycle:4");
  EXPECT_EQ(min_count(c4, ClassMultisetEnumerator(c4, 2)), oracle::min_list_colorings(c4, 2, 8));
  const Graph p3 = build_graph("path:3");
  EXPECT_EQ(min_count(p3, ClassMultisetEnumerator(p3, 3)), oracle::min_list_colorings(p3, 3, 9));
}

TEST(ClassMultiset, FullCoverageDecidesColorability) {
  struct Case {
    const char* spec;
    bool choosable;
  };
  // path:4 and cycle:4 are checked against brute force; the rest are classical.
  EXPECT_GT(oracle::min_list_colorings(build_graph("path:4"), 2, 8), 0);
  EXPECT_GT(oracle::min_list_colorings(build_graph("cycle:4"), 2, 8), 0);
  for (const Case c : {Case{"cycle:4", true}, Case{"path:4", true}, Case{"bipartite:2,3", true},
                       Case{"bipartite:2,4", false}, Case{"cycle:5", false}, Case{"theta:2,2,4", true}}) {
    const Graph g = build_graph(c.spec);
    ListColoringCounter counter(g);
    bool all_colorable = true;
    ClassMultisetEnumerator(g, 2, true).run({}, [&](std::span<const ColorSet> l) {
      all_colorable = all_colorable && counter.colorable(l);
      return all_colorable;
    });
    EXPECT_EQ(all_colorable, c.choosable) << c.spec;
  }
}

TEST(CanonicalAssignments, VisitsListAssignments) {
  int visited = 0;
  enumerate_canonical_assignments(build_graph("path:2"), 2, [&](const ListAssignment& l) {
    EXPECT_TRUE(l.is_m_assignment(2));
    ++visited;
    return visited < 3;
  });
  EXPECT_EQ(visited, 3);
}

}  // namespace
}  // namespace chromacount
