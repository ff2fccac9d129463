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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "chromacount/color_count.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/structure.hpp"
#include "chromacount/witness.hpp"
#include "oracles.hpp"

namespace chromacount {
namespace {

WideCount w(std::uint64_t v) { return WideCount(v); }

TEST(ThetaWitness, ExactlyOneColoring) {
  for (int k = 2; k <= 8; ++k) {
    const ListAssignment l = theta_witness_assignment(k);
    EXPECT_TRUE(l.is_m_assignment(2));
    EXPECT_EQ(count_list_colorings(theta_222k(k), l), w(1)) << "k=" << k;
  }
  EXPECT_EQ(oracle::list_colorings(theta_222k(2), theta_witness_assignment(2)), 1);
  EXPECT_THROW(theta_witness_assignment(1), InvalidArgument);
}

TEST(K224Witness, FourColoringsAllPinningZ) {
  const K224Witness wit = k224_witness();
  EXPECT_TRUE(wit.graph == build_graph("multipartite:2,2,4"));
  EXPECT_TRUE(wit.lists.is_m_assignment(3));
  EXPECT_EQ(count_list_colorings(wit.graph, wit.lists), w(4));
  EXPECT_EQ(count_proper_colorings(wit.graph, 3), w(6));
  int seen = 0;
  ListColoringCounter(wit.graph).for_each(wit.lists.lists(), [&](std::span<const int> f) {
    for (int z = 4; z < 8; ++z) EXPECT_EQ(f[z], 1);
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, 4);
}

TEST(PendantExtension, KeepsSingleColoring) {
  for (const char* spec : {"pendant:1+theta:2,2,4", "pendant:3+theta:2,2,6", "theta:2,2,4"}) {
    const Graph g = build_graph(spec);
    const ListAssignment l = pendant_extension_witness(g);
    EXPECT_EQ(count_list_colorings(g, l), w(1)) << spec;
  }
  EXPECT_THROW(pendant_extension_witness(build_graph("pendant:1+cycle:4")), PreconditionError);
}

TEST(TransportedWitness, FollowsIsomorphism) {
  const Graph theta = theta_222k(3);
  std::vector<int> sigma(theta.order());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(sigma.begin(), sigma.end(), rng);
    Graph h(theta.order());
    for (const auto& e : theta.edges()) h.add_edge(sigma[e.u], sigma[e.v]);
    const auto l = transported_theta_witness(h);
    ASSERT_TRUE(l.has_value());
    EXPECT_EQ(count_list_colorings(h, *l), w(1));
  }
  EXPECT_FALSE(transported_theta_witness(build_graph("cycle:6")).has_value());
}

TEST(ThetaDecomposition, SumOfProductsIsTheCount) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int m = 2 + static_cast<int>(rng() % 2);
    const Graph g = theta_222k(k);
    const ListAssignment l = random_m_assignment(g.order(), m, m + 3, rng);
    const ThetaDecomposition d = theta_decomposition(g, l);
    ASSERT_EQ(d.total(), count_list_colorings(g, l)) << l.to_text();
    for (int path = 0; path < 2; ++path) {
      for (const auto& row : d.n[path]) {
        for (const WideCount& x : row) {
          EXPECT_GE(x, w(m - 2));
          EXPECT_LE(x, w(m));
        }
      }
    }
  }
  const ThetaDecomposition constant = theta_decomposition(theta_222k(2), ListAssignment::constant(7, 3));
  EXPECT_EQ(constant.total(), w(102));
  EXPECT_THROW(theta_decomposition(build_graph("cycle:4"), ListAssignment::constant(4, 2)), InvalidArgument);
}

TEST(PinnedPathCount, MatchesBruteForce) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const int r = static_cast<int>(rng() % 4);
    const ListAssignment l = random_m_assignment(std::max(r, 1), 3, 5, rng);
    const std::span<const ColorSet> internal = l.lists().first(static_cast<std::size_t>(r));
    const int c = static_cast<int>(rng() % 5), d = static_cast<int>(rng() % 5);
    long long expected = 0;
    if (r == 0) {
      expected = c != d;
    } else {
      // u - internal path - v with u, v pinned to single-color lists.
      std::vector<ColorSet> lists(internal.begin(), internal.end());
      lists.insert(lists.begin(), color_bit(c));
      lists.push_back(color_bit(d));
      expected = oracle::list_colorings(build_graph("path:" + std::to_string(r + 2)), ListAssignment(lists));
    }
    EXPECT_EQ(pinned_path_count(internal, c, d), w(expected)) << "r=" << r << " c=" << c << " d=" << d;
  }
}

}  // namespace
}  // namespace chromacount
