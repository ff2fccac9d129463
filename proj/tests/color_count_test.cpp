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
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_assignment.hpp"
#include "chromacount/wide_count.hpp"
#include "oracles.hpp"

namespace chromacount {
namespace {

WideCount w(std::uint64_t v) { return WideCount(v); }

TEST(WideCount, ArithmeticAndOverflow) {
  EXPECT_EQ((w(3) + w(4)).to_string(), "7");
  EXPECT_EQ(pow(w(2), 100).to_string(), "1267650600228229401496703205376");
  EXPECT_TRUE(pow(w(2), 128).overflowed());
  EXPECT_TRUE((pow(w(2), 127) + pow(w(2), 127)).overflowed());
  EXPECT_EQ(WideCount::parse("340282366920938463463374607431768211455").to_string(),
            "340282366920938463463374607431768211455");
  EXPECT_LT(w(5), w(6));
  EXPECT_LT(w(5), WideCount::overflow());
  EXPECT_THROW(WideCount::parse("12a"), ParseError);
}

TEST(ListAssignment, TextRoundTrip) {
  const ListAssignment l = ListAssignment::from_lists({{1, 2}, {0, 5, 127}, {3}});
  EXPECT_EQ(l.to_text(), "v0: {1,2}\nv1: {0,5,127}\nv2: {3}\n");
  EXPECT_EQ(ListAssignment::parse(l.to_text()), l);
  EXPECT_THROW(ListAssignment::parse("v0: {1,2\n"), ParseError);
  EXPECT_THROW(ListAssignment::parse("v1: {1}\n"), ParseError);
}

TEST(ListAssignment, Canonicalized) {
  const ListAssignment l = ListAssignment::from_lists({{7, 9}, {9, 4}});
  EXPECT_EQ(l.canonicalized(), ListAssignment::from_lists({{0, 1}, {1, 2}}));
  EXPECT_TRUE(l.is_m_assignment(2));
  EXPECT_EQ(l.uniform_size(), 2);
}

TEST(ProperColorings, MatchesDeletionContraction) {
  std::mt19937_64 rng(1);
  oracle::ChromaticPolynomial dc;
  for (int i = 0; i < 80; ++i) {
    const Graph g = random_connected_graph(1 + static_cast<int>(rng() % 8), 45, rng);
    const auto poly = dc(g);
    for (int m = 0; m <= 5; ++m) {
      EXPECT_EQ(count_proper_colorings(g, m), w(oracle::ChromaticPolynomial::at(poly, m))) << to_graph6(g);
    }
  }
}

TEST(ProperColorings, ClosedForms) {
  for (int n = 3; n <= 10; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const FamilySpec f = parse_family_spec("cycle:" + std::to_string(n));
      EXPECT_EQ(closed_form(f, m), count_proper_colorings(build(f), m));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const FamilySpec f = parse_family_spec("complete:" + std::to_string(n));
    for (int m = 0; m <= 7; ++m) EXPECT_EQ(closed_form(f, m), count_proper_colorings(build(f), m));
  }
  for (int n = 1; n <= 6; ++n) {
    const FamilySpec f = parse_family_spec("bipartite:2," + std::to_string(n));
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(closed_form(f, m), count_proper_colorings(build(f), m));
  }
  EXPECT_EQ(closed_form(parse_family_spec("theta:2,2,4"), 3), w(102));
  EXPECT_EQ(closed_form(parse_family_spec("join:complete:1+cycle:5"), 4), w(4 * 30));
  EXPECT_THROW(closed_form(parse_family_spec("cycle:3"), -1), InvalidArgument);
  EXPECT_THROW(closed_form(parse_family_spec("multipartite:2,2,4"), 3), UnsupportedFamily);
}

TEST(ListColorings, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_connected_graph(n, 50, rng);
    std::vector<int> sizes(n);
    for (int& s : sizes) s = 1 + static_cast<int>(rng() % 3);
    const ListAssignment l = random_lists(sizes, 5, rng);
    const WideCount expected = w(oracle::list_colorings(g, l));
    EXPECT_EQ(count_list_colorings(g, l), expected) << to_graph6(g) << "\n" << l.to_text();
    const CappedCount capped = count_list_colorings(g, l, w(2));
    EXPECT_EQ(capped.reached_cap, expected >= w(2));
    if (!capped.reached_cap) EXPECT_EQ(capped.value, expected);
  }
}

TEST(ListColorings, HighColorsAndWideCounts) {
  const Graph g(20);
  ListAssignment l = ListAssignment::constant(20, 100);
  EXPECT_EQ(count_list_colorings(g, l), pow(w(100), 20));
  const ListAssignment hi = ListAssignment::from_lists({{120, 127}, {127}});
  EXPECT_EQ(count_list_colorings(build_graph("path:2"), hi), w(1));
  EXPECT_THROW(count_list_colorings(build_graph("path:3"), hi), InvalidArgument);
}

TEST(ListColoringCounter, VisitsEveryColoring) {
  const Graph g = build_graph("cycle:4");
  ListColoringCounter counter(g);
  const ListAssignment l = ListAssignment::constant(4, 3);
  int seen = 0;
  counter.for_each(l.lists(), [&](std::span<const int> f) {
    for (const auto& e : g.edges()) EXPECT_NE(f[e.u], f[e.v]);
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, 18);
  EXPECT_TRUE(counter.colorable(l.lists()));
}

}  // namespace
}  // namespace chromacount
