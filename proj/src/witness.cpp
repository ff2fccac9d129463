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

#include "chromacount/witness.hpp"

#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/structure.hpp"

namespace chromacount {

namespace {

ColorSet pair(int a, int b) { return color_bit(a) | color_bit(b); }

}  // namespace

ListAssignment theta_witness_assignment(int k) {
  if (k < 2) throw InvalidArgument("theta witness needs k >= 2");
  const int n = 2 * k + 3;
  std::vector<ColorSet> lists(static_cast<std::size_t>(n), pair(2, 3));
  lists[0] = pair(1, 3);          // u
  lists[1] = pair(1, 2);          // x1
  lists[2] = pair(2, 3);          // y1
  lists[3] = pair(1, 3);          // z1
  lists[2 * k + 1] = pair(1, 2);  // z_{2k-1}
  lists[2 * k + 2] = pair(1, 2);  // v
  return ListAssignment(std::move(lists));
}

K224Witness k224_witness() {
  auto set = [](std::initializer_list<int> c) { return make_color_set(std::vector<int>(c)); };
  return K224Witness{build_graph("multipartite:2,2,4"),
                     ListAssignment({set({1, 2, 3}), set({1, 4, 5}), set({1, 2, 3}), set({1, 4, 5}),
                                     set({1, 2, 4}), set({1, 2, 5}), set({1, 3, 4}), set({1, 3, 5})})};
}

ListAssignment pendant_extension_witness(const Graph& g, const ListAssignment& core_lists) {
  const CoreDecomposition dec = core_decomposition(g);
  const CoreClass cls = core_class(dec.core);
  if (cls.kind != CoreKind::Theta222k) {
    throw PreconditionError("core is " + to_string(cls) + ", not a theta graph with k >= 2");
  }
  if (core_lists.order() != dec.core.order()) {
    throw PreconditionError("core assignment has " + std::to_string(core_lists.order()) +
                            " lists for a core of order " + std::to_string(dec.core.order()));
  }
  std::vector<ColorSet> lists(static_cast<std::size_t>(g.order()), 0);
  VertexMask assigned = 0;
  for (std::size_t i = 0; i < dec.core_vertices.size(); ++i) {
    lists[dec.core_vertices[i]] = core_lists[static_cast<int>(i)];
    assigned |= VertexMask{1} << dec.core_vertices[i];
  }
  for (auto it = dec.deletion_order.rbegin(); it != dec.deletion_order.rend(); ++it) {
    const VertexMask up = g.neighbors(*it) & assigned;
    if (std::popcount(up) != 1) throw InternalError("deleted vertex without a unique parent");
    lists[*it] = lists[std::countr_zero(up)];
    assigned |= VertexMask{1} << *it;
  }
  return ListAssignment(std::move(lists));
}

std::optional<ListAssignment> transported_theta_witness(const Graph& g) {
  if (g.order() < 7 || g.order() % 2 == 0) return std::nullopt;
  const int k = (g.order() - 3) / 2;
  const auto iso = find_isomorphism(theta_222k(k), g);
  if (!iso) return std::nullopt;
  const ListAssignment base = theta_witness_assignment(k);
  std::vector<ColorSet> lists(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) lists[(*iso)[i]] = base[i];
  return ListAssignment(std::move(lists));
}

ListAssignment pendant_extension_witness(const Graph& g) {
  const CoreDecomposition dec = core_decomposition(g);
  auto core_lists = transported_theta_witness(dec.core);
  if (!core_lists) throw PreconditionError("core is not a theta graph with k >= 2");
  return pendant_extension_witness(g, *core_lists);
}

WideCount pinned_path_count(std::span<const ColorSet> internal, int c, int d) {
  if (internal.empty()) return WideCount(c != d ? 1 : 0);
  // ways[x]: colorings of the prefix ending in color x.
  std::vector<std::pair<int, WideCount>> ways;
  for (int x : colors_of(internal[0])) {
    if (x != c) ways.emplace_back(x, WideCount(1));
  }
  for (std::size_t i = 1; i < internal.size(); ++i) {
    std::vector<std::pair<int, WideCount>> next;
    for (int x : colors_of(internal[i])) {
      WideCount v(0);
      for (const auto& w : ways) {
        if (w.first != x) v += w.second;
      }
      next.emplace_back(x, v);
    }
    ways = std::move(next);
  }
  WideCount total(0);
  for (const auto& w : ways) {
    if (w.first != d) total += w.second;
  }
  return total;
}

WideCount ThetaDecomposition::total() const {
  WideCount sum(0);
  for (std::size_t a = 0; a < u_colors.size(); ++a) {
    for (std::size_t b = 0; b < v_colors.size(); ++b) sum += n[0][a][b] * n[1][a][b] * n[2][a][b];
  }
  return sum;
}

ThetaDecomposition theta_decomposition(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  if (n < 5 || n % 2 == 0 || !(g == theta_222k((n - 3) / 2))) {
    throw InvalidArgument("theta decomposition needs the graph theta:2,2,2k");
  }
  if (lists.order() != n) throw InvalidArgument("list assignment does not match the graph");
  ThetaDecomposition dec;
  dec.k = (n - 3) / 2;
  const int v = n - 1;
  dec.u_colors = colors_of(lists[0]);
  dec.v_colors = colors_of(lists[v]);
  const std::vector<ColorSet> s1{lists[1]}, s2{lists[2]};
  const std::vector<ColorSet> s3(lists.lists().begin() + 3, lists.lists().begin() + v);
  const std::vector<ColorSet>* paths[3] = {&s1, &s2, &s3};
  for (int i = 0; i < 3; ++i) {
    auto& table = dec.n[i];
    table.assign(dec.u_colors.size(), std::vector<WideCount>(dec.v_colors.size()));
    for (std::size_t a = 0; a < dec.u_colors.size(); ++a) {
      for (std::size_t b = 0; b < dec.v_colors.size(); ++b) {
        table[a][b] = pinned_path_count(*paths[i], dec.u_colors[a], dec.v_colors[b]);
      }
    }
  }
  return dec;
}

}  // namespace chromacount
