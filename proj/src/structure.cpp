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

#include "chromacount/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"

namespace chromacount {

CoreDecomposition core_decomposition(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("core is defined for connected graphs only");
  VertexMask alive = g.all_vertices();
  std::vector<int> deleted;
  for (;;) {
    int leaf = -1;
    for (VertexMask a = alive; a != 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      if (std::popcount(g.neighbors(v) & alive) == 1) {
        leaf = v;
        break;
      }
    }
    if (leaf < 0) break;
    alive &= ~(VertexMask{1} << leaf);
    deleted.push_back(leaf);
  }
  CoreDecomposition out{g.induced(alive), {}, std::move(deleted)};
  for (VertexMask a = alive; a != 0; a &= a - 1) out.core_vertices.push_back(std::countr_zero(a));
  return out;
}

Graph core_of(const Graph& g) { return core_decomposition(g).core; }

std::optional<std::pair<VertexMask, VertexMask>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  VertexMask x = 0, y = 0;
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      (side[v] == 0 ? x : y) |= VertexMask{1} << v;
      for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return std::make_pair(x, y);
}

namespace {

void grow_clique(const Graph& g, VertexMask clique, VertexMask candidates, int& best) {
  const int size = std::popcount(clique);
  if (size + std::popcount(candidates) <= best) return;
  if (candidates == 0) {
    best = size;
    return;
  }
  while (candidates != 0) {
    if (size + std::popcount(candidates) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(g, clique | (VertexMask{1} << v), candidates & g.neighbors(v), best);
  }
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

bool colorable(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
               std::size_t depth, int k, int used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  std::uint64_t forbidden = 0;
  for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
    const int c = color[std::countr_zero(nb)];
    if (c >= 0) forbidden |= std::uint64_t{1} << c;
  }
  // Colors beyond used+1 are symmetric; try only one fresh color.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((forbidden >> c) & 1u) continue;
    color[v] = c;
    if (colorable(g, order, color, depth + 1, k, std::max(used, c + 1))) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

int clique_number(const Graph& g) {
  int best = 1;
  grow_clique(g, 0, g.all_vertices(), best);
  return best;
}

int greedy_color_bound(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  int used = 0;
  for (int v : degree_order(g)) {
    std::uint64_t forbidden = 0;
    for (VertexMask nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
      const int c = color[std::countr_zero(nb)];
      if (c >= 0) forbidden |= std::uint64_t{1} << c;
    }
    color[v] = std::countr_one(forbidden);
    used = std::max(used, color[v] + 1);
  }
  return used;
}

int chromatic_number(const Graph& g) {
  const int lo = clique_number(g);
  const int hi = greedy_color_bound(g);
  const std::vector<int> order = degree_order(g);
  for (int k = lo; k < hi; ++k) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    if (colorable(g, order, color, 0, k, 0)) return k;
  }
  return hi;
}

int degeneracy(const Graph& g) {
  VertexMask alive = g.all_vertices();
  int best = 0;
  while (alive != 0) {
    int pick = -1, low = kMaxVertices + 1;
    for (VertexMask a = alive; a != 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      const int d = std::popcount(g.neighbors(v) & alive);
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    alive &= ~(VertexMask{1} << pick);
  }
  return best;
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;  // vertices of a, BFS-ish so each has a mapped neighbor early
  std::vector<int> map;    // a-vertex -> b-vertex
  VertexMask used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < b.order(); ++w) {
      if ((used >> w) & 1u) continue;
      if (a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int x = order[j];
        ok = a.adjacent(v, x) == b.adjacent(w, map[x]);
      }
      if (!ok) continue;
      map[v] = w;
      used |= VertexMask{1} << w;
      if (extend(depth + 1)) return true;
      used &= ~(VertexMask{1} << w);
    }
    map[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  IsoSearch s{a, b, {}, std::vector<int>(static_cast<std::size_t>(a.order()), -1)};
  VertexMask placed = 0;
  while (static_cast<int>(s.order.size()) < a.order()) {
    // Next vertex: most neighbors already placed, then highest degree.
    int pick = -1, best_links = -1, best_degree = -1;
    for (int v = 0; v < a.order(); ++v) {
      if ((placed >> v) & 1u) continue;
      const int links = std::popcount(a.neighbors(v) & placed);
      if (links > best_links || (links == best_links && a.degree(v) > best_degree)) {
        pick = v;
        best_links = links;
        best_degree = a.degree(v);
      }
    }
    s.order.push_back(pick);
    placed |= VertexMask{1} << pick;
  }
  if (!s.extend(0)) return std::nullopt;
  return s.map;
}

CoreClass core_class(const Graph& g) {
  if (!bipartition(g)) throw PreconditionError("core_class requires a bipartite graph");
  const Graph core = core_of(g);
  const int n = core.order();
  const int e = core.size();
  if (n == 1) return {CoreKind::K1, 0};
  bool two_regular = true;
  for (int v = 0; v < n; ++v) two_regular = two_regular && core.degree(v) == 2;
  if (two_regular) return {CoreKind::EvenCycle, (n - 2) / 2};
  if (n == 5 && e == 6 && isomorphic(core, build_graph("bipartite:2,3"))) return {CoreKind::K23, 0};
  if (n >= 7 && n % 2 == 1 && e == n + 1) {
    const int k = (n - 3) / 2;
    if (isomorphic(core, theta_222k(k))) return {CoreKind::Theta222k, k};
  }
  return {CoreKind::Other, 0};
}

std::string to_string(const CoreClass& c) {
  switch (c.kind) {
    case CoreKind::K1:
      return "K1";
    case CoreKind::EvenCycle:
      return "C" + std::to_string(2 * c.k + 2);
    case CoreKind::K23:
      return "K2,3";
    case CoreKind::Theta222k:
      return "Theta(2,2," + std::to_string(2 * c.k) + ")";
    case CoreKind::Other:
      return "other";
  }
  return "other";
}

}  // namespace chromacount
