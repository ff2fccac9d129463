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

// Independent reference implementations used only by tests. They share no
// code with the library beyond the Graph and ListAssignment containers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "chromacount/dp_color.hpp"
#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"

namespace oracle {

using chromacount::ColorSet;
using chromacount::Cover;
using chromacount::Graph;
using chromacount::ListAssignment;

using Poly = std::vector<long long>;  // coefficients, index = power of m

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

// Multigraph-free deletion-contraction on adjacency matrices.
class ChromaticPolynomial {
 public:
  Poly operator()(const Graph& g) {
    std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
    for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
    return eval(a);
  }

  static long long at(const Poly& p, int m) {
    long long v = 0, x = 1;
    for (long long c : p) {
      v += c * x;
      x *= m;
    }
    return v;
  }

 private:
  using Matrix = std::vector<std::vector<bool>>;

  Poly eval(const Matrix& a) {
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
    const int n = static_cast<int>(a.size());
    int eu = -1, ev = -1;
    for (int u = 0; u < n && eu < 0; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (a[u][v]) {
          eu = u;
          ev = v;
          break;
        }
      }
    }
    Poly result;
    if (eu < 0) {
      result.assign(n + 1, 0);
      result[n] = 1;
    } else {
      Matrix del = a;
      del[eu][ev] = del[ev][eu] = false;
      Matrix con(n - 1, std::vector<bool>(n - 1, false));
      auto idx = [&](int x) { return x < ev ? x : x - 1; };
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == y || !a[x][y]) continue;
          const int cx = x == ev ? eu : x, cy = y == ev ? eu : y;
          if (cx == cy) continue;
          con[idx(cx)][idx(cy)] = true;
        }
      }
      result = poly_sub(eval(del), eval(con));
    }
    memo_.emplace(a, result);
    return result;
  }

  std::map<Matrix, Poly> memo_;
};

inline long long chromatic(const Graph& g, int m) {
  ChromaticPolynomial p;
  return ChromaticPolynomial::at(p(g), m);
}

// Plain product enumeration over the lists.
inline long long list_colorings(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  std::vector<std::vector<int>> options(n);
  for (int v = 0; v < n; ++v) options[v] = chromacount::colors_of(lists[v]);
  const auto edges = g.edges();
  std::vector<int> pick(n, 0);
  long long count = 0;
  for (int v = 0; v < n; ++v) {
    if (options[v].empty()) return 0;
  }
  for (;;) {
    bool ok = true;
    for (const auto& e : edges) {
      if (options[e.u][pick[e.u]] == options[e.v][pick[e.v]]) {
        ok = false;
        break;
      }
    }
    count += ok;
    int v = 0;
    while (v < n && ++pick[v] == static_cast<int>(options[v].size())) pick[v++] = 0;
    if (v == n) return count;
  }
}

// Minimum of list_colorings over every m-assignment with colors from a pool of
// `pool` colors. A pool of m*n colors reaches every assignment up to renaming.
inline long long min_list_colorings(const Graph& g, int m, int pool) {
  const int n = g.order();
  std::vector<ColorSet> subsets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pool); ++s) {
    if (std::popcount(s) == m) subsets.push_back(static_cast<ColorSet>(s));
  }
  std::vector<std::size_t> pick(n, 0);
  long long best = -1;
  for (;;) {
    std::vector<ColorSet> l(n);
    for (int v = 0; v < n; ++v) l[v] = subsets[pick[v]];
    const long long c = list_colorings(g, ListAssignment(l));
    if (best < 0 || c < best) best = c;
    if (best == 0) return 0;
    int v = 0;
    while (v < n && ++pick[v] == subsets.size()) pick[v++] = 0;
    if (v == n) return best;
  }
}

// Independent transversals of a cover: pick one color per vertex and reject
// any pick that hits a matched pair.
inline long long transversals(const Graph& g, const Cover& cover) {
  const int n = g.order(), m = cover.m;
  std::vector<int> pick(n, 0);
  long long count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < cover.edges.size() && ok; ++i) {
      const auto& e = cover.edges[i];
      const int c = pick[e.u];
      const bool present = cover.present.empty() || (cover.present[i] >> c & 1);
      if (present && cover.perms[i][c] == pick[e.v]) ok = false;
    }
    count += ok;
    int v = 0;
    while (v < n && ++pick[v] == m) pick[v++] = 0;
    if (v == n) return count;
  }
}

// Minimum transversal count over all full m-fold covers.
inline long long min_transversals(const Graph& g, int m) {
  Cover cover;
  cover.m = m;
  cover.edges = g.edges();
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(id);
  while (std::next_permutation(id.begin(), id.end()));
  const std::size_t e = cover.edges.size();
  std::vector<std::size_t> pick(e, 0);
  long long best = -1;
  for (;;) {
    cover.perms.clear();
    for (std::size_t i = 0; i < e; ++i) cover.perms.push_back(perms[pick[i]]);
    const long long c = transversals(g, cover);
    if (best < 0 || c < best) best = c;
    std::size_t i = 0;
    while (i < e && ++pick[i] == perms.size()) pick[i++] = 0;
    if (i == e) return best;
  }
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const auto& e : edges) {
      if (!b.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle
