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

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chromacount {

inline constexpr int kMaxVertices = 31;

/// Bit i is vertex i.
using VertexMask = std::uint32_t;

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Small simple undirected graph stored as adjacency bit-rows.
///
/// Vertices are 0..order()-1 with 1 <= order() <= 31. Edges are symmetric and
/// loop-free; both invariants are enforced by add_edge. Optional labels carry
/// the names family builders give to vertices (u, x1, z3, ...).
class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1u; }
  VertexMask neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  VertexMask all_vertices() const;

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexMask keep) const;
  /// Copy with one extra vertex (index order()) adjacent to `attach`.
  Graph with_pendant(int attach) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  /// Label of v, or "v<i>" when unlabeled.
  std::string label(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  int check(int v) const;

  std::vector<VertexMask> adj_;
  std::vector<std::string> labels_;
};

/// Join: vertices of `a` first, then `b`, all cross edges added.
Graph join(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

}  // namespace chromacount
