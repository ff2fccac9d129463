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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromacount/graph.hpp"

namespace chromacount {

/// Result of iterated leaf deletion.
struct CoreDecomposition {
  Graph core;
  /// Original vertex ids of the core, in core vertex order.
  std::vector<int> core_vertices;
  /// Deleted vertices, first deleted first. Each was a leaf of the graph that
  /// remained at the time of its deletion.
  std::vector<int> deletion_order;
};

/// Repeatedly deletes a degree-1 vertex (smallest index first) until none is
/// left. The resulting subgraph does not depend on the deletion order. Throws
/// PreconditionError on disconnected input.
CoreDecomposition core_decomposition(const Graph& g);
Graph core_of(const Graph& g);

/// The two color classes of a proper 2-coloring (vertex 0's class first in each
/// component), or nullopt if g has an odd cycle.
std::optional<std::pair<VertexMask, VertexMask>> bipartition(const Graph& g);

int clique_number(const Graph& g);
/// Colors used by greedy coloring in largest-degree-first order.
int greedy_color_bound(const Graph& g);
/// Smallest k admitting a proper k-coloring; backtracking over
/// k = clique_number .. greedy_color_bound.
int chromatic_number(const Graph& g);
/// Largest minimum degree over all subgraphs. A d-degenerate graph is
/// (d+1)-choosable.
int degeneracy(const Graph& g);

/// Bijection f with a.adjacent(i,j) == b.adjacent(f[i],f[j]), found by
/// exhaustive backtracking with degree filtering.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
inline bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

enum class CoreKind { K1, EvenCycle, K23, Theta222k, Other };

/// Classification of the core of a connected bipartite graph. For EvenCycle the
/// core is C_{2k+2}; for Theta222k it is Θ(2,2,2k) with k >= 2 (k = 1 is
/// reported as K23).
struct CoreClass {
  CoreKind kind = CoreKind::Other;
  int k = 0;
  friend bool operator==(const CoreClass&, const CoreClass&) = default;
};

/// Throws PreconditionError for disconnected or non-bipartite input.
CoreClass core_class(const Graph& g);
std::string to_string(const CoreClass& c);

}  // namespace chromacount
