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

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"
#include "chromacount/wide_count.hpp"

namespace chromacount {

/// The 2-assignment of Θ(2,2,2k) (k >= 2, vertex order of theta_222k) with
/// exactly one proper coloring.
ListAssignment theta_witness_assignment(int k);

struct K224Witness {
  Graph graph;  // multipartite:2,2,4; vertices x1,x2,y1,y2,z1..z4
  ListAssignment lists;
};

/// The 3-assignment of K_{2,2,4} with four proper colorings, each coloring
/// z1..z4 with color 1.
K224Witness k224_witness();

/// Extends `core_lists` (indexed like core_decomposition(g).core_vertices) to
/// all of g: each deleted leaf copies the list of the neighbor it hung from.
/// Throws PreconditionError unless the core of g is Θ(2,2,2k) with k >= 2 and
/// `core_lists` has one list per core vertex.
ListAssignment pendant_extension_witness(const Graph& g, const ListAssignment& core_lists);

/// As above, with theta_witness_assignment(k) transported onto the core.
ListAssignment pendant_extension_witness(const Graph& g);

/// Lists of the form theta_witness_assignment carried along an isomorphism
/// onto a graph isomorphic to Θ(2,2,2k); empty when g is not such a graph.
std::optional<ListAssignment> transported_theta_witness(const Graph& g);

/// Per-path counts of a theta graph Θ(2,2,2k) built by theta_222k. With
/// paths S1 = u x1 v, S2 = u y1 v and S3 = u z1 .. z_{2k-1} v, n[i][a][b] is
/// the number of proper colorings of S_i from L with u colored u_colors[a]
/// and v colored v_colors[b].
struct ThetaDecomposition {
  int k = 0;
  std::vector<int> u_colors;
  std::vector<int> v_colors;
  std::array<std::vector<std::vector<WideCount>>, 3> n;

  /// Sum over (c,d) of the product of the three path counts.
  WideCount total() const;
};

/// Throws InvalidArgument unless g equals theta_222k(k) for some k >= 1.
ThetaDecomposition theta_decomposition(const Graph& g, const ListAssignment& lists);

/// Number of proper colorings of the path internal[0] .. internal[r-1] from
/// `lists` whose first vertex avoids color c and last vertex avoids color d.
/// With no internal vertices the result is 1 when c != d and 0 otherwise.
WideCount pinned_path_count(std::span<const ColorSet> internal, int c, int d);

}  // namespace chromacount
