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

#include <cstdint>
#include <optional>
#include <vector>

#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"
#include "chromacount/search_report.hpp"
#include "chromacount/wide_count.hpp"

namespace chromacount {

inline constexpr int kMaxFold = 64;

/// An m-fold cover of a graph. For the i-th edge (u,v), u < v, of
/// Graph::edges(), cover vertex (u,c) conflicts with (v, perms[i][c]) when
/// bit c of present[i] is set. An empty `present` means every matching is
/// perfect.
struct Cover {
  int m = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> perms;
  std::vector<std::uint64_t> present;

  bool is_full() const;
  /// Throws InvalidArgument when a permutation is not a bijection of
  /// {0..m-1} or the edge set does not match g.
  void validate(const Graph& g) const;

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Every edge carries the identity permutation.
Cover identity_cover(const Graph& g, int m);

/// Number of independent transversals.
WideCount count_dp_colorings(const Graph& g, const Cover& cover);

/// As above, stopping once `cap` transversals are found.
struct CappedDpCount {
  WideCount value;
  bool reached_cap = false;
};
CappedDpCount count_dp_colorings(const Graph& g, const Cover& cover, WideCount cap);

struct DpReport {
  WideCount lo;
  WideCount hi;
  std::optional<Cover> witness;
  SearchStatus status = SearchStatus::Exact;
  SearchStats stats;
  /// Number of covers in the normalized search space, (m!)^(|E|-n+c).
  WideCount space;

  bool exact() const { return status == SearchStatus::Exact; }
};

struct DpOptions {
  std::uint64_t budget = kDefaultExactBudget;
  int threads = 1;
};

/// P_DP(G,m): minimum transversal count over full m-fold covers, with
/// identity permutations on a BFS spanning forest.
DpReport dp_color_function(const Graph& g, int m, const DpOptions& options = {});

/// ((m-1)^(2k+4) - (m-1)^(2k) - 2(m-1)^2 + 2) / m for k >= 2, m >= 2.
WideCount theta_dp_formula(int k, int m);

/// Cover H_L of a uniform m-assignment: fiber index i of v stands for the
/// i-th smallest color of L(v), and the matching on edge uv joins equal
/// colors. Unmatched indices are paired by the lowest-available rule.
Cover cover_from_list_assignment(const Graph& g, const ListAssignment& lists);

/// Makes every matching perfect.
Cover complete_cover(const Cover& partial);

}  // namespace chromacount
