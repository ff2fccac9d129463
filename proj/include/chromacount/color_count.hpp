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

#include <functional>
#include <span>
#include <vector>

#include "chromacount/family.hpp"
#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"
#include "chromacount/wide_count.hpp"

namespace chromacount {

/// `reached_cap` means counting stopped early and `value` (>= cap) is only a
/// lower bound on the true count.
struct CappedCount {
  WideCount value;
  bool reached_cap = false;
};

/// Counts proper list colorings of a fixed graph by backtracking in a fixed
/// elimination order: largest degree first, ties by vertex index. Once the
/// remaining vertices are pairwise non-adjacent, their contribution is the
/// product of their residual list sizes.
///
/// Construction precomputes the order; count() is const and reentrant, so one
/// counter can serve many list assignments and many threads.
class ListColoringCounter {
 public:
  explicit ListColoringCounter(const Graph& g);

  const Graph& graph() const { return graph_; }
  const std::vector<int>& elimination_order() const { return order_; }

  WideCount count(std::span<const ColorSet> lists) const;
  CappedCount count(std::span<const ColorSet> lists, WideCount cap) const;
  bool colorable(std::span<const ColorSet> lists) const;

  /// Visits every proper coloring (indexed by vertex). Return false from the
  /// visitor to stop.
  void for_each(std::span<const ColorSet> lists,
                const std::function<bool(std::span<const int>)>& visit) const;

 private:
  template <bool kCapped>
  CappedCount run(std::span<const ColorSet> lists, WideCount cap) const;
  template <bool kCapped>
  CappedCount descend(int d, ColorSet* residual, const WideCount& cap) const;
  void check_lists(std::span<const ColorSet> lists) const;

  Graph graph_;
  std::vector<int> order_;
  /// earlier_[d] holds the positions (< d) of order_[d]'s neighbors.
  std::vector<std::vector<int>> earlier_;
  /// later_[d] holds the positions (> d) of order_[d]'s neighbors.
  std::vector<std::vector<int>> later_;
  /// order_[independent_from_..] is an independent set.
  int independent_from_ = 0;
};

/// P(G,L).
WideCount count_list_colorings(const Graph& g, const ListAssignment& lists);
/// P(G,L), stopping once `cap` colorings have been found.
CappedCount count_list_colorings(const Graph& g, const ListAssignment& lists, WideCount cap);

/// P(G,m) for 0 <= m <= 128, as the list count with constant lists {0..m-1}.
WideCount count_proper_colorings(const Graph& g, int m);

/// Chromatic polynomial value from a closed formula. Supported: complete
/// graphs, cycles, trees (any spec building a tree), K_{2,n}, Θ(2,2,2k), and
/// K_1 joined with a supported family. Throws UnsupportedFamily otherwise.
WideCount closed_form(const FamilySpec& family, int m);

}  // namespace chromacount
