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
#include <string>
#include <variant>
#include <vector>

#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"
#include "chromacount/search_report.hpp"
#include "chromacount/structure.hpp"
#include "chromacount/wide_count.hpp"

namespace chromacount {

/// Result of minimizing P(G,L) over m-assignments L.
struct SearchReport {
  WideCount lo;
  WideCount hi;
  /// An assignment with P(G,witness) = hi.
  std::optional<ListAssignment> witness;
  SearchStatus status = SearchStatus::Exact;
  SearchStats stats;

  bool exact() const { return status == SearchStatus::Exact; }
};

enum class Enumeration {
  /// Multisets of connected color classes (ClassMultisetEnumerator).
  ConnectedClasses,
  /// Restricted-growth lists (RestrictedGrowthEnumerator).
  RestrictedGrowth,
};

struct ExactMode {
  std::uint64_t budget = kDefaultExactBudget;
  int threads = 1;
  Enumeration enumeration = Enumeration::ConnectedClasses;
};

struct HeuristicMode {
  std::uint64_t budget = 100'000;
  std::uint64_t seed = 1;
};

using SearchMode = std::variant<ExactMode, HeuristicMode>;

/// P_l(G,m). Exact mode evaluates every enumerated assignment with the
/// incumbent as counting cap; when the budget runs out the report holds the
/// interval [0, incumbent] with status BudgetExhausted. Heuristic mode
/// returns an upper bound with status UpperBoundOnly.
SearchReport list_color_function(const Graph& g, int m, const SearchMode& mode);

/// Assignments tried first by the heuristic: constant lists, plus known
/// low-count assignments when g is isomorphic to one of the witnessed
/// families (Θ(2,2,2k) or a pendant extension of it at m=2, K_{2,2,4} at m=3).
std::vector<ListAssignment> structured_candidates(const Graph& g, int m);

struct ChoosabilityResult {
  bool choosable = false;
  /// An m-assignment without proper colorings when not choosable.
  std::optional<ListAssignment> witness;
  std::uint64_t assignments_visited = 0;
  /// Set when the answer follows from m < χ(G) or m > degeneracy(G).
  bool decided_by_bound = false;
};

/// Throws BudgetExhausted when the search needs more than `budget` leaves.
ChoosabilityResult choosability(const Graph& g, int m, std::uint64_t budget = kDefaultExactBudget);
bool is_m_choosable(const Graph& g, int m, std::uint64_t budget = kDefaultExactBudget);
int list_chromatic_number(const Graph& g, std::uint64_t budget = kDefaultExactBudget);

enum class PointKind {
  /// Exact P_l computed.
  Exact,
  /// Only an upper bound on P_l; equality with P is undecided unless hi < P.
  Heuristic,
};

struct NuTauPoint {
  int m = 0;
  WideCount chromatic;  // P(G,m)
  SearchReport list;    // P_l(G,m)
  PointKind kind = PointKind::Exact;

  /// P_l(G,m) = P(G,m) is established by exact search.
  bool certified_equal() const { return kind == PointKind::Exact && list.hi == chromatic; }
  /// P_l(G,m) < P(G,m) is established by a witness.
  bool certified_gap() const { return list.hi < chromatic; }
};

struct NuTauReport {
  int chi = 0;
  int cap = 0;
  int nu_lo = 0, nu_hi = 0;
  int tau_lo = 0, tau_hi = 0;
  /// ν and τ follow from chordality (|E| <= 3) rather than search.
  bool certified_by_theorem = false;
  /// The upper ends rely on τ <= |E|-1 rather than on computed points.
  bool nu_hi_from_theorem = false;
  bool tau_hi_from_theorem = false;
  std::vector<NuTauPoint> points;
};

struct NuTauOptions {
  std::uint64_t budget = 200'000;
  std::uint64_t heuristic_budget = 2'000;
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Requires g connected.
NuTauReport nu_tau(const Graph& g, const NuTauOptions& options = {});

enum class TriState { True, False, Unknown };
std::string to_string(TriState t);

struct EccVerdict {
  TriState value = TriState::Unknown;
  int chi = 0;
  /// Counterexample for False.
  std::optional<ListAssignment> witness;
  std::optional<WideCount> witness_count;
  std::optional<int> witness_m;
  /// Leaves visited by the exact searches backing a True answer.
  std::uint64_t assignments_visited = 0;
  std::string certificate;
};

EccVerdict is_weakly_ecc(const Graph& g, const NuTauOptions& options = {});
EccVerdict is_ecc(const Graph& g, const NuTauOptions& options = {});

struct BipartiteClassification {
  bool ecc = false;
  CoreClass core;
  std::string reason;
  /// For cores Θ(2,2,2k) with k >= 2: the pendant extension of the theta
  /// witness and its count.
  std::optional<ListAssignment> witness;
  std::optional<WideCount> witness_count;
};

/// Requires g connected and bipartite.
BipartiteClassification classify_bipartite(const Graph& g);

}  // namespace chromacount
