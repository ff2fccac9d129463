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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"

namespace chromacount {

/// Input to a validator. Fields not used by a lemma are ignored.
struct LemmaInstance {
  Graph graph{1};
  int m = 0;
  std::optional<ListAssignment> lists;
  /// The edge uv (L3.7) or wz (L3.8), in the lemma's orientation.
  std::optional<Edge> edge;
  /// Vertex the fresh pendant hangs from (L2.3).
  int attach = 0;
  /// Heuristic budget and seed (P4.4).
  std::uint64_t budget = 2'000;
  std::uint64_t seed = 1;
};

struct LemmaReport {
  std::string lemma;
  std::string instance;
  std::string lhs;
  std::string relation;
  std::string rhs;
  bool holds = false;
  /// Extra detail; for P4.4 this says "no violation found" rather than a proof.
  std::string note;
  /// Instance payload when the claim fails.
  std::optional<std::string> counterexample;
};

/// Validator ids in suite order.
const std::vector<std::string>& lemma_ids();

/// Checks one instance with exact arithmetic. Throws PreconditionError when
/// the instance violates the lemma's hypotheses and InvalidArgument for an
/// unknown id.
LemmaReport validate_lemma(std::string_view id, const LemmaInstance& instance);

/// Draws an admissible instance. Lists are uniform from a pool of m+3 colors
/// unless the lemma fixes their structure.
LemmaInstance random_instance(std::string_view id, std::mt19937_64& rng);

std::string describe(const LemmaInstance& instance);

struct TrialSummary {
  std::string lemma;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;
  /// Up to three failing reports.
  std::vector<LemmaReport> failures;

  bool ok() const { return passed == trials; }
};

TrialSummary run_trials(std::string_view id, std::uint64_t trials, std::uint64_t seed);

/// Random connected graph on n vertices: a random tree plus each remaining
/// pair with probability p_percent/100.
Graph random_connected_graph(int n, int p_percent, std::mt19937_64& rng);
Graph random_connected_bipartite_graph(int n, int p_percent, std::mt19937_64& rng);
/// Lists of the given sizes, each drawn uniformly from colors 0..pool-1.
ListAssignment random_lists(std::span<const int> sizes, int pool, std::mt19937_64& rng);
ListAssignment random_m_assignment(int n, int m, int pool, std::mt19937_64& rng);

}  // namespace chromacount
