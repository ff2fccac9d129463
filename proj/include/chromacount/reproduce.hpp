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
#include <string>
#include <vector>

#include <json.hpp>

namespace chromacount {

struct ReproduceOptions {
  std::uint64_t seed = 42;
  int threads = 1;
  /// graph6 file of connected bipartite graphs for the T1.7/T2.1 rows.
  std::string corpus = CHROMACOUNT_DEFAULT_CORPUS;
  /// Anchors to run; empty runs all.
  std::vector<std::string> only;
  std::uint64_t lemma_trials = 1000;
  std::uint64_t probe_budget = 100'000;
};

struct ReproduceRow {
  std::string anchor;
  std::string claim;
  bool pass = false;
  std::string detail;
  nlohmann::json data;
  double seconds = 0;
};

/// Anchors in report order.
const std::vector<std::string>& reproduce_anchors();

/// Runs the selected rows. Throws InvalidArgument for an unknown anchor in
/// `only` and Error when the corpus cannot be read.
std::vector<ReproduceRow> reproduce_paper(const ReproduceOptions& options);

nlohmann::json reproduce_json(const std::vector<ReproduceRow>& rows, const ReproduceOptions& options,
                              bool timings);
std::string reproduce_table(const std::vector<ReproduceRow>& rows, bool timings);

}  // namespace chromacount
