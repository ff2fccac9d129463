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

#include "chromacount/wide_count.hpp"

namespace chromacount {

enum class SearchStatus { Exact, UpperBoundOnly, BudgetExhausted };

std::string to_string(SearchStatus s);

struct SearchStats {
  std::uint64_t assignments_visited = 0;
  /// Leaf evaluations stopped by the incumbent cap.
  std::uint64_t prunes = 0;
  double wall_seconds = 0;
};

/// Default leaf budget for exact searches.
inline constexpr std::uint64_t kDefaultExactBudget = 200'000'000;

}  // namespace chromacount
