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

// Long exhaustive runs. Labelled "slow" in ctest.
#include <gtest/gtest.h>

#include "chromacount/color_count.hpp"
#include "chromacount/family.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_search.hpp"

namespace chromacount {
namespace {

TEST(Slow, ThetaListColorFunctionAtThree) {
  const Graph g = build_graph("theta:2,2,4");
  const SearchReport r = list_color_function(g, 3, ExactMode{});
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.hi, WideCount(102));
  EXPECT_EQ(r.hi, count_proper_colorings(g, 3));
}

TEST(Slow, K224IsThreeChoosable) {
  const ChoosabilityResult r = choosability(build_graph("multipartite:2,2,4"), 3, 1'000'000'000);
  EXPECT_TRUE(r.choosable);
  EXPECT_FALSE(r.decided_by_bound);
}

TEST(Slow, EveryLemmaOnAThousandInstances) {
  for (const auto& id : lemma_ids()) {
    const TrialSummary s = run_trials(id, id == "P4.4" ? 50 : 1000, 2026);
    EXPECT_TRUE(s.ok()) << id << ": " << s.passed << "/" << s.trials;
  }
}

}  // namespace
}  // namespace chromacount
