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

#include <string>

#include <json.hpp>

#include "chromacount/dp_color.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_assignment.hpp"
#include "chromacount/list_search.hpp"
#include "chromacount/wide_count.hpp"

namespace chromacount {

inline constexpr const char* kToolVersion = "0.1.0";

/// JSON encodings shared by the CLI and the reproduce report. Counts are
/// decimal strings; wall times appear only when `timings` is set.
nlohmann::json to_json(const WideCount& w);
nlohmann::json to_json(const ListAssignment& lists);
nlohmann::json to_json(const Cover& cover);
nlohmann::json to_json(const SearchStats& stats, bool timings);
nlohmann::json to_json(const SearchReport& r, bool timings = false);
nlohmann::json to_json(const DpReport& r, bool timings = false);
nlohmann::json to_json(const NuTauReport& r, bool timings = false);
nlohmann::json to_json(const EccVerdict& v);
nlohmann::json to_json(const BipartiteClassification& c);
nlohmann::json to_json(const LemmaReport& r);
nlohmann::json to_json(const TrialSummary& s);

/// "[lo, hi]", or the value alone when lo = hi.
std::string interval_text(const WideCount& lo, const WideCount& hi);

}  // namespace chromacount
