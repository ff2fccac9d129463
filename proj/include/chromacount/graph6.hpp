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

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "chromacount/graph.hpp"

namespace chromacount {

/// Standard graph6 encoding, restricted to the single-byte size form (n <= 31
/// here). An optional ">>graph6<<" header is accepted on input.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// One graph per line; blank lines are skipped and trailing CR/LF stripped.
/// Parse errors report the 1-based line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace chromacount
