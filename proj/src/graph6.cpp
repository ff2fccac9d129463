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

#include "chromacount/graph6.hpp"

#include "chromacount/errors.hpp"

namespace chromacount {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

}  // namespace

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("graph6: missing size byte", pos);
  const int first = static_cast<unsigned char>(text[pos]);
  if (first == 126) throw ParseError("graph6: multi-byte size form exceeds the 31-vertex limit", pos);
  if (first < 63 || first > 126) throw ParseError("graph6: invalid size byte", pos);
  const int n = first - 63;
  if (n == 0) throw ParseError("graph6: empty graph is not supported", pos);
  if (n > kMaxVertices) {
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds limit " +
                         std::to_string(kMaxVertices),
                     pos);
  }
  ++pos;

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() > pos + body) throw ParseError("graph6: trailing bytes", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const int byte = static_cast<unsigned char>(text[at]);
      if (byte < 63 || byte > 126) throw ParseError("graph6: invalid data byte", at);
      if (((byte - 63) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (std::size_t at = pos; at < pos + body; ++at) {
    const int byte = static_cast<unsigned char>(text[at]);
    if (byte < 63 || byte > 126) throw ParseError("graph6: invalid data byte", at);
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[pos + body - 1]) - 63;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", pos + body - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = fill = 0;
      }
    }
  }
  if (fill != 0) out.push_back(static_cast<char>(63 + (acc << (6 - fill))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

}  // namespace chromacount
