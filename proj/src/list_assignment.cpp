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

#include "chromacount/list_assignment.hpp"

#include <array>
#include <charconv>

#include "chromacount/errors.hpp"

namespace chromacount {

std::vector<int> colors_of(ColorSet s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(lowest_color(s));
    s &= s - 1;
  }
  return out;
}

ColorSet make_color_set(std::span<const int> colors) {
  ColorSet s = 0;
  for (int c : colors) {
    if (c < 0 || c >= kColorUniverse) {
      throw InvalidArgument("color " + std::to_string(c) + " outside 0..127");
    }
    s |= color_bit(c);
  }
  return s;
}

ListAssignment::ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {
  if (lists_.empty()) throw InvalidArgument("list assignment for zero vertices");
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    if (lists_[v] == 0) throw InvalidArgument("empty list at vertex " + std::to_string(v));
  }
}

ListAssignment ListAssignment::from_lists(const std::vector<std::vector<int>>& lists) {
  std::vector<ColorSet> sets;
  sets.reserve(lists.size());
  for (const auto& l : lists) sets.push_back(make_color_set(l));
  return ListAssignment(std::move(sets));
}

ListAssignment ListAssignment::constant(int n, int m) {
  if (m < 1 || m > kColorUniverse) throw InvalidArgument("list size outside 1..128");
  return ListAssignment(std::vector<ColorSet>(static_cast<std::size_t>(n), color_range(0, m)));
}

bool ListAssignment::is_m_assignment(int m) const {
  for (ColorSet s : lists_) {
    if (color_count(s) != m) return false;
  }
  return true;
}

std::optional<int> ListAssignment::uniform_size() const {
  const int m = color_count(lists_.front());
  return is_m_assignment(m) ? std::optional<int>(m) : std::nullopt;
}

ColorSet ListAssignment::all_colors() const {
  ColorSet all = 0;
  for (ColorSet s : lists_) all |= s;
  return all;
}

ListAssignment ListAssignment::renamed(std::span<const int> sigma) const {
  std::vector<ColorSet> out;
  out.reserve(lists_.size());
  for (ColorSet s : lists_) {
    ColorSet r = 0;
    for (int c : colors_of(s)) {
      if (static_cast<std::size_t>(c) >= sigma.size()) throw InvalidArgument("permutation too short");
      r |= color_bit(sigma[c]);
    }
    out.push_back(r);
  }
  return ListAssignment(std::move(out));
}

ListAssignment ListAssignment::canonicalized() const {
  std::array<int, kColorUniverse> sigma;
  sigma.fill(-1);
  int next = 0;
  for (ColorSet s : lists_) {
    for (int c : colors_of(s)) {
      if (sigma[c] < 0) sigma[c] = next++;
    }
  }
  for (int& x : sigma) {
    if (x < 0) x = next;  // unused colors; never looked up
  }
  return renamed(sigma);
}

std::string ListAssignment::to_text() const {
  std::string out;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    out += "v" + std::to_string(v) + ": {";
    bool first = true;
    for (int c : colors_of(lists_[v])) {
      if (!first) out += ',';
      out += std::to_string(c);
      first = false;
    }
    out += "}\n";
  }
  return out;
}

ListAssignment ListAssignment::parse(std::string_view text) {
  std::vector<ColorSet> lists;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  };
  auto expect = [&](char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto read_int = [&] {
    skip_spaces();
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer", pos);
    pos = static_cast<std::size_t>(end - text.data());
    return value;
  };
  while (true) {
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == ' ' || text[pos] == '\r')) ++pos;
    if (pos >= text.size()) break;
    expect('v');
    const std::size_t at = pos;
    if (read_int() != static_cast<int>(lists.size())) throw ParseError("vertices out of order", at);
    expect(':');
    expect('{');
    ColorSet s = 0;
    skip_spaces();
    if (pos < text.size() && text[pos] != '}') {
      for (;;) {
        const std::size_t cat = pos;
        const int c = read_int();
        if (c < 0 || c >= kColorUniverse) throw ParseError("color outside 0..127", cat);
        s |= color_bit(c);
        skip_spaces();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        break;
      }
    }
    expect('}');
    if (s == 0) throw ParseError("empty list", pos);
    lists.push_back(s);
  }
  if (lists.empty()) throw ParseError("no lists", 0);
  return ListAssignment(std::move(lists));
}

}  // namespace chromacount
