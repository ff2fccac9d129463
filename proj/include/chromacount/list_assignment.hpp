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

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromacount/wide_count.hpp"

namespace chromacount {

inline constexpr int kColorUniverse = 128;

/// Bit c set means color c is available. Colors are 0..127.
using ColorSet = u128;

inline int color_count(ColorSet s) {
  return std::popcount(static_cast<std::uint64_t>(s)) +
         std::popcount(static_cast<std::uint64_t>(s >> 64));
}
inline int lowest_color(ColorSet s) {
  const auto lo = static_cast<std::uint64_t>(s);
  return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(static_cast<std::uint64_t>(s >> 64));
}
inline constexpr ColorSet color_bit(int c) { return ColorSet{1} << c; }
/// {first, ..., first+count-1}
inline constexpr ColorSet color_range(int first, int count) {
  return count >= 128 ? ~ColorSet{0} : (((ColorSet{1} << count) - 1) << first);
}
std::vector<int> colors_of(ColorSet s);
ColorSet make_color_set(std::span<const int> colors);

/// One nonempty color list per vertex.
class ListAssignment {
 public:
  explicit ListAssignment(std::vector<ColorSet> lists);
  static ListAssignment from_lists(const std::vector<std::vector<int>>& lists);
  /// Every vertex gets {0, ..., m-1}.
  static ListAssignment constant(int n, int m);

  int order() const { return static_cast<int>(lists_.size()); }
  ColorSet operator[](int v) const { return lists_.at(static_cast<std::size_t>(v)); }
  std::span<const ColorSet> lists() const { return lists_; }
  int list_size(int v) const { return color_count((*this)[v]); }
  /// All lists have exactly m colors.
  bool is_m_assignment(int m) const;
  /// The common list size, if all lists have the same size.
  std::optional<int> uniform_size() const;
  ColorSet all_colors() const;

  /// Applies a color permutation; `sigma` maps color c to sigma[c].
  ListAssignment renamed(std::span<const int> sigma) const;
  /// Renames colors in order of first appearance (vertex 0 upward, each list
  /// in increasing color order), producing the restricted-growth form.
  ListAssignment canonicalized() const;

  /// Witness text format: one line per vertex, "v<i>: {c1,c2,...}".
  std::string to_text() const;
  static ListAssignment parse(std::string_view text);

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorSet> lists_;
};

}  // namespace chromacount
