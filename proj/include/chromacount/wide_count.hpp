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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace chromacount {

using u128 = unsigned __int128;

/// Unsigned counter with 128-bit range. Arithmetic is checked: a result that
/// does not fit sets a sticky overflow flag instead of wrapping. An overflowed
/// count orders above every exact count.
class WideCount {
 public:
  constexpr WideCount() = default;
  constexpr WideCount(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)
  static constexpr WideCount from_u128(u128 v) {
    WideCount w;
    w.value_ = v;
    return w;
  }
  static constexpr WideCount overflow() {
    WideCount w;
    w.overflowed_ = true;
    return w;
  }

  constexpr bool overflowed() const { return overflowed_; }
  /// Throws InternalError when overflowed.
  u128 value() const;
  std::optional<std::uint64_t> to_u64() const;

  WideCount& operator+=(const WideCount& o);
  WideCount& operator*=(const WideCount& o);
  friend WideCount operator+(WideCount a, const WideCount& b) { return a += b; }
  friend WideCount operator*(WideCount a, const WideCount& b) { return a *= b; }

  friend constexpr bool operator==(const WideCount& a, const WideCount& b) {
    return a.overflowed_ == b.overflowed_ && (a.overflowed_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const WideCount& a, const WideCount& b) {
    if (a.overflowed_ || b.overflowed_) return a.overflowed_ <=> b.overflowed_;
    return a.value_ <=> b.value_;
  }

  /// Decimal digits, or "overflow".
  std::string to_string() const;
  /// Parses a decimal string; throws ParseError on bad digits or > 128 bits.
  static WideCount parse(const std::string& text);

 private:
  u128 value_ = 0;
  bool overflowed_ = false;
};

std::ostream& operator<<(std::ostream& os, const WideCount& w);

/// base^exp with overflow detection.
WideCount pow(WideCount base, unsigned exp);

std::string u128_to_string(u128 v);

}  // namespace chromacount
