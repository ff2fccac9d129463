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

#include "chromacount/wide_count.hpp"

#include <algorithm>

#include "chromacount/errors.hpp"

namespace chromacount {

u128 WideCount::value() const {
  if (overflowed_) throw InternalError("WideCount::value on an overflowed count");
  return value_;
}

std::optional<std::uint64_t> WideCount::to_u64() const {
  if (overflowed_ || value_ > UINT64_MAX) return std::nullopt;
  return static_cast<std::uint64_t>(value_);
}

WideCount& WideCount::operator+=(const WideCount& o) {
  if (overflowed_ || o.overflowed_ || __builtin_add_overflow(value_, o.value_, &value_)) {
    *this = overflow();
  }
  return *this;
}

WideCount& WideCount::operator*=(const WideCount& o) {
  if (overflowed_ || o.overflowed_) {
    *this = overflow();
  } else if (__builtin_mul_overflow(value_, o.value_, &value_)) {
    *this = overflow();
  }
  return *this;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string WideCount::to_string() const {
  return overflowed_ ? std::string("overflow") : u128_to_string(value_);
}

WideCount WideCount::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty count", 0);
  u128 v = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw ParseError("bad digit in count", i);
    if (__builtin_mul_overflow(v, u128{10}, &v) ||
        __builtin_add_overflow(v, u128(c - '0'), &v)) {
      throw ParseError("count exceeds 128 bits", i);
    }
  }
  return from_u128(v);
}

std::ostream& operator<<(std::ostream& os, const WideCount& w) { return os << w.to_string(); }

WideCount pow(WideCount base, unsigned exp) {
  WideCount r{1};
  while (exp != 0) {
    if (exp & 1u) r *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return r;
}

}  // namespace chromacount
