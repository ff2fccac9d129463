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

#include "chromacount/enumeration.hpp"

#include <algorithm>

#include "chromacount/errors.hpp"

namespace chromacount {

namespace {

void check_universe(int n, int m) {
  if (m < 1) throw InvalidArgument("list size m must be at least 1");
  if (static_cast<long>(m) * n > kColorUniverse) {
    throw InvalidArgument("color universe overflow: m*n = " + std::to_string(m * n) + " > 128");
  }
}

// Largest graph for which connected vertex sets are listed by scanning masks.
constexpr int kMaxClassEnumerationOrder = 22;

bool connected_subset(const Graph& g, VertexMask set) {
  VertexMask seen = set & (~set + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    next &= set;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == set;
}

}  // namespace

RestrictedGrowthEnumerator::RestrictedGrowthEnumerator(int n, int m) : n_(n), m_(m) {
  check_universe(n, m);
}

RestrictedGrowthEnumerator::Unit RestrictedGrowthEnumerator::root() const {
  return Unit{{color_range(0, m_)}, m_};
}

std::vector<RestrictedGrowthEnumerator::Unit> RestrictedGrowthEnumerator::split(int depth) const {
  depth = std::clamp(depth, 1, n_);
  std::vector<Unit> out{root()};
  for (int v = 1; v < depth; ++v) {
    std::vector<Unit> next;
    for (const Unit& u : out) {
      for (int fresh = 0; fresh <= m_; ++fresh) {
        const int old = m_ - fresh;
        if (old > u.used) continue;
        // Subsets of size `old` from 0..used-1 in lexicographic order.
        std::vector<int> pick(static_cast<std::size_t>(old));
        for (int i = 0; i < old; ++i) pick[i] = i;
        for (;;) {
          ColorSet s = color_range(u.used, fresh);
          for (int c : pick) s |= color_bit(c);
          Unit w = u;
          w.lists.push_back(s);
          w.used = u.used + fresh;
          next.push_back(std::move(w));
          int i = old - 1;
          while (i >= 0 && pick[i] == u.used - old + i) --i;
          if (i < 0) break;
          ++pick[i];
          for (int j = i + 1; j < old; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

void enumerate_canonical_assignments(const Graph& g, int m,
                                     const std::function<bool(const ListAssignment&)>& visit) {
  const RestrictedGrowthEnumerator e(g.order(), m);
  e.run(e.root(), [&](std::span<const ColorSet> lists) {
    return visit(ListAssignment(std::vector<ColorSet>(lists.begin(), lists.end())));
  });
}

ClassMultisetEnumerator::ClassMultisetEnumerator(const Graph& g, int m, bool full_coverage)
    : n_(g.order()), m_(m), full_coverage_(full_coverage) {
  check_universe(n_, m_);
  if (n_ > kMaxClassEnumerationOrder) {
    throw InvalidArgument("class enumeration supports at most " +
                          std::to_string(kMaxClassEnumerationOrder) + " vertices");
  }
  const VertexMask limit = VertexMask{1} << n_;
  for (VertexMask set = 1; set < limit; ++set) {
    if (std::popcount(set) >= 2 && connected_subset(g, set)) classes_.push_back(set);
  }
  std::sort(classes_.begin(), classes_.end(), [](VertexMask a, VertexMask b) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    const int sa = std::popcount(a), sb = std::popcount(b);
    if (sa != sb) return sa > sb;
    return a < b;
  });
  for (VertexMask c : classes_) lowest_.push_back(std::countr_zero(c));
}

std::vector<ClassMultisetEnumerator::Unit> ClassMultisetEnumerator::split(int depth) const {
  depth = std::clamp(depth, 0, static_cast<int>(classes_.size()));
  std::vector<Unit> out;
  Unit prefix;
  std::vector<int> cap(static_cast<std::size_t>(n_), m_);
  auto rec = [&](auto&& self, int t) -> void {
    if (t == depth) {
      out.push_back(prefix);
      return;
    }
    int top = m_;
    for (VertexMask s = classes_[t]; s != 0; s &= s - 1) top = std::min(top, cap[std::countr_zero(s)]);
    for (int k = top; k >= 0; --k) {
      for (VertexMask s = classes_[t]; s != 0; s &= s - 1) cap[std::countr_zero(s)] -= k;
      prefix.push_back(k);
      self(self, t + 1);
      prefix.pop_back();
      for (VertexMask s = classes_[t]; s != 0; s &= s - 1) cap[std::countr_zero(s)] += k;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace chromacount
