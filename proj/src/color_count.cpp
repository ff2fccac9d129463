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

#include "chromacount/color_count.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "chromacount/errors.hpp"

namespace chromacount {

namespace {

VertexMask maximum_independent_set(const Graph& g, VertexMask candidates) {
  if (candidates == 0) return 0;
  int best_v = -1, best_deg = -1;
  for (VertexMask c = candidates; c != 0; c &= c - 1) {
    const int v = std::countr_zero(c);
    const int deg = std::popcount(g.neighbors(v) & candidates);
    if (deg > best_deg) {
      best_deg = deg;
      best_v = v;
    }
  }
  const VertexMask bit = VertexMask{1} << best_v;
  if (best_deg <= 1) {
    // Vertices of degree <= 1 in the remaining graph can always be taken.
    return bit | maximum_independent_set(g, candidates & ~bit & ~g.neighbors(best_v));
  }
  const VertexMask with = bit | maximum_independent_set(g, candidates & ~bit & ~g.neighbors(best_v));
  const VertexMask without = maximum_independent_set(g, candidates & ~bit);
  return std::popcount(with) >= std::popcount(without) ? with : without;
}

}  // namespace

ListColoringCounter::ListColoringCounter(const Graph& g) : graph_(g) {
  const int n = g.order();
  const VertexMask tail = maximum_independent_set(g, g.all_vertices());
  // Head: most-constrained first, each next vertex maximizing neighbors already placed.
  VertexMask placed = 0;
  VertexMask head = g.all_vertices() & ~tail;
  while (head != 0) {
    int best = -1, best_in = -1, best_deg = -1;
    for (VertexMask h = head; h != 0; h &= h - 1) {
      const int v = std::countr_zero(h);
      const int in = std::popcount(g.neighbors(v) & placed);
      if (in > best_in || (in == best_in && g.degree(v) > best_deg)) {
        best = v;
        best_in = in;
        best_deg = g.degree(v);
      }
    }
    order_.push_back(best);
    placed |= VertexMask{1} << best;
    head &= ~(VertexMask{1} << best);
  }
  independent_from_ = static_cast<int>(order_.size());
  for (VertexMask t = tail; t != 0; t &= t - 1) order_.push_back(std::countr_zero(t));

  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) pos[order_[d]] = d;
  earlier_.resize(static_cast<std::size_t>(n));
  later_.resize(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) {
    for (VertexMask nb = g.neighbors(order_[d]); nb != 0; nb &= nb - 1) {
      const int p = pos[std::countr_zero(nb)];
      (p < d ? earlier_ : later_)[d].push_back(p);
    }
  }
}

void ListColoringCounter::check_lists(std::span<const ColorSet> lists) const {
  if (static_cast<int>(lists.size()) != graph_.order()) {
    throw InvalidArgument("list assignment covers " + std::to_string(lists.size()) +
                          " vertices, graph has " + std::to_string(graph_.order()));
  }
}

// Colors available at a head vertex are interchangeable when every later
// vertex's residual list holds both or neither; one branch per such class,
// weighted by its size.
template <bool kCapped>
CappedCount ListColoringCounter::descend(int d, ColorSet* residual, const WideCount& cap) const {
  const int n = graph_.order();
  if (d == independent_from_) {
    WideCount prod{1};
    for (int j = d; j < n; ++j) {
      const int k = color_count(residual[j]);
      if (k == 0) return {WideCount{0}, false};
      prod *= WideCount{static_cast<std::uint64_t>(k)};
    }
    return {prod, kCapped && prod >= cap};
  }
  const ColorSet avail = residual[d];
  if (avail == 0) return {WideCount{0}, false};

  ColorSet classes[kColorUniverse];
  int count = 1;
  classes[0] = avail;
  const int singletons = color_count(avail);
  for (int j = d + 1; j < n && count < singletons; ++j) {
    const ColorSet r = residual[j];
    for (int i = count - 1; i >= 0; --i) {
      const ColorSet in = classes[i] & r;
      if (in != 0 && in != classes[i]) {
        classes[count++] = classes[i] & ~r;
        classes[i] = in;
      }
    }
  }

  const std::vector<int>& later = later_[d];
  ColorSet saved[kMaxVertices];
  WideCount total{0};
  for (int i = 0; i < count; ++i) {
    const ColorSet c = classes[i] & (~classes[i] + 1);
    const auto weight = static_cast<std::uint64_t>(color_count(classes[i]));
    for (std::size_t t = 0; t < later.size(); ++t) {
      saved[t] = residual[later[t]];
      residual[later[t]] &= ~c;
    }
    WideCount sub_cap;
    if constexpr (kCapped) {
      const u128 left = cap.value() - total.value();
      sub_cap = WideCount::from_u128((left + weight - 1) / weight);
    }
    const CappedCount sub = descend<kCapped>(d + 1, residual, sub_cap);
    for (std::size_t t = 0; t < later.size(); ++t) residual[later[t]] = saved[t];
    total += sub.value * WideCount{weight};
    if (kCapped && (sub.reached_cap || total >= cap)) return {total, true};
  }
  return {total, false};
}

template <bool kCapped>
CappedCount ListColoringCounter::run(std::span<const ColorSet> lists, WideCount cap) const {
  check_lists(lists);
  if (kCapped && cap == WideCount{0}) return {WideCount{0}, true};
  ColorSet residual[kMaxVertices];
  for (int d = 0; d < graph_.order(); ++d) residual[d] = lists[static_cast<std::size_t>(order_[d])];
  if (kCapped && cap.overflowed()) {
    const CappedCount r = descend<false>(0, residual, cap);
    return {r.value, r.value >= cap};
  }
  return descend<kCapped>(0, residual, cap);
}

WideCount ListColoringCounter::count(std::span<const ColorSet> lists) const {
  return run<false>(lists, WideCount{0}).value;
}

CappedCount ListColoringCounter::count(std::span<const ColorSet> lists, WideCount cap) const {
  return run<true>(lists, cap);
}

bool ListColoringCounter::colorable(std::span<const ColorSet> lists) const {
  return count(lists, WideCount{1}).value >= WideCount{1};
}

void ListColoringCounter::for_each(std::span<const ColorSet> lists,
                                   const std::function<bool(std::span<const int>)>& visit) const {
  check_lists(lists);
  const int n = graph_.order();
  std::vector<int> chosen(static_cast<std::size_t>(n));
  std::vector<ColorSet> avail(static_cast<std::size_t>(n));
  std::vector<int> coloring(static_cast<std::size_t>(n));
  auto residual = [&](int d) {
    ColorSet a = lists[static_cast<std::size_t>(order_[d])];
    for (int j : earlier_[d]) a &= ~color_bit(chosen[j]);
    return a;
  };
  int d = 0;
  avail[0] = residual(0);
  while (d >= 0) {
    if (avail[d] == 0) {
      --d;
      continue;
    }
    chosen[d] = lowest_color(avail[d]);
    avail[d] &= avail[d] - 1;
    if (d + 1 == n) {
      for (int j = 0; j < n; ++j) coloring[order_[j]] = chosen[j];
      if (!visit(coloring)) return;
    } else {
      ++d;
      avail[d] = residual(d);
    }
  }
}

WideCount count_list_colorings(const Graph& g, const ListAssignment& lists) {
  return ListColoringCounter(g).count(lists.lists());
}

CappedCount count_list_colorings(const Graph& g, const ListAssignment& lists, WideCount cap) {
  return ListColoringCounter(g).count(lists.lists(), cap);
}

WideCount count_proper_colorings(const Graph& g, int m) {
  if (m < 0 || m > kColorUniverse) throw InvalidArgument("m must lie in 0..128");
  if (m == 0) return WideCount{0};
  return count_list_colorings(g, ListAssignment::constant(g.order(), m));
}

namespace {

// Signed checked arithmetic for polynomial evaluation; nullopt on overflow.
using i128 = __int128;
using Value = std::optional<i128>;

Value add(Value a, Value b) {
  i128 r;
  if (!a || !b || __builtin_add_overflow(*a, *b, &r)) return std::nullopt;
  return r;
}
Value sub(Value a, Value b) {
  i128 r;
  if (!a || !b || __builtin_sub_overflow(*a, *b, &r)) return std::nullopt;
  return r;
}
Value mul(Value a, Value b) {
  i128 r;
  if (!a || !b || __builtin_mul_overflow(*a, *b, &r)) return std::nullopt;
  return r;
}
Value ipow(Value base, int exp) {
  Value r = i128{1};
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

bool is_k1(const FamilySpec& s) {
  if (const auto* c = std::get_if<CompleteSpec>(&s.node)) return c->n == 1;
  if (const auto* p = std::get_if<PathSpec>(&s.node)) return p->n == 1;
  return false;
}

Value eval_closed_form(const FamilySpec& family, i128 m) {
  const Value mm = m;
  const Value m1 = m - 1;
  const Value m2 = m - 2;

  if (const auto* c = std::get_if<CompleteSpec>(&family.node)) {
    Value r = i128{1};
    for (int i = 0; i < c->n; ++i) r = mul(r, Value(m - i));
    return r;
  }
  if (const auto* c = std::get_if<CycleSpec>(&family.node)) {
    const Value sign = (c->n % 2 == 0) ? i128{1} : i128{-1};
    return add(ipow(m1, c->n), mul(sign, m1));
  }
  if (const auto* b = std::get_if<BipartiteSpec>(&family.node); b && (b->left == 2 || b->right == 2)) {
    const int n = b->left == 2 ? b->right : b->left;
    return add(mul(mm, ipow(m1, n)), mul(mul(mm, m1), ipow(m2, n)));
  }
  if (const auto* t = std::get_if<ThetaSpec>(&family.node); t && t->lengths.size() == 3) {
    std::vector<int> l = t->lengths;
    std::sort(l.begin(), l.end());
    if (l[0] == 2 && l[1] == 2 && l[2] % 2 == 0) {
      const int k = l[2] / 2;
      // (m-2)^2((m-1)^{2k+1}-(m-1)) + (m-1)^2((m-1)^{2k}+(m-1))
      return add(mul(ipow(m2, 2), sub(ipow(m1, 2 * k + 1), m1)),
                 mul(ipow(m1, 2), add(ipow(m1, 2 * k), m1)));
    }
  }
  if (const auto* j = std::get_if<JoinSpec>(&family.node)) {
    if (is_k1(*j->left)) return mul(mm, eval_closed_form(*j->right, m - 1));
    if (is_k1(*j->right)) return mul(mm, eval_closed_form(*j->left, m - 1));
  }
  // Trees, however they are spelled.
  const Graph g = build(family);
  if (g.size() == g.order() - 1 && is_connected(g)) return mul(mm, ipow(m1, g.order() - 1));
  throw UnsupportedFamily("no closed form for " + to_string(family));
}

}  // namespace

WideCount closed_form(const FamilySpec& family, int m) {
  if (m < 0) throw InvalidArgument("m must be non-negative");
  const Value v = eval_closed_form(family, m);
  if (!v) return WideCount::overflow();
  if (*v < 0) throw InternalError("closed form evaluated negative for " + to_string(family));
  return WideCount::from_u128(static_cast<u128>(*v));
}

}  // namespace chromacount
