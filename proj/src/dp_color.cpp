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

#include "chromacount/dp_color.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromacount/color_count.hpp"
#include "chromacount/detail/parallel.hpp"
#include "chromacount/errors.hpp"

namespace chromacount {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t fold_mask(int m) { return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1; }

void check_fold(int m) {
  if (m < 1 || m > kMaxFold) throw InvalidArgument("fold size must be in 1..64");
}

/// Backtracking transversal counter over vertices 0..n-1.
class DpCounter {
 public:
  DpCounter(const Graph& g, const Cover& cover) : n_(g.order()), m_(cover.m) {
    cover.validate(g);
    // links_[v]: constraints from an earlier neighbor u onto v.
    links_.resize(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cover.edges.size(); ++i) {
      const auto [u, v] = cover.edges[i];
      const std::uint64_t present = cover.present.empty() ? fold_mask(m_) : cover.present[i];
      Link l;
      l.other = u;
      l.forbid.assign(static_cast<std::size_t>(m_), 0);
      for (int c = 0; c < m_; ++c) {
        if (present >> c & 1) l.forbid[c] = std::uint64_t{1} << cover.perms[i][c];
      }
      links_[v].push_back(std::move(l));
    }
  }

  CappedDpCount count(WideCount cap, bool capped) {
    choice_.assign(static_cast<std::size_t>(n_), 0);
    total_ = WideCount(0);
    cap_ = cap;
    capped_ = capped;
    reached_ = false;
    if (capped_ && cap_ == WideCount(0)) return {WideCount(0), true};
    descend(0);
    return {total_, reached_};
  }

 private:
  struct Link {
    int other;
    std::vector<std::uint64_t> forbid;
  };

  std::uint64_t allowed(int v) const {
    std::uint64_t a = fold_mask(m_);
    for (const Link& l : links_[v]) a &= ~l.forbid[choice_[l.other]];
    return a;
  }

  void descend(int v) {
    std::uint64_t a = allowed(v);
    if (v == n_ - 1) {
      total_ += WideCount(static_cast<std::uint64_t>(std::popcount(a)));
      if (capped_ && total_ >= cap_) reached_ = true;
      return;
    }
    for (; a != 0 && !reached_; a &= a - 1) {
      choice_[v] = std::countr_zero(a);
      descend(v + 1);
    }
  }

  int n_;
  int m_;
  std::vector<std::vector<Link>> links_;
  std::vector<int> choice_;
  WideCount total_;
  WideCount cap_;
  bool capped_ = false;
  bool reached_ = false;
};

/// Marks the edges of a BFS spanning forest rooted at the lowest vertex of
/// each component.
std::vector<bool> spanning_forest(const Graph& g) {
  const auto edges = g.edges();
  std::vector<bool> in_tree(edges.size(), false);
  VertexMask seen = 0;
  for (int r = 0; r < g.order(); ++r) {
    if (seen >> r & 1) continue;
    seen |= VertexMask{1} << r;
    std::vector<int> queue{r};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (VertexMask s = g.neighbors(x) & ~seen; s != 0; s &= s - 1) {
        const int y = std::countr_zero(s);
        seen |= VertexMask{1} << y;
        queue.push_back(y);
        const Edge e{std::min(x, y), std::max(x, y)};
        const auto it = std::find_if(edges.begin(), edges.end(),
                                     [&](const Edge& f) { return f.u == e.u && f.v == e.v; });
        in_tree[static_cast<std::size_t>(it - edges.begin())] = true;
      }
    }
  }
  return in_tree;
}

constexpr int kMaxEnumeratedFold = 10;

}  // namespace

bool Cover::is_full() const {
  if (present.empty()) return true;
  return std::all_of(present.begin(), present.end(), [&](std::uint64_t p) { return p == fold_mask(m); });
}

void Cover::validate(const Graph& g) const {
  check_fold(m);
  const auto expected = g.edges();
  if (edges.size() != expected.size() || perms.size() != edges.size()) {
    throw InvalidArgument("cover edge set does not match the graph");
  }
  if (!present.empty() && present.size() != edges.size()) {
    throw InvalidArgument("cover matching masks do not match the edge set");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u != expected[i].u || edges[i].v != expected[i].v) {
      throw InvalidArgument("cover edge set does not match the graph");
    }
    if (perms[i].size() != static_cast<std::size_t>(m)) throw InvalidArgument("cover permutation has wrong size");
    std::uint64_t image = 0;
    for (int c : perms[i]) {
      if (c < 0 || c >= m) throw InvalidArgument("cover permutation entry out of range");
      image |= std::uint64_t{1} << c;
    }
    if (image != fold_mask(m)) throw InvalidArgument("cover permutation is not a bijection");
  }
}

Cover identity_cover(const Graph& g, int m) {
  check_fold(m);
  Cover c;
  c.m = m;
  c.edges = g.edges();
  std::vector<int> id(static_cast<std::size_t>(m));
  std::iota(id.begin(), id.end(), 0);
  c.perms.assign(c.edges.size(), id);
  return c;
}

WideCount count_dp_colorings(const Graph& g, const Cover& cover) {
  DpCounter counter(g, cover);
  return counter.count(WideCount(0), false).value;
}

CappedDpCount count_dp_colorings(const Graph& g, const Cover& cover, WideCount cap) {
  DpCounter counter(g, cover);
  return counter.count(cap, true);
}

DpReport dp_color_function(const Graph& g, int m, const DpOptions& options) {
  const auto start = Clock::now();
  check_fold(m);
  const std::vector<bool> in_tree = spanning_forest(g);
  std::vector<std::size_t> cotree;
  for (std::size_t i = 0; i < in_tree.size(); ++i) {
    if (!in_tree[i]) cotree.push_back(i);
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  if (m > kMaxEnumeratedFold && !cotree.empty()) {
    throw InvalidArgument("cover enumeration supports fold sizes up to 10");
  }
  do {
    perms.push_back(p);
  } while (!cotree.empty() && std::next_permutation(p.begin(), p.end()));

  DpReport report;
  report.space = WideCount(1);
  for (std::size_t i = 0; i < cotree.size(); ++i) report.space *= WideCount(perms.size());

  const Cover base = identity_cover(g, m);
  const WideCount constant = count_dp_colorings(g, base);
  std::mutex best_mutex;
  WideCount best = constant;
  Cover witness = base;
  std::atomic<std::uint64_t> visited{0}, prunes{0};
  std::atomic<bool> exhausted{false}, done{false};
  std::atomic<std::uint64_t> incumbent{constant.to_u64().value_or(~std::uint64_t{0})};

  // Unit i fixes the permutation of the first co-tree edge.
  const std::size_t units = cotree.empty() ? 1 : perms.size();
  detail::run_units(units, options.threads, [&](std::size_t unit) {
    Cover cover = base;
    std::vector<std::size_t> odo(cotree.size(), 0);
    if (!cotree.empty()) odo[0] = unit;
    for (;;) {
      for (std::size_t j = 0; j < cotree.size(); ++j) cover.perms[cotree[j]] = perms[odo[j]];
      if (visited.fetch_add(1, std::memory_order_relaxed) >= options.budget) {
        exhausted = true;
        return false;
      }
      const std::uint64_t inc = incumbent.load(std::memory_order_relaxed);
      const CappedDpCount r = count_dp_colorings(g, cover, WideCount(inc));
      if (r.reached_cap) {
        prunes.fetch_add(1, std::memory_order_relaxed);
      } else {
        std::lock_guard lock(best_mutex);
        if (r.value < best) {
          best = r.value;
          witness = cover;
          detail::atomic_min(incumbent, *r.value.to_u64());
        }
        if (best == WideCount(0)) {
          done = true;
          return false;
        }
      }
      // Advance co-tree edges 1.. as an odometer.
      std::size_t j = 1;
      while (j < cotree.size() && ++odo[j] == perms.size()) odo[j++] = 0;
      if (j >= cotree.size()) return true;
    }
  });

  report.hi = best;
  report.witness = witness;
  report.stats.assignments_visited = std::min<std::uint64_t>(visited.load(), options.budget);
  report.stats.prunes = prunes.load();
  if (exhausted && !done) {
    report.lo = WideCount(0);
    report.status = SearchStatus::BudgetExhausted;
  } else {
    report.lo = best;
  }
  report.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

WideCount theta_dp_formula(int k, int m) {
  if (k < 2 || m < 2) throw InvalidArgument("theta DP formula needs k >= 2 and m >= 2");
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  const cpp_int q = m - 1;
  const cpp_int num = pow(q, 2 * k + 4) - pow(q, 2 * k) - 2 * q * q + 2;
  if (num % m != 0) throw InternalError("theta DP formula numerator not divisible by m");
  const cpp_int value = num / m;
  if (value < 0) throw InternalError("theta DP formula is negative");
  if (value > cpp_int(~u128{0})) return WideCount::overflow();
  return WideCount::from_u128(static_cast<u128>(value));
}

Cover cover_from_list_assignment(const Graph& g, const ListAssignment& lists) {
  if (lists.order() != g.order()) throw InvalidArgument("list assignment does not match the graph");
  const auto m = lists.uniform_size();
  if (!m) throw InvalidArgument("fold-size mismatch: lists have different sizes");
  check_fold(*m);
  Cover cover;
  cover.m = *m;
  cover.edges = g.edges();
  bool all_full = true;
  for (const auto& [u, v] : cover.edges) {
    const auto cu = colors_of(lists[u]);
    const auto cv = colors_of(lists[v]);
    std::vector<int> perm(static_cast<std::size_t>(*m), -1);
    std::uint64_t present = 0, image = 0;
    for (int i = 0; i < *m; ++i) {
      const auto it = std::find(cv.begin(), cv.end(), cu[i]);
      if (it == cv.end()) continue;
      const int j = static_cast<int>(it - cv.begin());
      perm[i] = j;
      present |= std::uint64_t{1} << i;
      image |= std::uint64_t{1} << j;
    }
    for (int i = 0; i < *m; ++i) {
      if (perm[i] >= 0) continue;
      perm[i] = std::countr_zero(~image);
      image |= std::uint64_t{1} << perm[i];
    }
    cover.perms.push_back(std::move(perm));
    cover.present.push_back(present);
    all_full = all_full && present == fold_mask(*m);
  }
  if (all_full) cover.present.clear();
  return cover;
}

Cover complete_cover(const Cover& partial) {
  Cover c = partial;
  c.present.clear();
  return c;
}

}  // namespace chromacount
