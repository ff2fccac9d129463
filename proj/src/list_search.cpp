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

#include "chromacount/list_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>

#include "chromacount/color_count.hpp"
#include "chromacount/detail/parallel.hpp"
#include "chromacount/enumeration.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/witness.hpp"

namespace chromacount {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t as_u64(const WideCount& w) {
  const auto v = w.to_u64();
  if (!v) throw InternalError("count exceeds 64 bits: " + w.to_string());
  return *v;
}

template <class Enumerator>
std::vector<typename Enumerator::Unit> work_units(const Enumerator& e, int threads, int max_depth) {
  if (threads <= 1) return {e.root()};
  std::vector<typename Enumerator::Unit> units{e.root()};
  for (int depth = 1; depth <= max_depth && units.size() < static_cast<std::size_t>(threads) * 16;
       ++depth) {
    units = e.split(depth);
  }
  return units;
}

template <class Enumerator>
SearchReport minimize(const Graph& g, int m, const ExactMode& mode, const Enumerator& e,
                      int max_depth) {
  const auto start = Clock::now();
  const ListColoringCounter counter(g);
  const WideCount constant = count_proper_colorings(g, m);

  std::atomic<std::uint64_t> incumbent{as_u64(constant)};
  std::atomic<std::uint64_t> visited{0};
  std::atomic<std::uint64_t> prunes{0};
  std::atomic<bool> exhausted{false};
  std::mutex best_mutex;
  WideCount best = constant;
  ListAssignment witness = ListAssignment::constant(g.order(), m);

  auto visit = [&](std::span<const ColorSet> lists) {
    const std::uint64_t inc = incumbent.load(std::memory_order_relaxed);
    if (inc == 0) return false;
    if (visited.fetch_add(1, std::memory_order_relaxed) >= mode.budget) {
      exhausted.store(true, std::memory_order_relaxed);
      return false;
    }
    const CappedCount r = counter.count(lists, WideCount(inc));
    if (r.reached_cap) {
      prunes.fetch_add(1, std::memory_order_relaxed);
      return true;
    }
    std::lock_guard lock(best_mutex);
    if (r.value < best) {
      best = r.value;
      witness = ListAssignment(std::vector<ColorSet>(lists.begin(), lists.end())).canonicalized();
      detail::atomic_min(incumbent, as_u64(best));
    }
    return best != WideCount(0);
  };

  const auto units = work_units(e, mode.threads, max_depth);
  detail::run_units(units.size(), mode.threads, [&](std::size_t i) {
    e.run(units[i], visit);
    return !exhausted.load(std::memory_order_relaxed) &&
           incumbent.load(std::memory_order_relaxed) != 0;
  });

  SearchReport report;
  report.hi = best;
  report.witness = witness;
  report.stats.assignments_visited = std::min<std::uint64_t>(visited.load(), mode.budget);
  report.stats.prunes = prunes.load();
  if (exhausted.load() && best != WideCount(0)) {
    report.lo = WideCount(0);
    report.status = SearchStatus::BudgetExhausted;
  } else {
    report.lo = best;
    report.status = SearchStatus::Exact;
  }
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

ListAssignment random_assignment(int n, int m, int pool, std::mt19937_64& rng) {
  std::vector<int> colors(static_cast<std::size_t>(pool));
  std::vector<ColorSet> lists(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < pool; ++c) colors[c] = c;
    ColorSet s = 0;
    for (int i = 0; i < m; ++i) {
      const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(pool - i));
      std::swap(colors[i], colors[j]);
      s |= color_bit(colors[i]);
    }
    lists[v] = s;
  }
  return ListAssignment(std::move(lists));
}

int random_color(ColorSet s, std::mt19937_64& rng) {
  const auto colors = colors_of(s);
  return colors[rng() % colors.size()];
}

SearchReport heuristic(const Graph& g, int m, const HeuristicMode& mode) {
  if (mode.budget == 0) throw InvalidArgument("heuristic search needs a positive budget");
  if (m < 1) throw InvalidArgument("list size m must be at least 1");
  const auto start = Clock::now();
  const int n = g.order();
  const int max_pool = std::min(kColorUniverse, 2 * m + 1);
  const ListColoringCounter counter(g);
  const WideCount constant = count_proper_colorings(g, m);
  const WideCount start_cap = constant + WideCount(1);

  SearchReport report;
  report.hi = constant;
  report.witness = ListAssignment::constant(n, m);
  std::uint64_t& visited = report.stats.assignments_visited;

  // Evaluates L; the result is exact when below `cap`.
  auto evaluate = [&](const ListAssignment& lists, const WideCount& cap) {
    ++visited;
    const CappedCount r = counter.count(lists.lists(), cap);
    if (r.reached_cap) {
      ++report.stats.prunes;
      return cap;
    }
    if (r.value < report.hi) {
      report.hi = r.value;
      report.witness = lists.canonicalized();
    }
    return r.value;
  };

  std::mt19937_64 rng(mode.seed);
  for (const ListAssignment& s : structured_candidates(g, m)) {
    if (visited >= mode.budget) break;
    evaluate(s, start_cap);
  }
  bool from_best = true;
  constexpr int kStepsPerRestart = 200;

  std::vector<int> with_neighbors;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) with_neighbors.push_back(v);
  }

  while (visited < mode.budget && report.hi != WideCount(0)) {
    ListAssignment current =
        from_best ? *report.witness
                  : random_assignment(n, m, m + static_cast<int>(rng() % static_cast<std::uint64_t>(max_pool - m + 1)), rng);
    WideCount value = from_best ? report.hi : evaluate(current, start_cap);
    from_best = false;
    if (with_neighbors.empty()) continue;
    for (int step = 0; step < kStepsPerRestart && visited < mode.budget; ++step) {
      const int v = with_neighbors[rng() % with_neighbors.size()];
      std::vector<ColorSet> lists(current.lists().begin(), current.lists().end());
      int c, d;
      if (rng() % 4 != 0) {
        // Trade a color of v for one of a neighbor's colors.
        const VertexMask nb = g.neighbors(v);
        std::vector<int> ws;
        for (VertexMask s = nb; s != 0; s &= s - 1) ws.push_back(std::countr_zero(s));
        const int w = ws[rng() % ws.size()];
        const ColorSet gain = lists[w] & ~lists[v];
        if (gain == 0) continue;
        c = random_color(lists[v] & ~lists[w], rng);
        d = random_color(gain, rng);
      } else {
        const ColorSet outside = color_range(0, max_pool) & ~lists[v];
        if (outside == 0) continue;
        c = random_color(lists[v], rng);
        d = random_color(outside, rng);
      }
      lists[v] = (lists[v] & ~color_bit(c)) | color_bit(d);
      ListAssignment candidate(std::move(lists));
      const WideCount r = evaluate(candidate, value + WideCount(1));
      if (r <= value) {
        value = r;
        current = std::move(candidate);
      }
    }
  }
  report.lo = WideCount(0);
  report.status = SearchStatus::UpperBoundOnly;
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

bool is_bipartite_connected(const Graph& g) { return is_connected(g) && bipartition(g).has_value(); }

}  // namespace

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exact:
      return "exact";
    case SearchStatus::UpperBoundOnly:
      return "upper_bound_only";
    case SearchStatus::BudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::True:
      return "true";
    case TriState::False:
      return "false";
    case TriState::Unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<ListAssignment> structured_candidates(const Graph& g, int m) {
  std::vector<ListAssignment> out{ListAssignment::constant(g.order(), m)};
  if (m == 2) {
    if (auto w = transported_theta_witness(g)) {
      out.push_back(std::move(*w));
    } else if (is_bipartite_connected(g) && core_class(g).kind == CoreKind::Theta222k) {
      out.push_back(pendant_extension_witness(g));
    }
  }
  if (m == 3 && g.order() == 8 && g.size() == 20) {
    const K224Witness w = k224_witness();
    if (const auto iso = find_isomorphism(w.graph, g)) {
      std::vector<ColorSet> lists(8);
      for (int i = 0; i < 8; ++i) lists[(*iso)[i]] = w.lists[i];
      out.emplace_back(std::move(lists));
    }
  }
  return out;
}

SearchReport list_color_function(const Graph& g, int m, const SearchMode& mode) {
  if (const auto* h = std::get_if<HeuristicMode>(&mode)) return heuristic(g, m, *h);
  const auto& exact = std::get<ExactMode>(mode);
  if (exact.enumeration == Enumeration::RestrictedGrowth) {
    const RestrictedGrowthEnumerator e(g.order(), m);
    return minimize(g, m, exact, e, g.order());
  }
  const ClassMultisetEnumerator e(g, m);
  return minimize(g, m, exact, e, static_cast<int>(e.classes().size()));
}

ChoosabilityResult choosability(const Graph& g, int m, std::uint64_t budget) {
  if (m < 1) throw InvalidArgument("list size m must be at least 1");
  ChoosabilityResult result;
  if (m < chromatic_number(g)) {
    result.witness = ListAssignment::constant(g.order(), m);
    result.decided_by_bound = true;
    return result;
  }
  if (m > degeneracy(g)) {
    result.choosable = true;
    result.decided_by_bound = true;
    return result;
  }
  VertexMask active = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) active |= VertexMask{1} << v;
  }
  const Graph h = g.induced(active);
  const ClassMultisetEnumerator e(h, m, true);
  const ListColoringCounter counter(h);
  std::optional<std::vector<ColorSet>> bad;
  e.run(e.root(), [&](std::span<const ColorSet> lists) {
    if (++result.assignments_visited > budget) {
      throw BudgetExhausted("choosability search exceeded " + std::to_string(budget) + " assignments");
    }
    if (counter.colorable(lists)) return true;
    bad.emplace(lists.begin(), lists.end());
    return false;
  });
  result.choosable = !bad.has_value();
  if (bad) {
    std::vector<ColorSet> lists(static_cast<std::size_t>(g.order()), color_range(0, m));
    int i = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (active >> v & 1) lists[v] = (*bad)[i++];
    }
    result.witness = ListAssignment(std::move(lists)).canonicalized();
  }
  return result;
}

bool is_m_choosable(const Graph& g, int m, std::uint64_t budget) {
  return choosability(g, m, budget).choosable;
}

int list_chromatic_number(const Graph& g, std::uint64_t budget) {
  for (int m = std::max(1, chromatic_number(g));; ++m) {
    if (is_m_choosable(g, m, budget)) return m;
  }
}

NuTauReport nu_tau(const Graph& g, const NuTauOptions& options) {
  if (!is_connected(g)) throw PreconditionError("nu_tau requires a connected graph");
  NuTauReport r;
  r.chi = chromatic_number(g);
  const int edges = g.size();
  if (edges <= 3) {
    r.cap = r.chi;
    r.nu_lo = r.nu_hi = r.tau_lo = r.tau_hi = r.chi;
    r.certified_by_theorem = true;
    return r;
  }
  r.cap = std::max(r.chi, edges - 1);
  for (int m = r.chi; m <= r.cap; ++m) {
    NuTauPoint p;
    p.m = m;
    p.chromatic = count_proper_colorings(g, m);
    bool exact_done = false;
    try {
      p.list = list_color_function(g, m, ExactMode{options.budget, options.threads});
      exact_done = p.list.exact();
    } catch (const InvalidArgument&) {
      p.list = SearchReport{WideCount(0), p.chromatic, ListAssignment::constant(g.order(), m),
                            SearchStatus::BudgetExhausted, {}};
    }
    if (!exact_done) {
      p.kind = PointKind::Heuristic;
      const SearchReport h = list_color_function(g, m, HeuristicMode{options.heuristic_budget, options.seed});
      p.list.stats.assignments_visited += h.stats.assignments_visited;
      p.list.stats.prunes += h.stats.prunes;
      if (h.hi < p.list.hi) {
        p.list.hi = h.hi;
        p.list.witness = h.witness;
      }
    }
    r.points.push_back(std::move(p));
  }

  r.nu_lo = r.cap + 1;
  for (const auto& p : r.points) {
    if (!p.certified_gap()) {
      r.nu_lo = p.m;
      break;
    }
  }
  r.nu_hi = r.cap;
  r.nu_hi_from_theorem = true;
  for (const auto& p : r.points) {
    if (p.certified_equal()) {
      r.nu_hi = p.m;
      r.nu_hi_from_theorem = false;
      break;
    }
  }
  r.tau_lo = r.chi;
  for (const auto& p : r.points) {
    if (p.certified_gap()) r.tau_lo = p.m + 1;
  }
  r.tau_lo = std::max(r.tau_lo, r.nu_lo);
  r.tau_hi = r.cap;
  r.tau_hi_from_theorem = true;
  for (auto it = r.points.rbegin(); it != r.points.rend() && it->certified_equal(); ++it) {
    r.tau_hi = it->m;
    r.tau_hi_from_theorem = false;
  }
  return r;
}

EccVerdict is_weakly_ecc(const Graph& g, const NuTauOptions& options) {
  EccVerdict v;
  v.chi = chromatic_number(g);
  const WideCount p = count_proper_colorings(g, v.chi);
  auto refute = [&](const SearchReport& s, const std::string& how) {
    v.value = TriState::False;
    v.witness = s.witness;
    v.witness_count = s.hi;
    v.witness_m = v.chi;
    v.certificate = how + ": P(G,L) = " + s.hi.to_string() + " < " + p.to_string() + " = P(G," +
                    std::to_string(v.chi) + ")";
  };
  const SearchReport h = list_color_function(g, v.chi, HeuristicMode{options.heuristic_budget, options.seed});
  if (h.hi < p) {
    refute(h, "heuristic witness");
    return v;
  }
  try {
    const SearchReport e = list_color_function(g, v.chi, ExactMode{options.budget, options.threads});
    v.assignments_visited = e.stats.assignments_visited;
    if (e.hi < p) {
      refute(e, "exhaustive search witness");
    } else if (e.exact()) {
      v.value = TriState::True;
      v.certificate = "exhaustive search over " + std::to_string(e.stats.assignments_visited) +
                      " assignments: P_l(G," + std::to_string(v.chi) + ") = " + p.to_string();
    } else {
      v.certificate = "search budget exhausted";
    }
  } catch (const InvalidArgument& err) {
    v.certificate = std::string("exact search unavailable: ") + err.what();
  }
  return v;
}

EccVerdict is_ecc(const Graph& g, const NuTauOptions& options) {
  if (g.size() > 3) {
    EccVerdict weak = is_weakly_ecc(g, options);
    if (weak.value == TriState::False) return weak;
  }
  const NuTauReport r = nu_tau(g, options);
  EccVerdict v;
  v.chi = r.chi;
  if (r.certified_by_theorem) {
    v.value = TriState::True;
    v.certificate = "at most 3 edges: chordal";
    return v;
  }
  bool all_equal = true;
  for (const auto& p : r.points) {
    v.assignments_visited += p.list.stats.assignments_visited;
    if (p.certified_gap()) {
      v.value = TriState::False;
      v.witness = p.list.witness;
      v.witness_count = p.list.hi;
      v.witness_m = p.m;
      v.certificate = "P(G,L) = " + p.list.hi.to_string() + " < " + p.chromatic.to_string() +
                      " = P(G," + std::to_string(p.m) + ")";
      return v;
    }
    all_equal = all_equal && p.certified_equal();
  }
  if (all_equal) {
    v.value = TriState::True;
    v.certificate = "exhaustive equality for m = " + std::to_string(r.chi) + ".." +
                    std::to_string(r.cap) + "; larger m by tau <= |E|-1";
  } else {
    v.certificate = "some m in " + std::to_string(r.chi) + ".." + std::to_string(r.cap) +
                    " undecided within budget";
  }
  return v;
}

BipartiteClassification classify_bipartite(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("classify_bipartite requires a connected graph");
  if (!bipartition(g)) throw PreconditionError("classify_bipartite requires a bipartite graph");
  BipartiteClassification c;
  c.core = core_class(g);
  c.ecc = c.core.kind == CoreKind::K1 || c.core.kind == CoreKind::EvenCycle ||
          c.core.kind == CoreKind::K23;
  c.reason = "core " + to_string(c.core) +
             (c.ecc ? " is K1, an even cycle or K2,3" : " is not K1, an even cycle or K2,3");
  if (c.core.kind == CoreKind::Theta222k) {
    c.witness = pendant_extension_witness(g);
    c.witness_count = count_list_colorings(g, *c.witness);
  }
  return c;
}

}  // namespace chromacount
