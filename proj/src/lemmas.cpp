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

#include "chromacount/lemmas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromacount/color_count.hpp"
#include "chromacount/dp_color.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/list_search.hpp"
#include "chromacount/structure.hpp"
#include "chromacount/witness.hpp"

namespace chromacount {

namespace {

using boost::multiprecision::cpp_int;

cpp_int big(const WideCount& w) {
  const u128 v = w.value();
  cpp_int r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

cpp_int power(long base, unsigned exp) { return boost::multiprecision::pow(cpp_int(base), exp); }

std::string str(const cpp_int& v) { return v.str(); }

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

int pick_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(pick(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// k when g equals theta_222k(k), k >= 1; otherwise 0.
int theta_k(const Graph& g) {
  const int n = g.order();
  if (n < 5 || n % 2 == 0) return 0;
  const int k = (n - 3) / 2;
  return g == theta_222k(k) ? k : 0;
}

const ListAssignment& m_assignment(const LemmaInstance& in) {
  require(in.lists.has_value(), "instance needs a list assignment");
  require(in.lists->order() == in.graph.order(), "list assignment does not match the graph");
  require(in.m >= 1 && in.lists->is_m_assignment(in.m), "lists must all have size m");
  return *in.lists;
}

/// Exact P_l and P_DP values shared across trials.
class Memo {
 public:
  WideCount list_cf(const Graph& g, int m) {
    const auto key = std::make_pair(to_graph6(g), m);
    {
      std::lock_guard lock(mutex_);
      if (const auto it = list_.find(key); it != list_.end()) return it->second;
    }
    const SearchReport r = list_color_function(g, m, ExactMode{});
    require(r.exact(), "exact P_l(G," + std::to_string(m) + ") is out of budget");
    std::lock_guard lock(mutex_);
    return list_.emplace(key, r.hi).first->second;
  }

  WideCount dp_cf(const Graph& g, int m) {
    const auto key = std::make_pair(to_graph6(g), m);
    {
      std::lock_guard lock(mutex_);
      if (const auto it = dp_.find(key); it != dp_.end()) return it->second;
    }
    const DpReport r = dp_color_function(g, m);
    require(r.exact(), "exact P_DP(G," + std::to_string(m) + ") is out of budget");
    std::lock_guard lock(mutex_);
    return dp_.emplace(key, r.hi).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::string, int>, WideCount> list_;
  std::map<std::pair<std::string, int>, WideCount> dp_;
};

Memo& memo() {
  static Memo m;
  return m;
}

/// Proper L-colorings with w colored x and z colored y.
WideCount pinned_count(const ListColoringCounter& counter, const ListAssignment& lists, int w, int x,
                       int z, int y) {
  std::vector<ColorSet> l(lists.lists().begin(), lists.lists().end());
  l[w] = color_bit(x);
  l[z] = color_bit(y);
  return counter.count(l);
}

LemmaReport start(std::string_view id, const LemmaInstance& in) {
  LemmaReport r;
  r.lemma = std::string(id);
  r.instance = describe(in);
  return r;
}

void finish(LemmaReport& r, bool holds) {
  r.holds = holds;
  if (!holds) r.counterexample = r.instance;
}

LemmaReport pendant_identity(const LemmaInstance& in) {
  const Graph& g = in.graph;
  require(in.m >= 1, "m must be positive");
  require(in.attach >= 0 && in.attach < g.order(), "attach vertex out of range");
  require(is_connected(g), "graph must be connected");
  LemmaReport r = start("L2.3", in);
  r.instance += " attach=" + std::to_string(in.attach);
  const WideCount lhs = memo().list_cf(g.with_pendant(in.attach), in.m);
  const WideCount base = memo().list_cf(g, in.m);
  const WideCount rhs = WideCount(static_cast<std::uint64_t>(in.m - 1)) * base;
  r.lhs = lhs.to_string();
  r.relation = "=";
  r.rhs = rhs.to_string();
  r.note = "P_l(G',m) vs (m-1)P_l(G,m) with P_l(G,m) = " + base.to_string();
  finish(r, lhs == rhs);
  return r;
}

LemmaReport amgm(const LemmaInstance& in) {
  require(theta_k(in.graph) >= 1, "graph must be theta:2,2,2k");
  const ListAssignment& lists = m_assignment(in);
  LemmaReport r = start("C3.2", in);
  const ThetaDecomposition dec = theta_decomposition(in.graph, lists);
  cpp_int prod = 1;
  for (int i = 0; i < 3; ++i) {
    for (const auto& row : dec.n[i]) {
      for (const WideCount& x : row) prod *= big(x);
    }
  }
  const unsigned sq = static_cast<unsigned>(in.m * in.m);
  const cpp_int p = big(dec.total());
  const cpp_int lhs = boost::multiprecision::pow(p, sq);
  const cpp_int rhs = power(in.m, 2 * sq) * prod;
  r.lhs = str(lhs);
  r.relation = ">=";
  r.rhs = str(rhs);
  r.note = "P(G,L)^(m^2) vs m^(2m^2) * prod N_i(c,d), P(G,L) = " + str(p);
  finish(r, lhs >= rhs);
  return r;
}

LemmaReport decomposition(const LemmaInstance& in) {
  require(theta_k(in.graph) >= 1, "graph must be theta:2,2,2k");
  require(in.lists.has_value() && in.lists->order() == in.graph.order(), "instance needs lists");
  LemmaReport r = start("L3.1", in);
  const WideCount lhs = theta_decomposition(in.graph, *in.lists).total();
  const WideCount rhs = count_list_colorings(in.graph, *in.lists);
  r.lhs = lhs.to_string();
  r.relation = "=";
  r.rhs = rhs.to_string();
  finish(r, lhs == rhs);
  return r;
}

LemmaReport length_two_path(const LemmaInstance& in) {
  require(in.graph == build_graph("path:3"), "graph must be the path u,w,v");
  require(in.m >= 3, "m must be at least 3");
  const ListAssignment& lists = m_assignment(in);
  LemmaReport r = start("L3.3ii", in);
  const ColorSet lu = lists[0], lw = lists[1], lv = lists[2];
  const std::vector<ColorSet> mid{lw};
  int low = 0;
  bool range_ok = true;
  for (int c : colors_of(lu)) {
    for (int d : colors_of(lv)) {
      const auto n = *pinned_path_count(mid, c, d).to_u64();
      range_ok = range_ok && n + 2 >= static_cast<std::uint64_t>(in.m) && n <= static_cast<std::uint64_t>(in.m);
      if (n + 2 == static_cast<std::uint64_t>(in.m)) ++low;
    }
  }
  const int a = color_count(lu & lv);
  const int k1 = color_count(lw & lu & lv);
  const int k2 = color_count(lw & lu & ~lv);
  const int k3 = color_count(lw & lv & ~lu);
  const int formula = (k1 + k3) * (k1 + k2) - k1;
  const int bound4 = (a + in.m) * (a + in.m) - 4 * a;
  r.lhs = std::to_string(low);
  r.relation = "<=";
  r.rhs = bound4 % 4 == 0 ? std::to_string(bound4 / 4) : std::to_string(bound4) + "/4";
  r.note = "a=" + std::to_string(a) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) +
           " k3=" + std::to_string(k3) + " (k1+k3)(k1+k2)-k1=" + std::to_string(formula) +
           (range_ok ? "" : " N outside [m-2,m]");
  finish(r, range_ok && low == formula && 4 * low <= bound4);
  return r;
}

LemmaReport same_list(const LemmaInstance& in) {
  require(theta_k(in.graph) >= 2, "graph must be theta:2,2,2k with k >= 2");
  require(in.m >= 3, "m must be at least 3");
  const ListAssignment& lists = m_assignment(in);
  require(lists[0] == lists[in.graph.order() - 1], "L(u) must equal L(v)");
  LemmaReport r = start("L3.4", in);
  const WideCount lhs = count_list_colorings(in.graph, lists);
  const WideCount rhs = count_proper_colorings(in.graph, in.m);
  r.lhs = lhs.to_string();
  r.relation = ">=";
  r.rhs = rhs.to_string();
  finish(r, lhs >= rhs);
  return r;
}

LemmaReport even_path(const LemmaInstance& in) {
  const int n = in.graph.order();
  require(n >= 3 && n % 2 == 1 && in.graph == build_graph("path:" + std::to_string(n)),
          "graph must be a path with an odd number of vertices, at least 3");
  require(in.m >= 3, "m must be at least 3");
  const ListAssignment& lists = m_assignment(in);
  const int k = (n - 1) / 2;
  const long m = in.m;
  LemmaReport r = start("L3.5", in);
  const cpp_int lower_num = power(m - 1, 2 * k + 1) - (m - 1);   // over m(m-1)
  const cpp_int higher_num = power(m - 1, 2 * k) + (m - 1);      // over m
  const std::vector<ColorSet> internal(lists.lists().begin() + 1, lists.lists().end() - 1);
  bool all_low = true;
  int high_pairs = 0;
  cpp_int min_n = -1;
  for (int c : colors_of(lists[0])) {
    for (int d : colors_of(lists[n - 1])) {
      const cpp_int v = big(pinned_path_count(internal, c, d));
      if (min_n < 0 || v < min_n) min_n = v;
      all_low = all_low && m * (m - 1) * v >= lower_num;
      if (m * v >= higher_num) ++high_pairs;
    }
  }
  const bool identity = lower_num % (m * (m - 1)) == 0 && higher_num % m == 0 &&
                        lower_num / (m * (m - 1)) + 1 == higher_num / m;
  r.lhs = str(min_n);
  r.relation = ">=";
  r.rhs = str(lower_num / (m * (m - 1)));
  r.note = std::to_string(high_pairs) + " pairs reach " + str(higher_num / m) + " (need >= m)";
  finish(r, all_low && identity && high_pairs >= in.m);
  return r;
}

LemmaReport three_lists(const LemmaInstance& in) {
  const int k = theta_k(in.graph);
  require(k >= 2, "graph must be theta:2,2,2k with k >= 2");
  require(in.m == 3, "m must be 3");
  const ListAssignment& lists = m_assignment(in);
  require(lists[0] != lists[in.graph.order() - 1], "L(u) must differ from L(v)");
  LemmaReport r = start("L3.6", in);
  const WideCount lhs = count_list_colorings(in.graph, lists);
  const WideCount rhs = count_proper_colorings(in.graph, 3);
  const cpp_int closed = 4 * (power(2, 2 * k) + 2) + power(2, 2 * k + 1) - 2;
  r.lhs = lhs.to_string();
  r.relation = ">=";
  r.rhs = rhs.to_string();
  r.note = "4(2^2k+2)+2^(2k+1)-2 = " + str(closed);
  finish(r, lhs >= rhs && big(rhs) == closed);
  return r;
}

Edge require_edge(const LemmaInstance& in) {
  require(in.edge.has_value(), "instance needs an edge");
  const Edge e = *in.edge;
  require(e.u >= 0 && e.v >= 0 && e.u < in.graph.order() && e.v < in.graph.order() &&
              in.graph.adjacent(e.u, e.v),
          "edge is not in the graph");
  return e;
}

cpp_int greedy_bound(int k, int m) { return power(m - 1, 2 * k - 1) * power(m - 2, 2); }

LemmaReport dp_gap(const LemmaInstance& in) {
  const ListAssignment& lists = m_assignment(in);
  const Edge e = require_edge(in);
  const int d = color_count(lists[e.u] & ~lists[e.v]);
  require(d >= 1, "|L(u) - L(v)| must be at least 1");
  LemmaReport r = start("L3.7", in);
  const ListColoringCounter counter(in.graph);
  cpp_int c_min = -1;
  for (int x : colors_of(lists[e.u])) {
    for (int y : colors_of(lists[e.v])) {
      if (x == y) continue;
      const cpp_int v = big(pinned_count(counter, lists, e.u, x, e.v, y));
      if (c_min < 0 || v < c_min) c_min = v;
    }
  }
  const cpp_int p = big(counter.count(lists.lists()));
  const cpp_int dp = big(memo().dp_cf(in.graph, in.m));
  bool holds = p >= dp + c_min * d;
  r.lhs = str(p);
  r.relation = ">=";
  r.rhs = str(dp + c_min * d);
  r.note = "P_DP=" + str(dp) + " C=" + str(c_min) + " d=" + std::to_string(d);
  const int k = theta_k(in.graph);
  if (k >= 2 && in.m >= 4) {
    const cpp_int c38 = greedy_bound(k, in.m);
    holds = holds && p >= dp + c38 * d;
    r.note += "; with C=" + str(c38) + " from the greedy bound: rhs " + str(dp + c38 * d);
  }
  finish(r, holds);
  return r;
}

LemmaReport greedy(const LemmaInstance& in) {
  const int k = theta_k(in.graph);
  require(k >= 2, "graph must be theta:2,2,2k with k >= 2");
  require(in.m >= 4, "m must be at least 4");
  const ListAssignment& lists = m_assignment(in);
  const Edge e = require_edge(in);
  const ColorSet xs = lists[e.u] & ~lists[e.v];
  const ColorSet ys = lists[e.v] & ~lists[e.u];
  require(xs != 0 && ys != 0, "need x in L(w) - L(z) and y in L(z) - L(w)");
  LemmaReport r = start("L3.8", in);
  const ListColoringCounter counter(in.graph);
  cpp_int low = -1;
  for (int x : colors_of(xs)) {
    for (int y : colors_of(ys)) {
      const cpp_int v = big(pinned_count(counter, lists, e.u, x, e.v, y));
      if (low < 0 || v < low) low = v;
    }
  }
  const cpp_int bound = greedy_bound(k, in.m);
  r.lhs = str(low);
  r.relation = ">=";
  r.rhs = str(bound);
  finish(r, low >= bound);
  return r;
}

LemmaReport deletion_bound(const LemmaInstance& in) {
  require(in.m >= 1, "m must be positive");
  require(in.lists.has_value() && in.lists->order() == in.graph.order(), "instance needs lists");
  const ListAssignment& lists = *in.lists;
  cpp_int prod = 1;
  for (int v = 0; v < lists.order(); ++v) {
    require(lists.list_size(v) >= in.m, "every list needs at least m colors");
    prod *= lists.list_size(v);
  }
  LemmaReport r = start("L4.1", in);
  const cpp_int pl = big(memo().list_cf(in.graph, in.m));
  const cpp_int mn = power(in.m, static_cast<unsigned>(in.graph.order()));
  const cpp_int bound = (pl * prod + mn - 1) / mn;
  const cpp_int p = big(count_list_colorings(in.graph, lists));
  r.lhs = str(p);
  r.relation = ">=";
  r.rhs = str(bound);
  r.note = "P_l(G,m)=" + str(pl);
  finish(r, p >= bound);
  return r;
}

LemmaReport star(const LemmaInstance& in) {
  const Graph& g = in.graph;
  const int n = g.order();
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) center = v;
  }
  require(n >= 2 && center >= 0 && g.size() == n - 1, "graph must be a star K_{1,n}");
  LemmaInstance copy = in;
  copy.m = 2;
  const ListAssignment& lists = m_assignment(copy);
  bool same = true;
  for (int v = 1; v < n; ++v) same = same && lists[v] == lists[0];
  require(!same, "lists must not all be equal");
  LemmaReport r = start("O4.3", in);
  const WideCount p = count_list_colorings(g, lists);
  r.lhs = p.to_string();
  r.relation = ">=";
  r.rhs = "3";
  finish(r, p >= WideCount(3));
  return r;
}

LemmaReport join_probe(const LemmaInstance& in) {
  const Graph& g = in.graph;
  require(is_connected(g) && g.order() >= 2 && bipartition(g).has_value(),
          "graph must be connected and bipartite with an edge");
  require(memo().list_cf(g, 2) >= WideCount(1), "P_l(G,2) must be at least 1");
  LemmaReport r = start("P4.4", in);
  r.instance += " budget=" + std::to_string(in.budget) + " seed=" + std::to_string(in.seed);
  const Graph h = join(Graph(1), g);
  const WideCount target = count_proper_colorings(h, 3);
  const SearchReport s = list_color_function(h, 3, HeuristicMode{in.budget, in.seed});
  r.lhs = s.hi.to_string();
  r.relation = ">=";
  r.rhs = target.to_string();
  r.holds = s.hi >= target;
  r.note = r.holds ? "no violation found in " + std::to_string(s.stats.assignments_visited) +
                         " assignments"
                   : "violation found";
  if (!r.holds) r.counterexample = r.instance + " L=" + s.witness->to_text();
  return r;
}

LemmaReport join_identity(const LemmaInstance& in) {
  require(in.m >= 2, "m must be at least 2");
  LemmaReport r = start("T1.6", in);
  const WideCount lhs = count_proper_colorings(join(Graph(1), in.graph), in.m);
  const WideCount rhs =
      WideCount(static_cast<std::uint64_t>(in.m)) * count_proper_colorings(in.graph, in.m - 1);
  r.lhs = lhs.to_string();
  r.relation = "=";
  r.rhs = rhs.to_string();
  finish(r, lhs == rhs);
  return r;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"L2.3", "C3.2", "L3.1", "L3.3ii", "L3.4", "L3.5", "L3.6",
                                            "L3.7", "L3.8", "L4.1", "O4.3", "P4.4", "T1.6"};
  return ids;
}

LemmaReport validate_lemma(std::string_view id, const LemmaInstance& in) {
  if (id == "L2.3") return pendant_identity(in);
  if (id == "C3.2") return amgm(in);
  if (id == "L3.1") return decomposition(in);
  if (id == "L3.3ii") return length_two_path(in);
  if (id == "L3.4") return same_list(in);
  if (id == "L3.5") return even_path(in);
  if (id == "L3.6") return three_lists(in);
  if (id == "L3.7") return dp_gap(in);
  if (id == "L3.8") return greedy(in);
  if (id == "L4.1") return deletion_bound(in);
  if (id == "O4.3") return star(in);
  if (id == "P4.4") return join_probe(in);
  if (id == "T1.6") return join_identity(in);
  throw InvalidArgument("unknown lemma id '" + std::string(id) + "'");
}

Graph random_connected_graph(int n, int p_percent, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(pick(rng, static_cast<std::uint64_t>(v))));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b) && static_cast<int>(pick(rng, 100)) < p_percent) g.add_edge(a, b);
    }
  }
  return g;
}

Graph random_connected_bipartite_graph(int n, int p_percent, std::mt19937_64& rng) {
  Graph g(n);
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(pick(rng, static_cast<std::uint64_t>(v)));
    g.add_edge(v, parent);
    side[v] = 1 - side[parent];
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (side[a] != side[b] && !g.adjacent(a, b) && static_cast<int>(pick(rng, 100)) < p_percent) {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

ListAssignment random_lists(std::span<const int> sizes, int pool, std::mt19937_64& rng) {
  std::vector<ColorSet> lists;
  std::vector<int> colors(static_cast<std::size_t>(pool));
  for (int size : sizes) {
    if (size < 1 || size > pool) throw InvalidArgument("list size must be in 1..pool");
    for (int c = 0; c < pool; ++c) colors[c] = c;
    ColorSet s = 0;
    for (int i = 0; i < size; ++i) {
      std::swap(colors[i], colors[i + static_cast<int>(pick(rng, static_cast<std::uint64_t>(pool - i)))]);
      s |= color_bit(colors[i]);
    }
    lists.push_back(s);
  }
  return ListAssignment(std::move(lists));
}

ListAssignment random_m_assignment(int n, int m, int pool, std::mt19937_64& rng) {
  const std::vector<int> sizes(static_cast<std::size_t>(n), m);
  return random_lists(sizes, pool, rng);
}

LemmaInstance random_instance(std::string_view id, std::mt19937_64& rng) {
  LemmaInstance in;
  auto theta_lists = [&](int k_lo, int k_hi, int m_lo, int m_hi) {
    in.graph = theta_222k(pick_in(rng, k_lo, k_hi));
    in.m = pick_in(rng, m_lo, m_hi);
    in.lists = random_m_assignment(in.graph.order(), in.m, in.m + 3, rng);
  };
  if (id == "L2.3") {
    in.graph = random_connected_graph(pick_in(rng, 2, 5), 40, rng);
    in.m = 2;
    in.attach = pick_in(rng, 0, in.graph.order() - 1);
  } else if (id == "C3.2") {
    theta_lists(2, 3, 2, 4);
  } else if (id == "L3.1") {
    theta_lists(2, 3, 2, 3);
  } else if (id == "L3.3ii") {
    in.graph = build_graph("path:3");
    in.m = pick_in(rng, 3, 5);
    in.lists = random_m_assignment(3, in.m, in.m + 3, rng);
  } else if (id == "L3.4") {
    theta_lists(2, 3, 3, 4);
    std::vector<ColorSet> l(in.lists->lists().begin(), in.lists->lists().end());
    l.back() = l.front();
    in.lists = ListAssignment(std::move(l));
  } else if (id == "L3.5") {
    const int k = pick_in(rng, 1, 3);
    in.graph = build_graph("path:" + std::to_string(2 * k + 1));
    in.m = pick_in(rng, 3, 5);
    in.lists = random_m_assignment(2 * k + 1, in.m, in.m + 3, rng);
  } else if (id == "L3.6") {
    do {
      theta_lists(2, 3, 3, 3);
    } while ((*in.lists)[0] == (*in.lists)[in.graph.order() - 1]);
  } else if (id == "L3.7" || id == "L3.8") {
    const int m_lo = id == "L3.7" ? 3 : 4;
    for (;;) {
      theta_lists(2, 3, m_lo, 5);
      std::vector<Edge> usable;
      for (const Edge& e : in.graph.edges()) {
        if (((*in.lists)[e.u] & ~(*in.lists)[e.v]) != 0) usable.push_back(e);
      }
      if (usable.empty()) continue;
      Edge e = usable[pick(rng, usable.size())];
      if (rng() & 1) std::swap(e.u, e.v);
      in.edge = e;
      break;
    }
  } else if (id == "L4.1") {
    in.graph = random_connected_graph(pick_in(rng, 2, 5), 40, rng);
    in.m = 2;
    std::vector<int> sizes;
    for (int v = 0; v < in.graph.order(); ++v) sizes.push_back(in.m + pick_in(rng, 0, 2));
    in.lists = random_lists(sizes, in.m + 3, rng);
  } else if (id == "O4.3") {
    in.graph = build_graph("bipartite:1," + std::to_string(pick_in(rng, 1, 5)));
    in.m = 2;
    for (;;) {
      in.lists = random_m_assignment(in.graph.order(), 2, 5, rng);
      bool same = true;
      for (int v = 1; v < in.graph.order(); ++v) same = same && (*in.lists)[v] == (*in.lists)[0];
      if (!same) break;
    }
  } else if (id == "P4.4") {
    for (;;) {
      in.graph = random_connected_bipartite_graph(pick_in(rng, 2, 6), 30, rng);
      if (is_m_choosable(in.graph, 2)) break;
    }
    in.m = 3;
    in.seed = rng();
  } else if (id == "T1.6") {
    in.graph = random_connected_graph(pick_in(rng, 1, 6), pick_in(rng, 0, 60), rng);
    in.m = pick_in(rng, 3, 5);
  } else {
    throw InvalidArgument("unknown lemma id '" + std::string(id) + "'");
  }
  return in;
}

std::string describe(const LemmaInstance& in) {
  std::ostringstream out;
  out << "g6=" << to_graph6(in.graph) << " m=" << in.m;
  if (in.lists) {
    out << " L=";
    for (int v = 0; v < in.lists->order(); ++v) {
      out << (v ? "|" : "") << "{";
      const auto cs = colors_of((*in.lists)[v]);
      for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? "," : "") << cs[i];
      out << "}";
    }
  }
  if (in.edge) out << " edge=" << in.edge->u << "-" << in.edge->v;
  return out.str();
}

TrialSummary run_trials(std::string_view id, std::uint64_t trials, std::uint64_t seed) {
  TrialSummary s;
  s.lemma = std::string(id);
  s.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const LemmaReport r = validate_lemma(id, random_instance(id, rng));
    if (r.holds) {
      ++s.passed;
    } else if (s.failures.size() < 3) {
      s.failures.push_back(r);
    }
  }
  return s;
}

}  // namespace chromacount
