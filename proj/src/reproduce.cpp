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

#include "chromacount/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "chromacount/color_count.hpp"
#include "chromacount/dp_color.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_search.hpp"
#include "chromacount/report.hpp"
#include "chromacount/structure.hpp"
#include "chromacount/witness.hpp"

namespace chromacount {

namespace {

using nlohmann::json;
using RowFn = std::function<ReproduceRow(const ReproduceOptions&, std::uint64_t seed)>;

std::string s(const WideCount& w) { return w.to_string(); }

ReproduceRow fig1(const ReproduceOptions&, std::uint64_t) {
  ReproduceRow r;
  r.claim = "Fig-1 assignment on theta:2,2,4 has exactly one proper coloring";
  const WideCount c = count_list_colorings(theta_222k(2), theta_witness_assignment(2));
  r.pass = c == WideCount(1);
  r.detail = "count=" + s(c);
  r.data = {{"count", s(c)}, {"witness", to_json(theta_witness_assignment(2))}};
  return r;
}

ReproduceRow lemma22(const ReproduceOptions&, std::uint64_t) {
  ReproduceRow r;
  r.claim = "theta witness has exactly one proper coloring for k = 2..8";
  r.pass = true;
  json counts = json::object();
  for (int k = 2; k <= 8; ++k) {
    const WideCount c = count_list_colorings(theta_222k(k), theta_witness_assignment(k));
    counts[std::to_string(k)] = s(c);
    r.pass = r.pass && c == WideCount(1);
  }
  r.detail = r.pass ? "all counts 1" : "count differs from 1";
  r.data = {{"counts", counts}};
  return r;
}

ReproduceRow prop18(const ReproduceOptions& o, std::uint64_t) {
  ReproduceRow r;
  r.claim = "P_l(theta:2,2,4, 2) = 1 < 2 = P(theta:2,2,4, 2) by restricted-growth enumeration";
  const Graph g = theta_222k(2);
  const SearchReport rep =
      list_color_function(g, 2, ExactMode{kDefaultExactBudget, o.threads, Enumeration::RestrictedGrowth});
  const WideCount p = count_proper_colorings(g, 2);
  r.pass = rep.exact() && rep.hi == WideCount(1) && p == WideCount(2) &&
           count_list_colorings(g, *rep.witness) == WideCount(1);
  r.detail = "P_l=" + interval_text(rep.lo, rep.hi) + " P=" + s(p) + " leaves=" +
             std::to_string(rep.stats.assignments_visited);
  json search = to_json(rep);
  if (o.threads > 1) search.erase("witness");
  r.data = {{"P", s(p)}, {"P_l", search}};
  return r;
}

ReproduceRow oracles(const ReproduceOptions&, std::uint64_t seed) {
  ReproduceRow r;
  r.claim = "count_proper_colorings equals the closed forms";
  int checked = 0;
  std::vector<std::string> mismatches;
  auto check = [&](const std::string& spec, int m) {
    const FamilySpec f = parse_family_spec(spec);
    const WideCount a = count_proper_colorings(build(f), m);
    const WideCount b = closed_form(f, m);
    ++checked;
    if (a != b) mismatches.push_back(spec + " m=" + std::to_string(m) + ": " + s(a) + " vs " + s(b));
  };
  for (int n = 3; n <= 10; ++n) {
    for (int m = 0; m <= 6; ++m) check("cycle:" + std::to_string(n), m);
  }
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) check("complete:" + std::to_string(n), m);
  }
  std::mt19937_64 rng(seed);
  for (int n = 1; n <= 10; ++n) {
    check("path:" + std::to_string(n), 3);
    for (int t = 0; t < 3; ++t) {
      const Graph tree = random_connected_graph(n, 0, rng);
      for (int m = 1; m <= 4; ++m) check("g6:" + to_graph6(tree), m);
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) check("bipartite:2," + std::to_string(n), m);
  }
  for (int k = 1; k <= 4; ++k) {
    for (int m = 0; m <= 6; ++m) check("theta:2,2," + std::to_string(2 * k), m);
  }
  const WideCount p3 = count_proper_colorings(theta_222k(2), 3);
  const std::uint64_t lemma34 = 4 * ((1u << 4) + 2) + (1u << 5) - 2;
  r.pass = mismatches.empty() && p3 == WideCount(102) && lemma34 == 102;
  r.detail = std::to_string(checked) + " checks, " + std::to_string(mismatches.size()) +
             " mismatches; P(theta:2,2,4,3)=" + s(p3);
  r.data = {{"checks", checked}, {"mismatches", mismatches}, {"theta_2_2_4_m3", s(p3)}};
  return r;
}

ReproduceRow dp(const ReproduceOptions& o, std::uint64_t) {
  ReproduceRow r;
  r.claim = "P_DP(theta:2,2,4, 3) = 78 = theta DP formula, over 36 normalized covers";
  const DpReport a = dp_color_function(theta_222k(2), 3, DpOptions{kDefaultExactBudget, o.threads});
  const DpReport b = dp_color_function(theta_222k(3), 3, DpOptions{kDefaultExactBudget, o.threads});
  const WideCount fa = theta_dp_formula(2, 3), fb = theta_dp_formula(3, 3);
  r.pass = a.exact() && a.hi == WideCount(78) && fa == a.hi && a.space == WideCount(36) && b.exact() &&
           b.hi == fb && fb == WideCount(318);
  r.detail = "k=2: " + s(a.hi) + " (formula " + s(fa) + ", " + s(a.space) + " covers); k=3: " + s(b.hi) +
             " (formula " + s(fb) + ")";
  r.data = {{"k2", to_json(a)}, {"k3", to_json(b)}, {"formula_k2", s(fa)}, {"formula_k3", s(fb)}};
  if (o.threads > 1) {
    r.data["k2"].erase("witness");
    r.data["k3"].erase("witness");
  }
  return r;
}

ReproduceRow sandwich(const ReproduceOptions&, std::uint64_t seed) {
  ReproduceRow r;
  r.claim = "P_DP <= P_l <= P on 50 seeded connected graphs, n <= 5, m = 2";
  std::mt19937_64 rng(seed);
  json rows = json::array();
  r.pass = true;
  for (int t = 0; t < 50; ++t) {
    const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 4), 40, rng);
    const DpReport d = dp_color_function(g, 2);
    const SearchReport l = list_color_function(g, 2, ExactMode{});
    const WideCount p = count_proper_colorings(g, 2);
    const bool ok = d.exact() && l.exact() && d.hi <= l.hi && l.hi <= p;
    r.pass = r.pass && ok;
    rows.push_back({{"g6", to_graph6(g)}, {"P_DP", s(d.hi)}, {"P_l", s(l.hi)}, {"P", s(p)}, {"ok", ok}});
  }
  r.detail = r.pass ? "50/50 instances ordered" : "ordering violated";
  r.data = {{"instances", rows}};
  return r;
}

ReproduceRow prop45(const ReproduceOptions&, std::uint64_t) {
  ReproduceRow r;
  r.claim = "P(K2,2,4, 3) = 6; Fig-3 assignment has 4 colorings, each coloring Z with 1";
  const K224Witness w = k224_witness();
  const WideCount p = count_proper_colorings(w.graph, 3);
  const WideCount c = count_list_colorings(w.graph, w.lists);
  const ListColoringCounter counter(w.graph);
  int colorings = 0;
  bool z_one = true;
  counter.for_each(w.lists.lists(), [&](std::span<const int> f) {
    ++colorings;
    for (int z = 4; z < 8; ++z) z_one = z_one && f[z] == 1;
    return true;
  });
  r.pass = p == WideCount(6) && c == WideCount(4) && colorings == 4 && z_one;
  r.detail = "P=" + s(p) + " P(G,L)=" + s(c) + (z_one ? " f(Z)={1} in every coloring" : " f(Z)!={1}");
  r.data = {{"P", s(p)}, {"count", s(c)}, {"all_z_colored_1", z_one}, {"witness", to_json(w.lists)}};
  return r;
}

struct CorpusEntry {
  Graph g{1};
  CoreClass core;
  WideCount list2;
  bool choosable2 = false;
};

/// Both corpus rows share one pass over the graphs.
const std::vector<CorpusEntry>& corpus(const std::string& path) {
  static std::map<std::string, std::vector<CorpusEntry>> cache;
  if (const auto it = cache.find(path); it != cache.end()) return it->second;
  std::ifstream in(path);
  if (!in) throw Error("cannot read corpus " + path);
  std::vector<CorpusEntry> out;
  for (const Graph& g : read_graph6_stream(in)) {
    if (!is_connected(g) || !bipartition(g)) throw InvalidArgument("corpus graph is not connected bipartite");
    CorpusEntry e;
    e.g = g;
    e.core = core_class(g);
    const SearchReport rep = list_color_function(g, 2, ExactMode{});
    if (!rep.exact()) throw InternalError("corpus search out of budget");
    e.list2 = rep.hi;
    e.choosable2 = is_m_choosable(g, 2);
    out.push_back(std::move(e));
  }
  return cache.emplace(path, std::move(out)).first->second;
}

json kind_counts(const std::vector<CorpusEntry>& entries) {
  std::map<std::string, int> counts;
  for (const auto& e : entries) {
    ++counts[e.core.kind == CoreKind::EvenCycle ? "even_cycle"
             : e.core.kind == CoreKind::Theta222k ? "theta_2_2_2k"
                                                  : to_string(e.core)];
  }
  return counts;
}

ReproduceRow thm17(const ReproduceOptions& o, std::uint64_t) {
  ReproduceRow r;
  r.claim = "P_l(G,2) = 2 iff the core is K1, an even cycle or K2,3 (connected bipartite, n <= 7)";
  const auto& entries = corpus(o.corpus);
  std::vector<std::string> bad;
  int ecc = 0;
  for (const auto& e : entries) {
    const bool listed =
        e.core.kind == CoreKind::K1 || e.core.kind == CoreKind::EvenCycle || e.core.kind == CoreKind::K23;
    const bool equal = e.list2 == WideCount(2);
    const BipartiteClassification c = classify_bipartite(e.g);
    const bool witness_ok = c.core.kind != CoreKind::Theta222k || c.witness_count == WideCount(1);
    ecc += equal;
    if (listed != equal || c.ecc != listed || !witness_ok) bad.push_back(to_graph6(e.g));
  }
  r.pass = bad.empty() && !entries.empty();
  r.detail = std::to_string(entries.size()) + " graphs, " + std::to_string(ecc) + " with P_l(G,2)=2, " +
             std::to_string(bad.size()) + " disagreements";
  r.data = {{"graphs", entries.size()}, {"ecc", ecc}, {"cores", kind_counts(entries)}, {"disagreements", bad}};
  return r;
}

ReproduceRow thm21(const ReproduceOptions& o, std::uint64_t) {
  ReproduceRow r;
  r.claim = "G is 2-choosable iff the core is K1, an even cycle or theta:2,2,2k (same corpus)";
  const auto& entries = corpus(o.corpus);
  std::vector<std::string> bad;
  int choosable = 0;
  for (const auto& e : entries) {
    const bool listed = e.core.kind == CoreKind::K1 || e.core.kind == CoreKind::EvenCycle ||
                        e.core.kind == CoreKind::K23 || e.core.kind == CoreKind::Theta222k;
    choosable += e.choosable2;
    if (listed != e.choosable2 || e.choosable2 != (e.list2 >= WideCount(1))) bad.push_back(to_graph6(e.g));
  }
  r.pass = bad.empty() && !entries.empty();
  r.detail = std::to_string(entries.size()) + " graphs, " + std::to_string(choosable) + " 2-choosable, " +
             std::to_string(bad.size()) + " disagreements";
  r.data = {{"graphs", entries.size()}, {"choosable", choosable}, {"disagreements", bad}};
  return r;
}

ReproduceRow lemma23(const ReproduceOptions&, std::uint64_t seed) {
  ReproduceRow r;
  r.claim = "P_l(G',m) = (m-1) P_l(G,m) for a fresh pendant: 50 graphs n <= 6 at m=2, 10 graphs n <= 4 at m=3";
  std::mt19937_64 rng(seed);
  json failures = json::array();
  int passed = 0;
  auto run = [&](int n_max, int m) {
    LemmaInstance in;
    in.graph = random_connected_graph(2 + static_cast<int>(rng() % static_cast<unsigned>(n_max - 1)), 40, rng);
    in.m = m;
    in.attach = static_cast<int>(rng() % static_cast<unsigned>(in.graph.order()));
    const LemmaReport rep = validate_lemma("L2.3", in);
    if (rep.holds) {
      ++passed;
    } else {
      failures.push_back(to_json(rep));
    }
  };
  for (int t = 0; t < 50; ++t) run(6, 2);
  for (int t = 0; t < 10; ++t) run(4, 3);
  r.pass = passed == 60;
  r.detail = std::to_string(passed) + "/60 instances hold";
  r.data = {{"passed", passed}, {"failures", failures}};
  return r;
}

ReproduceRow join_row(const ReproduceOptions&, std::uint64_t seed) {
  ReproduceRow r;
  r.claim = "P(K1 v G, m) = m P(G, m-1) for 50 seeded graphs n <= 6, m = 3,4,5";
  std::mt19937_64 rng(seed);
  int passed = 0, total = 0;
  json failures = json::array();
  for (int t = 0; t < 50; ++t) {
    LemmaInstance in;
    in.graph = random_connected_graph(1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 61), rng);
    for (int m = 3; m <= 5; ++m) {
      in.m = m;
      const LemmaReport rep = validate_lemma("T1.6", in);
      ++total;
      if (rep.holds) {
        ++passed;
      } else {
        failures.push_back(to_json(rep));
      }
    }
  }
  r.pass = passed == total;
  r.detail = std::to_string(passed) + "/" + std::to_string(total) + " identities hold";
  r.data = {{"passed", passed}, {"checks", total}, {"failures", failures}};
  return r;
}

RowFn lemma_row(std::string id, std::string claim) {
  return [id, claim](const ReproduceOptions& o, std::uint64_t seed) {
    ReproduceRow r;
    r.claim = claim;
    const TrialSummary t = run_trials(id, o.lemma_trials, seed);
    r.pass = t.ok() && t.trials > 0;
    r.detail = std::to_string(t.passed) + "/" + std::to_string(t.trials) + " seeded instances hold";
    r.data = to_json(t);
    return r;
  };
}

ReproduceRow thm3_probe(const ReproduceOptions& o, std::uint64_t seed) {
  ReproduceRow r;
  r.claim = "heuristic probe finds no 3-assignment of theta:2,2,4 with fewer than 102 colorings";
  const Graph g = theta_222k(2);
  const SearchReport h = list_color_function(g, 3, HeuristicMode{o.probe_budget, seed});
  const WideCount p = count_proper_colorings(g, 3);
  r.pass = h.stats.assignments_visited >= o.probe_budget && h.hi >= p && p == WideCount(102);
  r.detail = (h.hi >= p ? "no violation found" : "violation found") + std::string(" in ") +
             std::to_string(h.stats.assignments_visited) + " assignments (best " + s(h.hi) + ")";
  r.data = {{"P", s(p)}, {"search", to_json(h)}, {"verdict", h.hi >= p ? "no violation found" : "violation"}};
  return r;
}

ReproduceRow thm3_exact(const ReproduceOptions& o, std::uint64_t) {
  ReproduceRow r;
  r.claim = "exact P_l(theta:2,2,4, 3) = 102 by connected-class enumeration";
  const Graph g = theta_222k(2);
  const SearchReport e = list_color_function(g, 3, ExactMode{kDefaultExactBudget, o.threads});
  r.pass = e.exact() && e.hi == WideCount(102);
  r.detail = "P_l=" + interval_text(e.lo, e.hi) + " over " + std::to_string(e.stats.assignments_visited) + " assignments";
  json search = to_json(e);
  if (o.threads > 1) search.erase("witness");
  r.data = {{"P_l", search}};
  return r;
}

ReproduceRow prop44_probe(const ReproduceOptions& o, std::uint64_t seed) {
  ReproduceRow r;
  r.claim = "heuristic probe finds no 3-assignment of K1 v theta:2,2,4 with fewer than 6 colorings";
  const Graph theta = theta_222k(2);
  const Graph h = join(Graph(1), theta);
  const WideCount p = count_proper_colorings(h, 3);
  const WideCount via_join = WideCount(3) * count_proper_colorings(theta, 2);
  const SearchReport s3 = list_color_function(h, 3, HeuristicMode{o.probe_budget, seed});
  r.pass = s3.stats.assignments_visited >= o.probe_budget && s3.hi >= p && p == WideCount(6) && via_join == p;
  r.detail = (s3.hi >= p ? "no violation found" : "violation found") + std::string(" in ") +
             std::to_string(s3.stats.assignments_visited) + " assignments (best " + s(s3.hi) +
             ", P=" + s(p) + ")";
  r.data = {{"P", s(p)}, {"3P(theta,2)", s(via_join)}, {"search", to_json(s3)},
            {"verdict", s3.hi >= p ? "no violation found" : "violation"}};
  return r;
}

const std::vector<std::pair<std::string, RowFn>>& registry() {
  static const std::vector<std::pair<std::string, RowFn>> rows = {
      {"Fig1", fig1},
      {"L2.2", lemma22},
      {"P1.8", prop18},
      {"CP-oracles", oracles},
      {"DP", dp},
      {"Sandwich", sandwich},
      {"P4.5", prop45},
      {"T1.7@n<=7", thm17},
      {"T2.1@n<=7", thm21},
      {"L2.3", lemma23},
      {"Join", join_row},
      {"L3.1", lemma_row("L3.1", "path decomposition sums to P(G,L) on theta:2,2,2k")},
      {"C3.2", lemma_row("C3.2", "P(G,L)^(m^2) >= m^(2m^2) prod N_i(c,d)")},
      {"L3.3ii", lemma_row("L3.3ii", "pairs with N(c,d) = m-2 number at most (a+m)^2/4 - a")},
      {"L3.4", lemma_row("L3.4", "P(G,L) >= P(G,m) when L(u) = L(v), m >= 3")},
      {"L3.5", lemma_row("L3.5", "even-path endpoint counts meet the lower and upper bounds")},
      {"L3.6", lemma_row("L3.6", "P(G,L) >= P(G,3) when L(u) != L(v), m = 3")},
      {"L3.7", lemma_row("L3.7", "P(G,L) >= P_DP(G,m) + C d")},
      {"L3.8", lemma_row("L3.8", "at least (m-1)^(2k-1)(m-2)^2 colorings with w=x, z=y")},
      {"L4.1", lemma_row("L4.1", "P(G,L) >= ceil(P_l(G,m) prod(m+d_i) / m^n)")},
      {"O4.3", lemma_row("O4.3", "non-constant 2-assignments of a star have at least 3 colorings")},
      {"T3-probe", thm3_probe},
      {"T3-exact", thm3_exact},
      {"P4.4-probe", prop44_probe},
  };
  return rows;
}

}  // namespace

const std::vector<std::string>& reproduce_anchors() {
  static const std::vector<std::string> anchors = [] {
    std::vector<std::string> a;
    for (const auto& [name, fn] : registry()) a.push_back(name);
    return a;
  }();
  return anchors;
}

std::vector<ReproduceRow> reproduce_paper(const ReproduceOptions& options) {
  for (const auto& name : options.only) {
    const auto& a = reproduce_anchors();
    if (std::find(a.begin(), a.end(), name) == a.end()) {
      throw InvalidArgument("unknown anchor '" + name + "'");
    }
  }
  std::vector<ReproduceRow> rows;
  std::uint64_t index = 0;
  for (const auto& [name, fn] : registry()) {
    ++index;
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), name) == options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    ReproduceRow row;
    try {
      row = fn(options, options.seed + 1'000'003 * index);
    } catch (const Error& e) {
      row.pass = false;
      row.detail = std::string("error: ") + e.what();
    }
    row.anchor = name;
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

json reproduce_json(const std::vector<ReproduceRow>& rows, const ReproduceOptions& options, bool timings) {
  json out = json::array();
  int passed = 0;
  for (const auto& r : rows) {
    json j = {{"anchor", r.anchor}, {"claim", r.claim}, {"status", r.pass ? "pass" : "fail"},
              {"detail", r.detail}, {"data", r.data}};
    if (timings) j["wall_seconds"] = r.seconds;
    out.push_back(std::move(j));
    passed += r.pass;
  }
  return {{"tool", "chromacount"},
          {"version", kToolVersion},
          {"command", "reproduce-paper"},
          {"seed", options.seed},
          {"threads", options.threads},
          {"rows", out},
          {"summary", {{"passed", passed}, {"failed", static_cast<int>(rows.size()) - passed}}}};
}

std::string reproduce_table(const std::vector<ReproduceRow>& rows, bool timings) {
  std::size_t width = 6;
  for (const auto& r : rows) width = std::max(width, r.anchor.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "anchor" << "  status  detail\n";
  int passed = 0;
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.anchor << "  " << (r.pass ? "pass  " : "FAIL  ")
        << "  " << r.detail;
    if (timings) out << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    out << "\n";
    passed += r.pass;
  }
  out << passed << "/" << rows.size() << " rows pass\n";
  return out.str();
}

}  // namespace chromacount
