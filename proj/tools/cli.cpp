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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chromacount/color_count.hpp"
#include "chromacount/dp_color.hpp"
#include "chromacount/errors.hpp"
#include "chromacount/family.hpp"
#include "chromacount/graph6.hpp"
#include "chromacount/lemmas.hpp"
#include "chromacount/list_search.hpp"
#include "chromacount/report.hpp"
#include "chromacount/reproduce.hpp"
#include "chromacount/witness.hpp"

namespace chromacount::cli {

namespace {

using nlohmann::json;

int default_threads() {
  if (const char* env = std::getenv("CHROMACOUNT_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Common {
  std::string spec;
  int m = 0;
  std::string format = "text";
  bool timings = false;
  int threads = 1;
  std::uint64_t budget = kDefaultExactBudget;
  std::uint64_t seed = 1;
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

json header(const std::string& command, const Common& c) {
  json j = {{"tool", "chromacount"}, {"version", kToolVersion}, {"command", command}};
  if (!c.spec.empty()) j["spec"] = c.spec;
  return j;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

void print_witness(std::ostream& out, const ListAssignment& lists) { out << lists.to_text(); }

int cmd_chrompoly(const Common& c, std::ostream& out) {
  const FamilySpec f = parse_family_spec(c.spec);
  const Graph g = build(f);
  const WideCount p = count_proper_colorings(g, c.m);
  std::optional<WideCount> closed;
  try {
    closed = closed_form(f, c.m);
  } catch (const UnsupportedFamily&) {
  }
  const bool agree = !closed || *closed == p;
  if (c.format == "json") {
    json j = header("chrompoly", c);
    j["m"] = c.m;
    j["value"] = p.to_string();
    j["closed_form"] = closed ? json(closed->to_string()) : json(nullptr);
    j["agree"] = agree;
    print_json(out, j);
  } else {
    out << "P(G," << c.m << ") = " << p << "\n";
    if (closed) out << "closed form = " << *closed << (agree ? "" : " (MISMATCH)") << "\n";
  }
  return agree ? kOk : kViolation;
}

int cmd_listcf(const Common& c, bool heuristic, bool witness, const std::string& enumeration,
               std::ostream& out) {
  const Graph g = build_graph(c.spec);
  SearchMode mode;
  if (heuristic) {
    mode = HeuristicMode{c.budget, c.seed};
  } else {
    mode = ExactMode{c.budget, c.threads,
                     enumeration == "growth" ? Enumeration::RestrictedGrowth : Enumeration::ConnectedClasses};
  }
  const SearchReport r = list_color_function(g, c.m, mode);
  const WideCount p = count_proper_colorings(g, c.m);
  const bool ok = r.hi <= p && (!r.witness || count_list_colorings(g, *r.witness) == r.hi);
  if (c.format == "json") {
    json j = header("listcf", c);
    j["m"] = c.m;
    j["mode"] = heuristic ? "heuristic" : "exact";
    j["P"] = p.to_string();
    j["P_l"] = to_json(r, c.timings);
    if (!witness) j["P_l"].erase("witness");
    print_json(out, j);
  } else {
    out << "P_l(G," << c.m << ") ";
    switch (r.status) {
      case SearchStatus::Exact:
        out << "= " << r.hi;
        break;
      case SearchStatus::UpperBoundOnly:
        out << "<= " << r.hi;
        break;
      case SearchStatus::BudgetExhausted:
        out << "in " << interval_text(r.lo, r.hi);
        break;
    }
    out << " (" << to_string(r.status) << ")\n";
    out << "P(G," << c.m << ") = " << p << "\n";
    out << "assignments visited: " << r.stats.assignments_visited << ", capped counts: " << r.stats.prunes << "\n";
    if (c.timings) out << "wall seconds: " << r.stats.wall_seconds << "\n";
    if (witness && r.witness) {
      out << "witness (P(G,L) = " << r.hi << "):\n";
      print_witness(out, *r.witness);
    }
  }
  return ok ? kOk : kViolation;
}

int cmd_dpcf(const Common& c, bool witness, std::ostream& out) {
  const Graph g = build_graph(c.spec);
  const DpReport r = dp_color_function(g, c.m, DpOptions{c.budget, c.threads});
  if (c.format == "json") {
    json j = header("dpcf", c);
    j["m"] = c.m;
    j["P_DP"] = to_json(r, c.timings);
    if (!witness) j["P_DP"].erase("witness");
    print_json(out, j);
  } else {
    out << "P_DP(G," << c.m << ") " << (r.exact() ? "= " + r.hi.to_string() : "in " + interval_text(r.lo, r.hi))
        << " (" << to_string(r.status) << ")\n";
    out << "covers: " << r.stats.assignments_visited << " of " << r.space << "\n";
    if (witness && r.witness) {
      out << "witness cover (edge: permutation):\n";
      for (std::size_t i = 0; i < r.witness->edges.size(); ++i) {
        out << "v" << r.witness->edges[i].u << "-v" << r.witness->edges[i].v << ":";
        for (int x : r.witness->perms[i]) out << " " << x;
        out << "\n";
      }
    }
  }
  return kOk;
}

NuTauOptions nu_tau_options(const Common& c, std::uint64_t heuristic_budget) {
  return NuTauOptions{c.budget, heuristic_budget, c.seed, c.threads};
}

int cmd_nu_tau(const Common& c, std::uint64_t heuristic_budget, std::ostream& out) {
  const Graph g = build_graph(c.spec);
  const NuTauReport r = nu_tau(g, nu_tau_options(c, heuristic_budget));
  if (c.format == "json") {
    json j = header("nu-tau", c);
    j["result"] = to_json(r, c.timings);
    print_json(out, j);
    return kOk;
  }
  auto range = [](int lo, int hi) { return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]"; };
  out << "chi = " << r.chi << ", cap = " << r.cap << "\n";
  out << "nu = " << range(r.nu_lo, r.nu_hi) << (r.nu_hi_from_theorem ? " (upper end from tau <= |E|-1)" : "") << "\n";
  out << "tau = " << range(r.tau_lo, r.tau_hi) << (r.tau_hi_from_theorem ? " (upper end from tau <= |E|-1)" : "")
      << "\n";
  if (r.certified_by_theorem) out << "certified by theorem: at most 3 edges, chordal\n";
  for (const auto& p : r.points) {
    out << "  m=" << p.m << "  P=" << p.chromatic << "  P_l"
        << (p.kind == PointKind::Exact ? " = " + p.list.hi.to_string() : " <= " + p.list.hi.to_string())
        << (p.certified_gap() ? "  gap" : p.certified_equal() ? "  equal" : "  undecided") << "\n";
  }
  return kOk;
}

int cmd_check_ecc(const Common& c, std::uint64_t heuristic_budget, std::ostream& out) {
  const Graph g = build_graph(c.spec);
  const NuTauOptions o = nu_tau_options(c, heuristic_budget);
  const EccVerdict weak = is_weakly_ecc(g, o);
  const EccVerdict full = is_ecc(g, o);
  if (c.format == "json") {
    json j = header("check-ecc", c);
    j["weakly_ecc"] = to_json(weak);
    j["ecc"] = to_json(full);
    print_json(out, j);
    return kOk;
  }
  auto show = [&](const char* name, const EccVerdict& v) {
    out << name << ": " << to_string(v.value) << " (" << v.certificate << ")\n";
    if (v.witness) {
      out << "witness at m=" << *v.witness_m << " with " << *v.witness_count << " colorings:\n";
      print_witness(out, *v.witness);
    }
  };
  show("weakly ecc", weak);
  show("ecc", full);
  return kOk;
}

int cmd_classify(const Common& c, const std::string& path, std::ostream& out) {
  std::vector<Graph> graphs;
  if (path == "-") {
    graphs = read_graph6_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    graphs = read_graph6_stream(in);
  }
  json rows = json::array();
  int violations = 0;
  for (const Graph& g : graphs) {
    const BipartiteClassification k = classify_bipartite(g);
    if (k.witness_count && *k.witness_count != WideCount(1)) ++violations;
    if (c.format == "json") {
      json j = to_json(k);
      j["g6"] = to_graph6(g);
      rows.push_back(j);
    } else {
      out << to_graph6(g) << "\t" << (k.ecc ? "ECC" : "NotECC") << "\t" << to_string(k.core) << "\t" << k.reason;
      if (k.witness_count) out << "\twitness count " << *k.witness_count;
      out << "\n";
    }
  }
  if (c.format == "json") {
    json j = header("classify", c);
    j["input"] = path;
    j["graphs"] = rows;
    print_json(out, j);
  }
  return violations == 0 ? kOk : kViolation;
}

int cmd_witness(const Common& c, const std::string& which, int k, std::ostream& out) {
  Graph g{1};
  ListAssignment lists = ListAssignment::constant(1, 1);
  std::string name;
  if (which == "theta") {
    g = theta_222k(k);
    lists = theta_witness_assignment(k);
    name = "theta:2,2," + std::to_string(2 * k);
  } else {
    const K224Witness w = k224_witness();
    g = w.graph;
    lists = w.lists;
    name = "multipartite:2,2,4";
  }
  const WideCount count = count_list_colorings(g, lists);
  if (c.format == "json") {
    json j = header("witness", c);
    j["graph"] = name;
    j["labels"] = g.labels();
    j["witness"] = to_json(lists);
    j["count"] = count.to_string();
    print_json(out, j);
  } else {
    out << "# " << name << ", " << count << " proper coloring" << (count == WideCount(1) ? "" : "s") << "\n";
    for (int v = 0; v < g.order(); ++v) out << "# v" << v << " = " << g.label(v) << "\n";
    print_witness(out, lists);
  }
  return kOk;
}

int cmd_validate(const Common& c, const std::string& lemma, std::uint64_t trials, std::ostream& out) {
  std::vector<std::string> ids;
  if (lemma == "all") {
    ids = lemma_ids();
  } else {
    ids.push_back(lemma);
  }
  json rows = json::array();
  bool ok = true;
  for (const auto& id : ids) {
    const TrialSummary s = run_trials(id, trials, c.seed);
    ok = ok && s.ok();
    if (c.format == "json") {
      rows.push_back(to_json(s));
    } else {
      out << id << ": " << s.passed << "/" << s.trials << (s.ok() ? " hold" : " hold, VIOLATED") << "\n";
      for (const auto& f : s.failures) {
        out << "  " << f.instance << ": " << f.lhs << " " << f.relation << " " << f.rhs << " fails";
        if (!f.note.empty()) out << " (" << f.note << ")";
        out << "\n";
      }
    }
  }
  if (c.format == "json") {
    json j = header("validate", c);
    j["seed"] = c.seed;
    j["results"] = rows;
    print_json(out, j);
  }
  return ok ? kOk : kViolation;
}

int cmd_reproduce(const Common& c, ReproduceOptions o, const std::string& out_path, std::ostream& out) {
  o.seed = c.seed;
  o.threads = c.threads;
  const auto rows = reproduce_paper(o);
  const json doc = reproduce_json(rows, o, c.timings);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write " + out_path);
    f << doc.dump(2) << "\n";
  }
  if (c.format == "json") {
    print_json(out, doc);
  } else {
    out << reproduce_table(rows, c.timings);
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.pass;
  return ok ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact chromatic, list and DP color function enumeration for small graphs", "chromacount"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Common c;
  c.threads = default_threads();
  auto spec_cmd = [&](const char* name, const char* help, bool needs_m) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("spec", c.spec, "Graph family spec, e.g. theta:2,2,4 or g6:A_")->required();
    if (needs_m) cmd->add_option("--m", c.m, "Number of colors / list size")->required()->check(CLI::NonNegativeNumber);
    add_format(cmd, c);
    cmd->add_flag("--timings", c.timings, "Include wall times");
    return cmd;
  };

  CLI::App* chrompoly = spec_cmd("chrompoly", "P(G,m) with closed-form cross-check", true);

  CLI::App* listcf = spec_cmd("listcf", "List color function P_l(G,m)", true);
  bool exact = false, heuristic = false, witness = false;
  std::string enumeration = "classes";
  listcf->add_flag("--exact", exact, "Exhaustive search (default)");
  listcf->add_flag("--heuristic", heuristic, "Heuristic upper bound");
  listcf->add_flag("--witness", witness, "Print the best assignment");
  listcf->add_option("--budget", c.budget, "Leaf evaluation budget");
  listcf->add_option("--seed", c.seed, "Heuristic seed");
  listcf->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  listcf->add_option("--enumeration", enumeration, "Exact enumeration scheme")
      ->check(CLI::IsMember({"classes", "growth"}));

  CLI::App* dpcf = spec_cmd("dpcf", "DP color function P_DP(G,m)", true);
  dpcf->add_flag("--witness", witness, "Print the minimizing cover");
  dpcf->add_option("--budget", c.budget, "Cover budget");
  dpcf->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::uint64_t heuristic_budget = 2'000;
  CLI::App* nutau = spec_cmd("nu-tau", "Bounds on nu(G) and tau(G)", false);
  CLI::App* ecc = spec_cmd("check-ecc", "Weak and full enumerative chromatic-choosability", false);
  for (CLI::App* cmd : {nutau, ecc}) {
    c.budget = 200'000;
    cmd->add_option("--budget", c.budget, "Exact leaf budget per m");
    cmd->add_option("--heuristic-budget", heuristic_budget, "Heuristic evaluations per m");
    cmd->add_option("--seed", c.seed, "Heuristic seed");
    cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  }

  CLI::App* classify = app.add_subcommand("classify", "Classify connected bipartite graphs from graph6");
  std::string in_path;
  classify->add_option("--in", in_path, "graph6 file, one graph per line ('-' for stdin)")->required();
  add_format(classify, c);

  CLI::App* witness_cmd = app.add_subcommand("witness", "Print a witness list assignment");
  witness_cmd->require_subcommand(1);
  int k = 2;
  CLI::App* w_theta = witness_cmd->add_subcommand("theta", "2-assignment of theta:2,2,2k with one coloring");
  w_theta->add_option("--k", k, "k >= 2")->required();
  CLI::App* w_k224 = witness_cmd->add_subcommand("k224", "3-assignment of K2,2,4 with four colorings");
  add_format(w_theta, c);
  add_format(w_k224, c);

  CLI::App* validate = app.add_subcommand("validate", "Run a lemma validator on seeded instances");
  std::string lemma;
  std::uint64_t trials = 1000;
  validate->add_option("--lemma", lemma, "Lemma id or 'all'")->required();
  validate->add_option("--trials", trials, "Number of instances");
  validate->add_option("--seed", c.seed, "Instance seed");
  add_format(validate, c);

  CLI::App* reproduce = app.add_subcommand("reproduce-paper", "Run every anchored check");
  ReproduceOptions ro;
  std::string out_path;
  reproduce->add_option("--out", out_path, "Write the JSON report here");
  reproduce->add_option("--seed", c.seed, "Seed")->default_val(42);
  reproduce->add_option("--only", ro.only, "Anchors to run")->delimiter(',');
  reproduce->add_option("--corpus", ro.corpus, "graph6 corpus of connected bipartite graphs");
  reproduce->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber);
  reproduce->add_option("--lemma-trials", ro.lemma_trials, "Instances per lemma row");
  reproduce->add_option("--probe-budget", ro.probe_budget, "Assignments per heuristic probe");
  reproduce->add_flag("--timings", c.timings, "Include wall times");
  std::string reproduce_format = "table";
  reproduce->add_option("--format", reproduce_format, "Output format")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (heuristic && exact) throw InvalidArgument("--exact and --heuristic are exclusive");
    if (*chrompoly) return cmd_chrompoly(c, out);
    if (*listcf) return cmd_listcf(c, heuristic, witness, enumeration, out);
    if (*dpcf) return cmd_dpcf(c, witness, out);
    if (*nutau) return cmd_nu_tau(c, heuristic_budget, out);
    if (*ecc) return cmd_check_ecc(c, heuristic_budget, out);
    if (*classify) return cmd_classify(c, in_path, out);
    if (*witness_cmd) return cmd_witness(c, *w_theta ? "theta" : "k224", k, out);
    if (*validate) return cmd_validate(c, lemma, trials, out);
    if (*reproduce) {
      c.format = reproduce_format == "json" ? "json" : "text";
      return cmd_reproduce(c, ro, out_path, out);
    }
  } catch (const chromacount::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (!c.spec.empty() && e.offset() <= c.spec.size()) {
      err << "  " << c.spec << "\n  " << std::string(e.offset(), ' ') << "^\n";
    }
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedFamily& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}

}  // namespace chromacount::cli
