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

#include "chromacount/report.hpp"

namespace chromacount {

using nlohmann::json;

json to_json(const WideCount& w) { return w.to_string(); }

json to_json(const ListAssignment& lists) {
  json a = json::array();
  for (int v = 0; v < lists.order(); ++v) a.push_back(colors_of(lists[v]));
  return {{"lists", a}, {"text", lists.to_text()}};
}

json to_json(const Cover& cover) {
  json edges = json::array();
  for (std::size_t i = 0; i < cover.edges.size(); ++i) {
    json e = {{"u", cover.edges[i].u}, {"v", cover.edges[i].v}, {"perm", cover.perms[i]}};
    if (!cover.present.empty()) e["present_mask"] = cover.present[i];
    edges.push_back(e);
  }
  return {{"m", cover.m}, {"edges", edges}};
}

json to_json(const SearchStats& stats, bool timings) {
  json j = {{"assignments_visited", stats.assignments_visited}, {"prunes", stats.prunes}};
  if (timings) j["wall_seconds"] = stats.wall_seconds;
  return j;
}

json to_json(const SearchReport& r, bool timings) {
  json j = {{"lo", to_json(r.lo)}, {"hi", to_json(r.hi)}, {"status", to_string(r.status)},
            {"stats", to_json(r.stats, timings)}};
  if (r.exact()) j["value"] = to_json(r.hi);
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

json to_json(const DpReport& r, bool timings) {
  json j = {{"lo", to_json(r.lo)},           {"hi", to_json(r.hi)},
            {"status", to_string(r.status)}, {"covers_in_space", to_json(r.space)},
            {"stats", to_json(r.stats, timings)}};
  if (r.exact()) j["value"] = to_json(r.hi);
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

json to_json(const NuTauReport& r, bool timings) {
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back({{"m", p.m},
                      {"P", to_json(p.chromatic)},
                      {"P_l", to_json(p.list, timings)},
                      {"kind", p.kind == PointKind::Exact ? "exact" : "heuristic"},
                      {"certified_equal", p.certified_equal()},
                      {"certified_gap", p.certified_gap()}});
  }
  return {{"chi", r.chi},
          {"cap", r.cap},
          {"nu", {{"lo", r.nu_lo}, {"hi", r.nu_hi}, {"hi_from_theorem", r.nu_hi_from_theorem}}},
          {"tau", {{"lo", r.tau_lo}, {"hi", r.tau_hi}, {"hi_from_theorem", r.tau_hi_from_theorem}}},
          {"certified_by_theorem", r.certified_by_theorem},
          {"points", points}};
}

json to_json(const EccVerdict& v) {
  json j = {{"value", to_string(v.value)},
            {"chi", v.chi},
            {"certificate", v.certificate},
            {"assignments_visited", v.assignments_visited}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (v.witness_count) j["witness_count"] = to_json(*v.witness_count);
  if (v.witness_m) j["witness_m"] = *v.witness_m;
  return j;
}

json to_json(const BipartiteClassification& c) {
  json j = {{"verdict", c.ecc ? "ECC" : "NotECC"}, {"core", to_string(c.core)}, {"reason", c.reason}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.witness_count) j["witness_count"] = to_json(*c.witness_count);
  return j;
}

json to_json(const LemmaReport& r) {
  json j = {{"lemma", r.lemma}, {"instance", r.instance}, {"lhs", r.lhs},   {"relation", r.relation},
            {"rhs", r.rhs},     {"holds", r.holds},       {"note", r.note}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

json to_json(const TrialSummary& s) {
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back(to_json(f));
  return {{"lemma", s.lemma}, {"trials", s.trials}, {"passed", s.passed}, {"failures", failures}};
}

std::string interval_text(const WideCount& lo, const WideCount& hi) {
  if (lo == hi) return hi.to_string();
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

}  // namespace chromacount
