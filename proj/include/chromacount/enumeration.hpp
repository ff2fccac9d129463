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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "chromacount/graph.hpp"
#include "chromacount/list_assignment.hpp"

namespace chromacount {

/// m-assignments in restricted-growth form: vertices are scanned 0..n-1 and a
/// list may introduce new colors only as the next unused integers. Every
/// m-assignment is a color renaming of at least one visited assignment, since
/// renaming by first occurrence needs at most m fresh colors per vertex; the
/// pool is therefore bounded by m*n, which must not exceed 128.
///
/// Work is split by prefix: split(depth) lists every canonical prefix of the
/// first `depth` vertices, and running all prefixes visits exactly what a run
/// from the root visits, in the same overall order.
class RestrictedGrowthEnumerator {
 public:
  struct Unit {
    std::vector<ColorSet> lists;  // lists of vertices 0..lists.size()-1
    int used = 0;                 // colors 0..used-1 appear in the prefix
  };

  RestrictedGrowthEnumerator(int n, int m);

  int order() const { return n_; }
  int list_size() const { return m_; }

  Unit root() const;
  std::vector<Unit> split(int depth) const;

  /// Calls visit(std::span<const ColorSet>) for every completion of `unit`;
  /// stops early and returns false when visit returns false.
  template <class Visit>
  bool run(const Unit& unit, Visit&& visit) const {
    ColorSet lists[kMaxVertices];
    for (std::size_t i = 0; i < unit.lists.size(); ++i) lists[i] = unit.lists[i];
    return extend(lists, static_cast<int>(unit.lists.size()), unit.used, visit);
  }

 private:
  template <class Visit>
  bool extend(ColorSet* lists, int v, int used, Visit& visit) const {
    if (v == n_) return visit(std::span<const ColorSet>(lists, static_cast<std::size_t>(n_)));
    for (int fresh = 0; fresh <= m_; ++fresh) {
      const int old = m_ - fresh;
      if (old > used) continue;
      const ColorSet fresh_set = color_range(used, fresh);
      if (!choose_old(lists, v, used, fresh, old, 0, fresh_set, visit)) return false;
    }
    return true;
  }

  template <class Visit>
  bool choose_old(ColorSet* lists, int v, int used, int fresh, int need, int from, ColorSet acc,
                  Visit& visit) const {
    if (need == 0) {
      lists[v] = acc;
      return extend(lists, v + 1, used + fresh, visit);
    }
    for (int c = from; c <= used - need; ++c) {
      if (!choose_old(lists, v, used, fresh, need - 1, c + 1, acc | color_bit(c), visit)) return false;
    }
    return true;
  }

  int n_;
  int m_;
};

/// Visits the restricted-growth m-assignments of g in deterministic order.
/// Return false from `visit` to stop. Throws InvalidArgument when m < 1 or
/// m*n > 128.
void enumerate_canonical_assignments(const Graph& g, int m,
                                     const std::function<bool(const ListAssignment&)>& visit);

/// Count-preserving canonical form. P(G,L) only depends on the color classes
/// {v : c in L(v)}, and a class whose induced subgraph is disconnected may be
/// split into its components (one fresh color each) without changing P(G,L).
/// So every m-assignment is count-equivalent to a multiset of connected vertex
/// sets of size >= 2, each vertex lying in at most m of them, with the
/// remaining slots filled by colors private to one vertex. This enumerator
/// visits each such multiset once.
///
/// With `full_coverage` only multisets covering every vertex exactly m times
/// are visited. That suffices for deciding m-choosability of a graph without
/// isolated vertices: a private color at v can be traded for a color from a
/// neighbor's list without making a non-colorable assignment colorable.
///
/// Classes are ordered by lowest vertex, then larger first; multiplicities are
/// tried from largest to smallest, so the first visited assignment is the
/// constant one.
class ClassMultisetEnumerator {
 public:
  /// Multiplicities chosen for classes 0..size()-1.
  using Unit = std::vector<int>;

  ClassMultisetEnumerator(const Graph& g, int m, bool full_coverage = false);

  int order() const { return n_; }
  int list_size() const { return m_; }
  const std::vector<VertexMask>& classes() const { return classes_; }

  Unit root() const { return {}; }
  /// Prefixes fixing the multiplicities of the first `depth` classes.
  std::vector<Unit> split(int depth) const;

  template <class Visit>
  bool run(const Unit& unit, Visit&& visit) const {
    State s;
    for (int v = 0; v < n_; ++v) {
      s.cap[v] = m_;
      s.lists[v] = 0;
    }
    s.next_color = 0;
    for (std::size_t t = 0; t < unit.size(); ++t) {
      for (int k = 0; k < unit[t]; ++k) add_class(s, static_cast<int>(t));
    }
    return descend(s, static_cast<int>(unit.size()), visit);
  }

 private:
  struct State {
    int cap[kMaxVertices];
    ColorSet lists[kMaxVertices];
    int next_color;
  };

  void add_class(State& s, int t) const {
    const ColorSet c = color_bit(s.next_color++);
    for (VertexMask m = classes_[t]; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      --s.cap[v];
      s.lists[v] |= c;
    }
  }
  void remove_class(State& s, int t) const {
    const ColorSet c = color_bit(--s.next_color);
    for (VertexMask m = classes_[t]; m != 0; m &= m - 1) {
      const int v = std::countr_zero(m);
      ++s.cap[v];
      s.lists[v] &= ~c;
    }
  }
  int max_multiplicity(const State& s, int t) const {
    int k = m_;
    for (VertexMask m = classes_[t]; m != 0; m &= m - 1) k = std::min(k, s.cap[std::countr_zero(m)]);
    return k;
  }
  bool dead_end(const State& s, int t) const {
    // Leaving the group of lowest vertex v with slots still open.
    if (!full_coverage_) return false;
    const int v = t < static_cast<int>(classes_.size()) ? lowest_[t] : n_;
    for (int u = (t == 0 ? 0 : lowest_[t - 1]); u < v; ++u) {
      if (s.cap[u] != 0) return true;
    }
    return false;
  }

  template <class Visit>
  bool leaf(State& s, Visit& visit) const {
    ColorSet lists[kMaxVertices];
    int next = s.next_color;
    for (int v = 0; v < n_; ++v) {
      lists[v] = s.lists[v] | color_range(next, s.cap[v]);
      next += s.cap[v];
    }
    return visit(std::span<const ColorSet>(lists, static_cast<std::size_t>(n_)));
  }

  template <class Visit>
  bool descend(State& s, int t, Visit& visit) const {
    const int count = static_cast<int>(classes_.size());
    for (;;) {
      if (t > 0 && t <= count && lowest_changes(t) && dead_end(s, t)) return true;
      if (t == count) {
        if (full_coverage_) {
          for (int v = 0; v < n_; ++v) {
            if (s.cap[v] != 0) return true;
          }
        }
        return leaf(s, visit);
      }
      const int top = max_multiplicity(s, t);
      if (top == 0) {
        ++t;
        continue;
      }
      for (int k = 0; k < top; ++k) add_class(s, t);
      bool keep_going = true;
      for (int k = top; k >= 0 && keep_going; --k) {
        keep_going = descend(s, t + 1, visit);
        if (k > 0) remove_class(s, t);
      }
      return keep_going;
    }
  }

  bool lowest_changes(int t) const {
    return t == static_cast<int>(classes_.size()) || lowest_[t] != lowest_[t - 1];
  }

  int n_;
  int m_;
  bool full_coverage_;
  std::vector<VertexMask> classes_;
  std::vector<int> lowest_;
};

}  // namespace chromacount
