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

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chromacount/graph.hpp"

namespace chromacount {

// Graph-family DSL:
//
//   spec := atom | "join:" spec "+" spec | "pendant:" int "+" spec
//   atom := "path:" n | "cycle:" n | "complete:" n | "bipartite:" l "," n
//         | "multipartite:" p1 ("," pi)* | "theta:" l1 ("," li)* | "g6:" text
//
// Vertex order of the built graphs:
//   path/cycle    0..n-1 along the path (cycle closes n-1 -> 0)
//   bipartite     the l left vertices, then the n right vertices
//   multipartite  parts consecutively, in the order given
//   theta         u, internal vertices of path 1, path 2, ..., then v
//   join          left operand's vertices, then right operand's
//   pendant       base vertices, then `count` leaves hung on the base's last vertex

struct FamilySpec;
using FamilyPtr = std::shared_ptr<const FamilySpec>;

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct CompleteSpec { int n; };
struct BipartiteSpec { int left; int right; };
struct MultipartiteSpec { std::vector<int> parts; };
struct ThetaSpec { std::vector<int> lengths; };
struct JoinSpec { FamilyPtr left; FamilyPtr right; };
struct PendantSpec { int count; FamilyPtr base; };
struct Graph6Spec { std::string text; };

struct FamilySpec {
  std::variant<PathSpec, CycleSpec, CompleteSpec, BipartiteSpec, MultipartiteSpec, ThetaSpec,
               JoinSpec, PendantSpec, Graph6Spec>
      node;
};

/// Throws ParseError (with byte offset) on syntax errors, arity errors such as
/// "cycle:2", and specs that would exceed 31 vertices.
FamilySpec parse_family_spec(std::string_view text);

/// Canonical DSL text; parse_family_spec(to_string(s)) rebuilds the same graph.
std::string to_string(const FamilySpec& spec);

int vertex_count(const FamilySpec& spec);
Graph build(const FamilySpec& spec);

/// parse + build.
Graph build_graph(std::string_view text);

/// Canonical Θ(2,2,2k) in the documented theta order: u=0, x1=1, y1=2,
/// z1..z_{2k-1}=3..2k+1, v=2k+2.
Graph theta_222k(int k);

}  // namespace chromacount
