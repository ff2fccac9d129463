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

#include "chromacount/graph.hpp"

#include "chromacount/errors.hpp"

namespace chromacount {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("graph order " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::check(int v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(order()));
  }
  return v;
}

int Graph::size() const {
  int twice = 0;
  for (VertexMask row : adj_) twice += std::popcount(row);
  return twice / 2;
}

VertexMask Graph::all_vertices() const {
  return order() == 32 ? ~VertexMask{0} : ((VertexMask{1} << order()) - 1);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    VertexMask higher = adj_[u] & ~((VertexMask{2} << u) - 1);
    while (higher != 0) {
      out.push_back({u, std::countr_zero(higher)});
      higher &= higher - 1;
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check(u);
  check(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check(u);
  check(v);
  adj_[u] &= ~(VertexMask{1} << v);
  adj_[v] &= ~(VertexMask{1} << u);
}

Graph Graph::induced(VertexMask keep) const {
  keep &= all_vertices();
  std::vector<int> index(adj_.size(), -1);
  std::vector<std::string> new_labels;
  int next = 0;
  for (int v = 0; v < order(); ++v) {
    if ((keep >> v) & 1u) {
      index[v] = next++;
      if (!labels_.empty()) new_labels.push_back(labels_[v]);
    }
  }
  Graph out(next);
  for (const Edge& e : edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) out.add_edge(index[e.u], index[e.v]);
  }
  out.labels_ = std::move(new_labels);
  return out;
}

Graph Graph::with_pendant(int attach) const {
  check(attach);
  Graph out(order() + 1);
  out.adj_.assign(adj_.begin(), adj_.end());
  out.adj_.push_back(0);
  out.add_edge(attach, order());
  if (!labels_.empty()) {
    out.labels_ = labels_;
    out.labels_.push_back("p" + std::to_string(order()));
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adj_.size()) {
    throw InvalidArgument("label count does not match graph order");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
  check(v);
  return labels_.empty() ? "v" + std::to_string(v) : labels_[v];
}

Graph join(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > kMaxVertices) {
    throw InvalidArgument("join has " + std::to_string(n) + " vertices; limit is " +
                          std::to_string(kMaxVertices));
  }
  Graph out(n);
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(a.order() + e.u, a.order() + e.v);
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) out.add_edge(u, a.order() + v);
  }
  if (!a.labels().empty() || !b.labels().empty()) {
    std::vector<std::string> labels;
    for (int v = 0; v < a.order(); ++v) {
      labels.push_back(a.labels().empty() ? "v" + std::to_string(v) : a.label(v));
    }
    for (int v = 0; v < b.order(); ++v) {
      labels.push_back(b.labels().empty() ? "v" + std::to_string(a.order() + v) : b.label(v));
    }
    out.set_labels(std::move(labels));
  }
  return out;
}

bool is_connected(const Graph& g) {
  VertexMask seen = 1, frontier = 1;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.all_vertices();
}

}  // namespace chromacount
