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

#include "chromacount/family.hpp"

#include <charconv>
#include <numeric>

#include "chromacount/errors.hpp"
#include "chromacount/graph6.hpp"

namespace chromacount {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    for (std::size_t i = 0; i < text_.size(); ++i) {
      const auto c = static_cast<unsigned char>(text_[i]);
      if (c < 32 || c > 126) throw ParseError("non-printable or non-ASCII byte", i);
    }
    FamilySpec spec = parse_spec();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return spec;
  }

 private:
  FamilySpec parse_spec() {
    const std::size_t start = pos_;
    const std::string_view keyword = read_keyword();
    if (keyword == "join") {
      auto left = std::make_shared<const FamilySpec>(parse_spec());
      expect('+');
      auto right = std::make_shared<const FamilySpec>(parse_spec());
      FamilySpec spec{JoinSpec{left, right}};
      check_size(spec, start);
      return spec;
    }
    if (keyword == "pendant") {
      const int count = read_int();
      if (count < 1) throw ParseError("pendant count must be at least 1", start);
      expect('+');
      auto base = std::make_shared<const FamilySpec>(parse_spec());
      FamilySpec spec{PendantSpec{count, base}};
      check_size(spec, start);
      return spec;
    }
    if (keyword == "g6") {
      const std::size_t begin = pos_;
      while (pos_ < text_.size() && text_[pos_] >= 63 && text_[pos_] <= 126) ++pos_;
      const std::string body(text_.substr(begin, pos_ - begin));
      try {
        from_graph6(body);
      } catch (const ParseError& e) {
        throw ParseError(std::string("invalid graph6 text: ") + e.what(), begin + e.offset());
      }
      return FamilySpec{Graph6Spec{body}};
    }

    const std::vector<int> args = read_int_list();
    FamilySpec spec;
    auto arity = [&](std::size_t want) {
      if (args.size() != want) {
        throw ParseError(std::string(keyword) + " takes " + std::to_string(want) +
                             " argument(s), got " + std::to_string(args.size()),
                         start);
      }
    };
    auto at_least = [&](std::size_t i, int min, const char* what) {
      if (args[i] < min) {
        throw ParseError(std::string(keyword) + ": " + what + " must be at least " +
                             std::to_string(min),
                         arg_pos_[i]);
      }
    };
    if (keyword == "path") {
      arity(1);
      at_least(0, 1, "n");
      spec.node = PathSpec{args[0]};
    } else if (keyword == "cycle") {
      arity(1);
      at_least(0, 3, "n");
      spec.node = CycleSpec{args[0]};
    } else if (keyword == "complete") {
      arity(1);
      at_least(0, 1, "n");
      spec.node = CompleteSpec{args[0]};
    } else if (keyword == "bipartite") {
      arity(2);
      at_least(0, 1, "part size");
      at_least(1, 1, "part size");
      spec.node = BipartiteSpec{args[0], args[1]};
    } else if (keyword == "multipartite") {
      for (std::size_t i = 0; i < args.size(); ++i) at_least(i, 1, "part size");
      spec.node = MultipartiteSpec{args};
    } else if (keyword == "theta") {
      if (args.size() < 2) throw ParseError("theta needs at least two path lengths", start);
      int ones = 0;
      for (std::size_t i = 0; i < args.size(); ++i) {
        at_least(i, 1, "path length");
        ones += (args[i] == 1);
      }
      if (ones > 1) throw ParseError("theta: at most one path may have length 1", start);
      spec.node = ThetaSpec{args};
    } else {
      throw ParseError("unknown family '" + std::string(keyword) + "'", start);
    }
    check_size(spec, arg_pos_.front());
    return spec;
  }

  std::string_view read_keyword() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                   (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
      ++pos_;
    }
    if (pos_ == begin) throw ParseError("expected a family keyword", begin);
    const std::string_view word = text_.substr(begin, pos_ - begin);
    expect(':');
    return word;
  }

  int read_int() {
    const std::size_t begin = pos_;
    int value = 0;
    const auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || text_[begin] == '-' || text_[begin] == '+') {
      throw ParseError("expected a non-negative integer", begin);
    }
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  std::vector<int> read_int_list() {
    arg_pos_.assign(1, pos_);
    std::vector<int> out{read_int()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      arg_pos_.push_back(pos_);
      out.push_back(read_int());
    }
    return out;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  static void check_size(const FamilySpec& spec, std::size_t start) {
    const long long n = vertex_count(spec);
    if (n > kMaxVertices) {
      throw ParseError("spec has " + std::to_string(n) + " vertices; limit is " +
                           std::to_string(kMaxVertices),
                       start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::size_t> arg_pos_;
};

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

Graph build_theta(const std::vector<int>& lengths) {
  int internal = 0;
  for (int l : lengths) internal += l - 1;
  const int n = internal + 2;
  Graph g(n);
  const int u = 0, v = n - 1;
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  labels[u] = "u";
  labels[v] = "v";
  const bool named = lengths.size() <= 3;
  int next = 1;
  for (std::size_t p = 0; p < lengths.size(); ++p) {
    int prev = u;
    for (int j = 1; j < lengths[p]; ++j) {
      labels[next] = named ? std::string(1, static_cast<char>('x' + p)) + std::to_string(j)
                           : "s" + std::to_string(p + 1) + "_" + std::to_string(j);
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, v);
  }
  g.set_labels(std::move(labels));
  return g;
}

Graph build_multipartite(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  Graph g(n);
  std::vector<int> part_of;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int j = 1; j <= parts[p]; ++j) {
      part_of.push_back(static_cast<int>(p));
      labels.push_back(parts.size() == 3 ? std::string(1, static_cast<char>('x' + p)) + std::to_string(j)
                                         : "p" + std::to_string(p + 1) + "_" + std::to_string(j));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part_of[a] != part_of[b]) g.add_edge(a, b);
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const PathSpec& s) { return "path:" + std::to_string(s.n); },
          [](const CycleSpec& s) { return "cycle:" + std::to_string(s.n); },
          [](const CompleteSpec& s) { return "complete:" + std::to_string(s.n); },
          [](const BipartiteSpec& s) {
            return "bipartite:" + std::to_string(s.left) + "," + std::to_string(s.right);
          },
          [](const MultipartiteSpec& s) { return "multipartite:" + join_ints(s.parts); },
          [](const ThetaSpec& s) { return "theta:" + join_ints(s.lengths); },
          [](const JoinSpec& s) { return "join:" + to_string(*s.left) + "+" + to_string(*s.right); },
          [](const PendantSpec& s) {
            return "pendant:" + std::to_string(s.count) + "+" + to_string(*s.base);
          },
          [](const Graph6Spec& s) { return "g6:" + s.text; },
      },
      spec.node);
}

int vertex_count(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const PathSpec& s) { return s.n; },
          [](const CycleSpec& s) { return s.n; },
          [](const CompleteSpec& s) { return s.n; },
          [](const BipartiteSpec& s) { return s.left + s.right; },
          [](const MultipartiteSpec& s) { return std::accumulate(s.parts.begin(), s.parts.end(), 0); },
          [](const ThetaSpec& s) {
            int n = 2;
            for (int l : s.lengths) n += l - 1;
            return n;
          },
          [](const JoinSpec& s) { return vertex_count(*s.left) + vertex_count(*s.right); },
          [](const PendantSpec& s) { return vertex_count(*s.base) + s.count; },
          [](const Graph6Spec& s) { return static_cast<unsigned char>(s.text[0]) - 63; },
      },
      spec.node);
}

Graph build(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const PathSpec& s) {
            Graph g(s.n);
            for (int i = 0; i + 1 < s.n; ++i) g.add_edge(i, i + 1);
            return g;
          },
          [](const CycleSpec& s) {
            Graph g(s.n);
            for (int i = 0; i < s.n; ++i) g.add_edge(i, (i + 1) % s.n);
            return g;
          },
          [](const CompleteSpec& s) {
            Graph g(s.n);
            for (int a = 0; a < s.n; ++a) {
              for (int b = a + 1; b < s.n; ++b) g.add_edge(a, b);
            }
            return g;
          },
          [](const BipartiteSpec& s) {
            Graph g(s.left + s.right);
            std::vector<std::string> labels;
            for (int a = 0; a < s.left; ++a) labels.push_back("a" + std::to_string(a + 1));
            for (int b = 0; b < s.right; ++b) labels.push_back("b" + std::to_string(b + 1));
            for (int a = 0; a < s.left; ++a) {
              for (int b = 0; b < s.right; ++b) g.add_edge(a, s.left + b);
            }
            g.set_labels(std::move(labels));
            return g;
          },
          [](const MultipartiteSpec& s) { return build_multipartite(s.parts); },
          [](const ThetaSpec& s) { return build_theta(s.lengths); },
          [](const JoinSpec& s) { return join(build(*s.left), build(*s.right)); },
          [](const PendantSpec& s) {
            Graph g = build(*s.base);
            const int attach = g.order() - 1;
            for (int i = 0; i < s.count; ++i) g = g.with_pendant(attach);
            return g;
          },
          [](const Graph6Spec& s) { return from_graph6(s.text); },
      },
      spec.node);
}

Graph build_graph(std::string_view text) { return build(parse_family_spec(text)); }

Graph theta_222k(int k) {
  if (k < 1) throw InvalidArgument("theta_222k needs k >= 1");
  return build_theta({2, 2, 2 * k});
}

}  // namespace chromacount
