// Copyright 2026 The Mono Authors
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

#ifndef MONO_GRAPH_HPP
#define MONO_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mono/vertex_set.hpp"

namespace mono {

/// Colour stored for a vertex pair with no edge.
inline constexpr Colour kNoEdge = -1;

/// Conventional names for the first three colours.
inline constexpr Colour kRed = 0;
inline constexpr Colour kBlue = 1;
inline constexpr Colour kYellow = 2;

struct Edge {
  Vertex u;
  Vertex v;
  Colour colour;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple graph on vertices 0..n-1 whose edges each carry one of r colours.
///
/// Per-colour adjacency is kept as bitsets and stays symmetric. Once built
/// the graph is meant to be shared read-only; `add_edge`/`remove_edge` are
/// construction-time mutators.
class EdgeColouredGraph {
 public:
  EdgeColouredGraph(int n, int r);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }

  /// Throws InvalidEdge on a self-loop, an out-of-range endpoint or colour,
  /// or a pair that already carries an edge.
  void add_edge(Vertex u, Vertex v, Colour c);
  /// No-op when the pair carries no edge.
  void remove_edge(Vertex u, Vertex v);

  /// kNoEdge when u and v are not adjacent (or u == v).
  Colour colour(Vertex u, Vertex v) const {
    return colours_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool adjacent(Vertex u, Vertex v) const { return colour(u, v) != kNoEdge; }

  const VertexSet& neighbours(Vertex v, Colour c) const {
    return by_colour_[static_cast<std::size_t>(c) * n_ + v];
  }
  const VertexSet& neighbours(Vertex v) const { return all_[v]; }

  int degree(Vertex v) const { return all_[v].size(); }

  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t edge_count(Colour c) const;

  /// Edges with u < v in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  friend bool operator==(const EdgeColouredGraph& a, const EdgeColouredGraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.colours_ == b.colours_;
  }

 private:
  int n_;
  int r_;
  std::size_t edges_ = 0;
  std::vector<std::int8_t> colours_;
  std::vector<VertexSet> by_colour_;
  std::vector<VertexSet> all_;
};

/// Summary statistics used by `mono analyze`.
struct GraphStats {
  int n = 0;
  int r = 0;
  int min_degree = 0;
  int independence_number = 0;
  /// colour_degrees[x][c] = d_c(x).
  std::vector<std::vector<int>> colour_degrees;
};

// Text format: first non-comment line "n r", then one "u v c" line per edge
// with u < v. Lines starting with '#' and blank lines are skipped.
EdgeColouredGraph parse_graph(std::istream& in);
EdgeColouredGraph parse_graph(const std::string& text);
EdgeColouredGraph load_graph(const std::filesystem::path& path);

/// Canonical form: header, then edges sorted by (u, v).
void write_graph(const EdgeColouredGraph& g, std::ostream& out);
std::string to_text(const EdgeColouredGraph& g);
void save_graph(const EdgeColouredGraph& g, const std::filesystem::path& path);

int min_degree(const EdgeColouredGraph& g);

/// d_c(x); throws std::out_of_range for a bad vertex or colour.
int colour_degree(const EdgeColouredGraph& g, Vertex x, Colour c);

/// Vertices outside W joined to some member of W by a c-coloured edge.
VertexSet colour_neighbourhood(const EdgeColouredGraph& g, const VertexSet& w,
                               Colour c);

/// Exact independence number by branch and bound. Throws LimitExceeded when
/// n exceeds max_n.
int independence_number(const EdgeColouredGraph& g, int max_n = 64);

GraphStats graph_stats(const EdgeColouredGraph& g, int alpha_max_n = 64);

}  // namespace mono

#endif  // MONO_GRAPH_HPP
