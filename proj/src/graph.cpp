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

#include "mono/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mono/error.hpp"

namespace mono {

EdgeColouredGraph::EdgeColouredGraph(int n, int r) : n_(n), r_(r) {
  if (n < 1) throw InvalidEdge("graph needs at least one vertex");
  if (r < 1 || r > std::numeric_limits<std::int8_t>::max())
    throw InvalidEdge("colour count must be in 1..127");
  colours_.assign(static_cast<std::size_t>(n) * n, kNoEdge);
  by_colour_.assign(static_cast<std::size_t>(n) * r, VertexSet(n));
  all_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

void EdgeColouredGraph::add_edge(Vertex u, Vertex v, Colour c) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw InvalidEdge("edge endpoint out of range");
  if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
  if (c < 0 || c >= r_) throw InvalidEdge("colour " + std::to_string(c) + " out of range");
  if (adjacent(u, v))
    throw InvalidEdge("duplicate edge " + std::to_string(std::min(u, v)) + " " +
                      std::to_string(std::max(u, v)));
  colours_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::int8_t>(c);
  colours_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::int8_t>(c);
  by_colour_[static_cast<std::size_t>(c) * n_ + u].insert(v);
  by_colour_[static_cast<std::size_t>(c) * n_ + v].insert(u);
  all_[u].insert(v);
  all_[v].insert(u);
  ++edges_;
}

void EdgeColouredGraph::remove_edge(Vertex u, Vertex v) {
  Colour c = colour(u, v);
  if (c == kNoEdge) return;
  colours_[static_cast<std::size_t>(u) * n_ + v] = kNoEdge;
  colours_[static_cast<std::size_t>(v) * n_ + u] = kNoEdge;
  by_colour_[static_cast<std::size_t>(c) * n_ + u].erase(v);
  by_colour_[static_cast<std::size_t>(c) * n_ + v].erase(u);
  all_[u].erase(v);
  all_[v].erase(u);
  --edges_;
}

std::size_t EdgeColouredGraph::edge_count(Colour c) const {
  std::size_t twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += static_cast<std::size_t>(neighbours(v, c).size());
  return twice / 2;
}

std::vector<Edge> EdgeColouredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (Colour c = colour(u, v); c != kNoEdge) out.push_back({u, v, c});
  return out;
}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly `count` integers from the line; anything else is an error.
std::vector<long long> read_fields(const std::string& line, std::size_t lineno,
                                   std::size_t count) {
  std::istringstream ls(line);
  std::vector<long long> fields;
  long long x = 0;
  while (ls >> x) fields.push_back(x);
  if (!ls.eof()) throw ParseError(lineno, "expected integers, got '" + line + "'");
  if (fields.size() != count)
    throw ParseError(lineno, "expected " + std::to_string(count) + " fields, got " +
                                 std::to_string(fields.size()));
  return fields;
}

}  // namespace

EdgeColouredGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0;
  long long r = 0;
  while (!have_header && std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto f = read_fields(line, lineno, 2);
    n = f[0];
    r = f[1];
    if (n < 1 || n > (1 << 20)) throw ParseError(lineno, "vertex count out of range");
    if (r < 1 || r > 127) throw ParseError(lineno, "colour count out of range");
    have_header = true;
  }
  if (!have_header) throw ParseError(0, "missing 'n r' header");

  EdgeColouredGraph g(static_cast<int>(n), static_cast<int>(r));
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    auto f = read_fields(line, lineno, 3);
    long long u = f[0];
    long long v = f[1];
    long long c = f[2];
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "vertex out of range");
    if (u > v) throw ParseError(lineno, "edge must be written with u < v");
    if (c < 0 || c >= r) throw ParseError(lineno, "colour " + std::to_string(c) + " out of range");
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
      throw ParseError(lineno, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(c));
  }
  return g;
}

EdgeColouredGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

EdgeColouredGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(const EdgeColouredGraph& g, std::ostream& out) {
  out << g.n() << ' ' << g.r() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
}

std::string to_text(const EdgeColouredGraph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

void save_graph(const EdgeColouredGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_graph(g, out);
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

int min_degree(const EdgeColouredGraph& g) {
  int best = g.n();
  for (Vertex v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int colour_degree(const EdgeColouredGraph& g, Vertex x, Colour c) {
  if (x < 0 || x >= g.n()) throw std::out_of_range("vertex " + std::to_string(x));
  if (c < 0 || c >= g.r()) throw std::out_of_range("colour " + std::to_string(c));
  return g.neighbours(x, c).size();
}

VertexSet colour_neighbourhood(const EdgeColouredGraph& g, const VertexSet& w, Colour c) {
  VertexSet out(g.n());
  for (Vertex v : w) out |= g.neighbours(v, c);
  return out - w;
}

namespace {

using Mask = std::uint64_t;

// Maximum independent set inside `candidates`, branching on the vertex of
// largest degree within the candidate set.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const EdgeColouredGraph& g) : adj_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) adj_[v] = g.neighbours(v).to_mask();
  }

  int solve(Mask all) {
    best_ = 0;
    expand(all, 0);
    return best_;
  }

 private:
  void expand(Mask cand, int taken) {
    if (taken + std::popcount(cand) <= best_) return;
    // Peel off vertices with no neighbour among the candidates.
    int pivot = -1;
    int pivot_deg = -1;
    for (Mask m = cand; m != 0; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(adj_[v] & cand);
      if (d == 0) {
        cand &= ~(Mask{1} << v);
        ++taken;
      } else if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    if (pivot < 0) {
      best_ = std::max(best_, taken);
      return;
    }
    if (taken + std::popcount(cand) <= best_) return;
    Mask bit = Mask{1} << pivot;
    expand(cand & ~bit & ~adj_[pivot], taken + 1);
    expand(cand & ~bit, taken);
  }

  std::vector<Mask> adj_;
  int best_ = 0;
};

}  // namespace

int independence_number(const EdgeColouredGraph& g, int max_n) {
  if (g.n() > max_n || g.n() > 64)
    throw LimitExceeded("independence_number: n=" + std::to_string(g.n()) +
                        " exceeds limit " + std::to_string(std::min(max_n, 64)));
  Mask all = g.n() == 64 ? ~Mask{0} : (Mask{1} << g.n()) - 1;
  return IndependentSetSearch(g).solve(all);
}

GraphStats graph_stats(const EdgeColouredGraph& g, int alpha_max_n) {
  GraphStats s;
  s.n = g.n();
  s.r = g.r();
  s.min_degree = min_degree(g);
  s.independence_number = independence_number(g, alpha_max_n);
  s.colour_degrees.assign(static_cast<std::size_t>(g.n()), std::vector<int>(g.r(), 0));
  for (Vertex x = 0; x < g.n(); ++x)
    for (Colour c = 0; c < g.r(); ++c) s.colour_degrees[x][c] = g.neighbours(x, c).size();
  return s;
}

}  // namespace mono
