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

// Covering a 2-coloured graph by monochromatic components through König's
// theorem.
//
// The auxiliary bipartite graph has the red components on the left, the
// blue components on the right, and an edge whenever the two intersect.
// Every vertex x yields the edge (C_red(x), C_blue(x)), so any vertex cover
// of the auxiliary graph, read back as components, covers V. A minimum
// vertex cover has the size of a maximum matching, and a matching of size
// t+1 forces an independent set of t+1 vertices lying in pairwise distinct
// red and blue components, which is incompatible with
// delta(G) >= (2n-2t-1)/(t+1).

#ifndef MONO_KOENIG_HPP
#define MONO_KOENIG_HPP

#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "mono/components.hpp"
#include "mono/cover.hpp"
#include "mono/error.hpp"
#include "mono/graph.hpp"

namespace mono {

/// Plain bipartite graph; adjacency[i] lists right vertices of left vertex i
/// in increasing order.
struct BipartiteGraph {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::vector<int>> adjacency;

  std::size_t edge_count() const;
  bool has_edge(int i, int j) const;
};

/// Red components vs blue components of a 2-coloured graph.
struct AuxBipartiteGraph {
  ComponentList left;
  ComponentList right;
  BipartiteGraph graph;
};

struct Matching {
  /// (left, right) pairs in increasing left order.
  std::vector<std::pair<int, int>> pairs;
  /// mate_left[i] is the right partner of i or -1; mate_right likewise.
  std::vector<int> mate_left;
  std::vector<int> mate_right;

  std::size_t size() const { return pairs.size(); }
};

/// Side-tagged vertex cover of a bipartite graph.
struct HCover {
  std::vector<int> left;
  std::vector<int> right;

  std::size_t size() const { return left.size() + right.size(); }
};

/// Raised by koenig_vertex_cover when the supplied matching admits an
/// augmenting path.
class MatchingNotMaximum : public Error {
 public:
  using Error::Error;
};

/// Throws PreconditionError unless g.r() == 2.
AuxBipartiteGraph build_auxiliary(const EdgeColouredGraph& g);

/// Maximum matching by repeated augmenting-path search. Left vertices are
/// tried in increasing order and each scans its neighbours lowest first, so
/// the result is reproducible.
Matching max_matching(const BipartiteGraph& h);
inline Matching max_matching(const AuxBipartiteGraph& h) { return max_matching(h.graph); }

/// Some augmenting path for m, as alternating left/right indices starting at
/// a free left vertex and ending at a free right vertex; nullopt if none.
std::optional<std::vector<int>> find_augmenting_path(const BipartiteGraph& h, const Matching& m);

/// König's construction: Z = everything reachable from free left vertices by
/// alternating paths; the cover is (left \ Z) together with (right ∩ Z).
HCover koenig_vertex_cover(const BipartiteGraph& h, const Matching& m);
inline HCover koenig_vertex_cover(const AuxBipartiteGraph& h, const Matching& m) {
  return koenig_vertex_cover(h.graph, m);
}

/// True iff every edge of h has an endpoint in the cover.
bool covers_all_edges(const BipartiteGraph& h, const HCover& cover);

/// Monochromatic cover of V read off a minimum vertex cover of the auxiliary
/// graph; its size equals the maximum matching size.
MonoCover cover_two_coloured(const EdgeColouredGraph& g);

/// (2n-2t-1)/(t+1) exactly.
boost::rational<long long> degree_threshold(long long n, long long t);

/// delta >= (2n-2t-1)/(t+1), evaluated without rounding.
bool meets_degree_threshold(long long delta, long long n, long long t);

/// Smallest integer degree meeting the threshold, i.e. ceil((2n-2t-1)/(t+1)).
long long integral_degree_threshold(long long n, long long t);

}  // namespace mono

#endif  // MONO_KOENIG_HPP
