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

// Deterministic extremal colourings and seeded random dense colourings.

#ifndef MONO_CONSTRUCTIONS_HPP
#define MONO_CONSTRUCTIONS_HPP

#include <cstdint>
#include <vector>

#include "mono/graph.hpp"
#include "mono/vertex_set.hpp"

namespace mono {

/// Vertex layout of the cover-t example: x[i] is x_{i+1}, parts[i] is A_{i+1}.
struct CoverTLayout {
  std::vector<Vertex> x;
  std::vector<VertexSet> parts;
};

/// Vertex layout of the antipodal example. parts[s] is A(s) where the
/// coordinate s_1 is the most significant bit of s.
struct AntipodalLayout {
  int r = 0;
  std::vector<VertexSet> parts;
};

/// X = {x_1..x_{t+1}} takes vertices 0..t, then A_1, ..., A_{t+1} follow in
/// order. When the A-parts cannot be equal, the larger ones go to odd
/// indices first, then to even indices, both ascending.
CoverTLayout cover_t_layout(int n, int t);

/// Two-coloured graph on n >= 2(t+1) vertices with minimum degree
/// ceil((2n-2t-1)/(t+1)) - 1 in which x_1..x_{t+1} lie in pairwise distinct
/// red and blue components:
///  - each A_i is a clique in `clique_colour`;
///  - A_i is completely joined to A_{i+1} for i <= t, red iff i is odd;
///  - x_i (i <= t) is joined to A_i and A_{i+1}, red iff i is odd;
///  - x_{t+1} is joined blue to A_1 and to A_{t+1}, red iff t is even.
EdgeColouredGraph build_cover_t_example(int n, int t, Colour clique_colour = kRed);

AntipodalLayout antipodal_layout(int n, int r);

/// r-coloured graph on n >= 2^r vertices split as equally as possible into
/// parts A(s), s in {0,1}^r (larger parts at smaller s). A(s) and A(s') are
/// joined unless s' is the complement of s, and the edge colour is the
/// first coordinate on which s and s' agree (coordinate 1 -> colour 0).
EdgeColouredGraph build_antipodal_example(int n, int r);

/// Starts from K_n, visits the edges in seeded random order deleting each
/// one whose endpoints both stay at degree >= min_degree, then colours the
/// survivors uniformly at random. Same arguments, same graph.
EdgeColouredGraph random_dense_coloured(int n, int r, int min_degree, std::uint64_t seed);

enum class ConstructionKind { kCoverT, kAntipodal, kRandomDense };

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::kCoverT;
  int n = 0;
  int t = 0;
  int r = 2;
  int min_degree = 0;
  std::uint64_t seed = 0;
  Colour clique_colour = kRed;
};

EdgeColouredGraph build(const ConstructionSpec& spec);

}  // namespace mono

#endif  // MONO_CONSTRUCTIONS_HPP
