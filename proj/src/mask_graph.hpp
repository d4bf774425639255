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

// Internal: 64-bit mask view of a small graph for the exact searches.

#ifndef MONO_SRC_MASK_GRAPH_HPP
#define MONO_SRC_MASK_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "mono/graph.hpp"

namespace mono::detail {

using Mask = std::uint64_t;

inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline Mask bit(int v) { return Mask{1} << v; }
inline int lowest(Mask m) { return std::countr_zero(m); }

class MaskGraph {
 public:
  explicit MaskGraph(const EdgeColouredGraph& g)
      : n_(g.n()), r_(g.r()), adj_(static_cast<std::size_t>(g.n()) * g.r()) {
    for (Colour c = 0; c < r_; ++c)
      for (Vertex v = 0; v < n_; ++v) adj_[index(c, v)] = g.neighbours(v, c).to_mask();
  }

  int n() const { return n_; }
  int r() const { return r_; }
  Mask all() const { return low_bits(n_); }
  Mask adj(Colour c, Vertex v) const { return adj_[index(c, v)]; }

  /// Closure of `seed` under c-edges inside `within`.
  Mask reach(Colour c, Mask seed, Mask within) const {
    Mask seen = seed;
    Mask frontier = seed;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[index(c, lowest(f))];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool connected(Colour c, Mask set) const {
    if (set == 0) return false;
    return reach(c, set & (~set + 1), set) == set;
  }

  /// Components of G[within] in colour c, ordered by least member.
  std::vector<Mask> components(Colour c, Mask within) const {
    std::vector<Mask> out;
    while (within != 0) {
      Mask comp = reach(c, within & (~within + 1), within);
      out.push_back(comp);
      within &= ~comp;
    }
    return out;
  }

 private:
  std::size_t index(Colour c, Vertex v) const {
    return static_cast<std::size_t>(c) * n_ + v;
  }

  int n_;
  int r_;
  std::vector<Mask> adj_;
};

}  // namespace mono::detail

#endif  // MONO_SRC_MASK_GRAPH_HPP
