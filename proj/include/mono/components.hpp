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

#ifndef MONO_COMPONENTS_HPP
#define MONO_COMPONENTS_HPP

#include <string>
#include <vector>

#include "mono/graph.hpp"
#include "mono/vertex_set.hpp"

namespace mono {

/// A vertex set together with a colour in which it is connected.
///
/// Covers use maximal components; partitions may use any connected set.
struct MonoComponent {
  Colour colour = 0;
  VertexSet members;

  std::string to_string() const {
    return "(" + std::to_string(colour) + ", " + members.to_string() + ")";
  }
  friend bool operator==(const MonoComponent&, const MonoComponent&) = default;
};

using ComponentList = std::vector<MonoComponent>;

/// Maximal components of every colour, indexed by colour.
struct ComponentDecomposition {
  std::vector<ComponentList> by_colour;

  const ComponentList& operator[](Colour c) const { return by_colour[c]; }
  /// Position of the c-component containing x within by_colour[c].
  int index_of(Colour c, Vertex x) const;
};

/// Vertices reachable from `seed` along c-coloured edges that stay inside
/// `within`. `seed` must belong to `within`.
VertexSet reach(const EdgeColouredGraph& g, Colour c, Vertex seed, const VertexSet& within);

/// Maximal c-components, singletons included, ordered by least member.
ComponentList decompose(const EdgeColouredGraph& g, Colour c);
ComponentDecomposition decompose_all(const EdgeColouredGraph& g);

MonoComponent component_of(const EdgeColouredGraph& g, Colour c, Vertex x);

/// True iff W is non-empty and the c-edges induced on W connect it.
bool is_mono_connected(const EdgeColouredGraph& g, Colour c, const VertexSet& w);

}  // namespace mono

#endif  // MONO_COMPONENTS_HPP
