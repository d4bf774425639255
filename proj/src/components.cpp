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

#include "mono/components.hpp"

#include <stdexcept>

namespace mono {

int ComponentDecomposition::index_of(Colour c, Vertex x) const {
  const ComponentList& list = by_colour[c];
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].members.contains(x)) return static_cast<int>(i);
  return -1;
}

VertexSet reach(const EdgeColouredGraph& g, Colour c, Vertex seed, const VertexSet& within) {
  VertexSet seen = VertexSet::singleton(g.n(), seed);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.n());
    for (Vertex v : frontier) next |= g.neighbours(v, c);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

ComponentList decompose(const EdgeColouredGraph& g, Colour c) {
  if (c < 0 || c >= g.r()) throw std::out_of_range("colour " + std::to_string(c));
  ComponentList out;
  VertexSet remaining = VertexSet::full(g.n());
  for (Vertex v = remaining.first(); v >= 0; v = remaining.first()) {
    VertexSet comp = reach(g, c, v, remaining);
    remaining -= comp;
    out.push_back({c, std::move(comp)});
  }
  return out;
}

ComponentDecomposition decompose_all(const EdgeColouredGraph& g) {
  ComponentDecomposition d;
  d.by_colour.reserve(static_cast<std::size_t>(g.r()));
  for (Colour c = 0; c < g.r(); ++c) d.by_colour.push_back(decompose(g, c));
  return d;
}

MonoComponent component_of(const EdgeColouredGraph& g, Colour c, Vertex x) {
  if (c < 0 || c >= g.r()) throw std::out_of_range("colour " + std::to_string(c));
  if (x < 0 || x >= g.n()) throw std::out_of_range("vertex " + std::to_string(x));
  return {c, reach(g, c, x, VertexSet::full(g.n()))};
}

bool is_mono_connected(const EdgeColouredGraph& g, Colour c, const VertexSet& w) {
  Vertex start = w.first();
  if (start < 0) return false;
  return reach(g, c, start, w).size() == w.size();
}

}  // namespace mono
