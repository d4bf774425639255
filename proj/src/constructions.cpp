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

#include "mono/constructions.hpp"

#include <algorithm>
#include <random>

#include "mono/error.hpp"

namespace mono {

CoverTLayout cover_t_layout(int n, int t) {
  if (t < 1) throw PreconditionError("cover-t example needs t >= 1");
  if (n < 2 * (t + 1))
    throw PreconditionError("cover-t example needs n >= 2(t+1), got n=" + std::to_string(n) +
                            ", t=" + std::to_string(t));
  int parts = t + 1;
  int spread = n - parts;
  int base = spread / parts;
  int larger = spread % parts;

  // 1-based odd indices first, then even ones.
  std::vector<int> order;
  for (int i = 1; i <= parts; i += 2) order.push_back(i);
  for (int i = 2; i <= parts; i += 2) order.push_back(i);
  std::vector<int> size(static_cast<std::size_t>(parts) + 1, base);
  for (int k = 0; k < larger; ++k) ++size[order[k]];

  CoverTLayout layout;
  for (Vertex v = 0; v < parts; ++v) layout.x.push_back(v);
  Vertex next = parts;
  for (int i = 1; i <= parts; ++i) {
    VertexSet part(n);
    for (int k = 0; k < size[i]; ++k) part.insert(next++);
    layout.parts.push_back(std::move(part));
  }
  return layout;
}

EdgeColouredGraph build_cover_t_example(int n, int t, Colour clique_colour) {
  if (clique_colour != kRed && clique_colour != kBlue)
    throw PreconditionError("clique colour must be 0 or 1");
  CoverTLayout layout = cover_t_layout(n, t);
  EdgeColouredGraph g(n, 2);
  int parts = t + 1;
  auto part = [&](int i) -> const VertexSet& { return layout.parts[i - 1]; };
  auto x = [&](int i) { return layout.x[i - 1]; };
  auto join = [&](Vertex v, const VertexSet& set, Colour c) {
    for (Vertex w : set) g.add_edge(v, w, c);
  };

  for (int i = 1; i <= parts; ++i) {
    std::vector<Vertex> members = part(i).to_vector();
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        g.add_edge(members[a], members[b], clique_colour);
  }
  for (int i = 1; i <= t; ++i) {
    Colour c = i % 2 == 1 ? kRed : kBlue;
    for (Vertex v : part(i)) join(v, part(i + 1), c);
  }
  for (int i = 1; i <= t; ++i) {
    Colour c = i % 2 == 1 ? kRed : kBlue;
    join(x(i), part(i), c);
    join(x(i), part(i + 1), c);
  }
  join(x(parts), part(1), kBlue);
  join(x(parts), part(parts), t % 2 == 0 ? kRed : kBlue);
  return g;
}

AntipodalLayout antipodal_layout(int n, int r) {
  if (r < 2) throw PreconditionError("antipodal example needs r >= 2");
  if (r > 30 || n < (1 << r))
    throw PreconditionError("antipodal example needs n >= 2^r, got n=" + std::to_string(n) +
                            ", r=" + std::to_string(r));
  int count = 1 << r;
  int base = n / count;
  int larger = n % count;
  AntipodalLayout layout;
  layout.r = r;
  Vertex next = 0;
  for (int s = 0; s < count; ++s) {
    VertexSet part(n);
    int size = base + (s < larger ? 1 : 0);
    for (int k = 0; k < size; ++k) part.insert(next++);
    layout.parts.push_back(std::move(part));
  }
  return layout;
}

EdgeColouredGraph build_antipodal_example(int n, int r) {
  AntipodalLayout layout = antipodal_layout(n, r);
  int count = 1 << r;
  EdgeColouredGraph g(n, r);
  // Colour of the pair (s, s'): first agreeing coordinate, or none.
  auto pair_colour = [r](int s, int s2) -> Colour {
    for (int i = 0; i < r; ++i) {
      int b = r - 1 - i;
      if (((s >> b) & 1) == ((s2 >> b) & 1)) return i;
    }
    return kNoEdge;
  };
  for (int s = 0; s < count; ++s) {
    for (int s2 = s; s2 < count; ++s2) {
      Colour c = pair_colour(s, s2);
      if (c == kNoEdge) continue;
      for (Vertex u : layout.parts[s])
        for (Vertex v : layout.parts[s2])
          if (s != s2 || u < v) g.add_edge(u, v, c);
    }
  }
  return g;
}

EdgeColouredGraph random_dense_coloured(int n, int r, int min_degree, std::uint64_t seed) {
  if (n < 1 || r < 1) throw PreconditionError("random_dense_coloured needs n >= 1, r >= 1");
  if (min_degree > n - 1)
    throw PreconditionError("min degree " + std::to_string(min_degree) +
                            " impossible on " + std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<int> degree(static_cast<std::size_t>(n), n - 1);
  std::vector<char> keep(static_cast<std::size_t>(n) * n, 1);
  for (auto [u, v] : pairs) {
    if (degree[u] > min_degree && degree[v] > min_degree) {
      --degree[u];
      --degree[v];
      keep[static_cast<std::size_t>(u) * n + v] = 0;
    }
  }
  EdgeColouredGraph g(n, r);
  std::uniform_int_distribution<int> colour(0, r - 1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep[static_cast<std::size_t>(u) * n + v]) g.add_edge(u, v, colour(rng));
  return g;
}

EdgeColouredGraph build(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::kCoverT:
      return build_cover_t_example(spec.n, spec.t, spec.clique_colour);
    case ConstructionKind::kAntipodal:
      return build_antipodal_example(spec.n, spec.r);
    case ConstructionKind::kRandomDense:
      return random_dense_coloured(spec.n, spec.r, spec.min_degree, spec.seed);
  }
  throw PreconditionError("unknown construction kind");
}

}  // namespace mono
