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

#include "mono/cover.hpp"

#include <vector>

namespace mono {

std::string_view to_string(CoverMethod m) {
  switch (m) {
    case CoverMethod::kKoenig:
      return "koenig";
    case CoverMethod::kExact:
      return "exact";
    case CoverMethod::kConstructive:
      return "constructive";
  }
  return "unknown";
}

bool verify_connected(const EdgeColouredGraph& g, Colour c, const VertexSet& w) {
  std::vector<Vertex> members = w.to_vector();
  if (members.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : members) {
      if (!seen[v] && g.colour(u, v) == c) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == members.size();
}

bool verify_maximal(const EdgeColouredGraph& g, Colour c, const VertexSet& w) {
  for (Vertex u = 0; u < g.n(); ++u) {
    if (w.contains(u)) continue;
    for (Vertex v : w)
      if (g.colour(u, v) == c) return false;
  }
  return true;
}

namespace {

Verdict check_part(const EdgeColouredGraph& g, const MonoComponent& part, std::size_t i) {
  if (part.members.universe() != g.n())
    return Verdict::fail("part " + std::to_string(i) + " has the wrong universe");
  if (part.colour < 0 || part.colour >= g.r())
    return Verdict::fail("part " + std::to_string(i) + " has colour out of range");
  if (!verify_connected(g, part.colour, part.members))
    return Verdict::fail("part " + std::to_string(i) + " " + part.to_string() +
                         " is not connected in its colour");
  return Verdict::pass();
}

}  // namespace

Verdict check_cover(const EdgeColouredGraph& g, const std::vector<MonoComponent>& parts,
                    bool require_maximal) {
  std::vector<char> covered(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (Verdict v = check_part(g, parts[i], i); !v) return v;
    if (require_maximal && !verify_maximal(g, parts[i].colour, parts[i].members))
      return Verdict::fail("part " + std::to_string(i) + " is not a maximal component");
    for (Vertex x : parts[i].members) covered[x] = 1;
  }
  for (Vertex x = 0; x < g.n(); ++x)
    if (!covered[x]) return Verdict::fail("vertex " + std::to_string(x) + " is uncovered");
  return Verdict::pass();
}

Verdict check_cover(const EdgeColouredGraph& g, const MonoCover& cover) {
  return check_cover(g, cover.parts, true);
}

Verdict check_distinct_colour_cover(const EdgeColouredGraph& g, const MonoCover& cover) {
  std::vector<char> used(static_cast<std::size_t>(g.r()), 0);
  for (const MonoComponent& part : cover.parts) {
    if (part.colour < 0 || part.colour >= g.r()) return Verdict::fail("colour out of range");
    if (used[part.colour])
      return Verdict::fail("colour " + std::to_string(part.colour) + " used twice");
    used[part.colour] = 1;
  }
  return check_cover(g, cover);
}

Verdict check_partition(const EdgeColouredGraph& g, const MonoPartition& partition) {
  std::vector<char> owner(static_cast<std::size_t>(g.n()), 0);
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    if (Verdict v = check_part(g, partition.parts[i], i); !v) return v;
    for (Vertex x : partition.parts[i].members) {
      if (owner[x]) return Verdict::fail("vertex " + std::to_string(x) + " is in two parts");
      owner[x] = 1;
    }
  }
  for (Vertex x = 0; x < g.n(); ++x)
    if (!owner[x]) return Verdict::fail("vertex " + std::to_string(x) + " is in no part");
  return Verdict::pass();
}

}  // namespace mono
