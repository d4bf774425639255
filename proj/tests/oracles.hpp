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

// Brute-force reference implementations for tests. They only read the
// colour matrix through EdgeColouredGraph::colour and use plain 64-bit
// masks, so they share no code with the library algorithms.

#ifndef MONO_TESTS_ORACLES_HPP
#define MONO_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mono/graph.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask full(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Union-find over the c-edges.
inline std::vector<Mask> components(const mono::EdgeColouredGraph& g, int c) {
  int n = g.n();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.colour(u, v) == c) parent[find(u)] = find(v);
  std::map<int, Mask> by_root;
  for (int v = 0; v < n; ++v) by_root[find(v)] |= Mask{1} << v;
  std::vector<Mask> out;
  for (auto& [root, m] : by_root) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  return out;
}

/// Connectivity of the c-edges induced on `set` (empty is not connected).
inline bool connected(const mono::EdgeColouredGraph& g, int c, Mask set) {
  if (set == 0) return false;
  Mask seen = set & -set;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < g.n(); ++u) {
      if (!(seen >> u & 1)) continue;
      for (int v = 0; v < g.n(); ++v) {
        if ((set >> v & 1) && !(seen >> v & 1) && g.colour(u, v) == c) {
          seen |= Mask{1} << v;
          grew = true;
        }
      }
    }
  }
  return seen == set;
}

inline int independence_number(const mono::EdgeColouredGraph& g) {
  int n = g.n();
  int best = 0;
  for (Mask s = 0; s <= full(n); ++s) {
    bool independent = true;
    for (int u = 0; u < n && independent; ++u)
      for (int v = u + 1; v < n && independent; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.colour(u, v) != mono::kNoEdge) independent = false;
    if (independent) best = std::max(best, std::popcount(s));
    if (s == full(n)) break;
  }
  return best;
}

/// All distinct components of all colours.
inline std::vector<std::pair<int, Mask>> all_components(const mono::EdgeColouredGraph& g) {
  std::vector<std::pair<int, Mask>> out;
  for (int c = 0; c < g.r(); ++c)
    for (Mask m : components(g, c)) out.emplace_back(c, m);
  return out;
}

/// Fewest components (any colours) whose union is V, by subset enumeration
/// over the deduplicated component masks.
inline int min_cover(const mono::EdgeColouredGraph& g) {
  std::set<Mask> unique;
  for (auto& [c, m] : all_components(g)) unique.insert(m);
  std::vector<Mask> comps(unique.begin(), unique.end());
  int k = static_cast<int>(comps.size());
  int best = k;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << k); ++pick) {
    Mask u = 0;
    for (int i = 0; i < k; ++i)
      if (pick >> i & 1) u |= comps[i];
    if (u == full(g.n())) best = std::min(best, std::popcount(pick));
  }
  return best;
}

/// True iff `set` is connected in some colour.
inline bool mono_connected(const mono::EdgeColouredGraph& g, Mask set) {
  for (int c = 0; c < g.r(); ++c)
    if (connected(g, c, set)) return true;
  return false;
}

/// Fewest monochromatic connected parts partitioning V, by recursion over
/// the part containing the least remaining vertex. Singletons always count.
inline int min_partition(const mono::EdgeColouredGraph& g) {
  std::map<Mask, int> memo;
  std::function<int(Mask)> solve = [&](Mask rest) -> int {
    if (rest == 0) return 0;
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    Mask low = rest & -rest;
    Mask others = rest & ~low;
    int best = 1 + solve(others);
    for (Mask sub = others;; sub = (sub - 1) & others) {
      Mask part = sub | low;
      if (part != low && mono_connected(g, part)) best = std::min(best, 1 + solve(rest & ~part));
      if (sub == 0) break;
    }
    return memo[rest] = best;
  };
  return solve(full(g.n()));
}

/// Whether V splits into two (or, for n == 1, one) monochromatic connected sets.
inline bool has_two_partition(const mono::EdgeColouredGraph& g) {
  int n = g.n();
  if (n == 1) return true;
  for (Mask a = 1; a < full(n); ++a) {
    Mask b = full(n) & ~a;
    if (mono_connected(g, a) && mono_connected(g, b)) return true;
  }
  return false;
}

/// Whether V is covered by at most one component of each colour.
inline bool has_distinct_cover(const mono::EdgeColouredGraph& g) {
  std::vector<std::vector<Mask>> per_colour;
  for (int c = 0; c < g.r(); ++c) {
    per_colour.push_back(components(g, c));
    per_colour.back().push_back(0);  // colour unused
  }
  std::function<bool(int, Mask)> go = [&](int c, Mask u) {
    if (c == g.r()) return u == full(g.n());
    for (Mask m : per_colour[c])
      if (go(c + 1, u | m)) return true;
    return false;
  };
  return go(0, 0);
}

/// Maximum bipartite matching by exhaustive DP over right-vertex subsets.
inline int max_matching(int left, int right, const std::vector<std::vector<int>>& adj) {
  std::vector<int> best(std::size_t{1} << right, -1);
  best[0] = 0;
  int answer = 0;
  for (int i = 0; i < left; ++i) {
    std::vector<int> next = best;
    for (std::size_t used = 0; used < best.size(); ++used) {
      if (best[used] < 0) continue;
      for (int j : adj[i]) {
        if (used >> j & 1) continue;
        std::size_t to = used | (std::size_t{1} << j);
        next[to] = std::max(next[to], best[used] + 1);
      }
    }
    best = std::move(next);
  }
  for (int v : best) answer = std::max(answer, v);
  return answer;
}

inline int min_degree(const mono::EdgeColouredGraph& g) {
  int best = g.n();
  for (int u = 0; u < g.n(); ++u) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v)
      if (v != u && g.colour(u, v) != mono::kNoEdge) ++d;
    best = std::min(best, d);
  }
  return best;
}

}  // namespace oracle

#endif  // MONO_TESTS_ORACLES_HPP
