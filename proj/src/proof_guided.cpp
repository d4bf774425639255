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

#include "mono/proof_guided.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mono/error.hpp"

namespace mono {

namespace {

// Stage tags keep the random streams of different steps independent.
constexpr std::uint64_t kStarStream = 0x5354;
constexpr std::uint64_t kSplitStream = 0x5350;

std::mt19937_64 stream(const HeuristicConfig& cfg, std::uint64_t tag, ColourRoles roles) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(roles.red),
                    static_cast<std::uint32_t>(roles.blue)};
  return std::mt19937_64(seq);
}

void require_two_colours(const EdgeColouredGraph& g, const char* what) {
  if (g.r() != 2) throw PreconditionError(std::string(what) + " needs exactly 2 colours");
}

void require_three_colours(const EdgeColouredGraph& g, const char* what) {
  if (g.r() != 3) throw PreconditionError(std::string(what) + " needs exactly 3 colours");
}

bool dense_for_three(const EdgeColouredGraph& g) {
  return 8LL * min_degree(g) >= 7LL * g.n();
}

}  // namespace

double log_of(int n, const HeuristicConfig& cfg) {
  return std::log(static_cast<double>(n)) / std::log(cfg.log_base);
}

int star_cap(int n, const HeuristicConfig& cfg) {
  return std::max(1, static_cast<int>(std::ceil(cfg.star_cap_coefficient * log_of(n, cfg))));
}

int closure_threshold(int n, const HeuristicConfig& cfg) {
  return std::max(1, static_cast<int>(std::ceil(cfg.closure_coefficient * log_of(n, cfg))));
}

MonoComponent smallest_component(const EdgeColouredGraph& g, Colour c) {
  ComponentList comps = decompose(g, c);
  auto best = std::min_element(comps.begin(), comps.end(),
                               [](const MonoComponent& a, const MonoComponent& b) {
                                 return a.members.size() < b.members.size();
                               });
  return *best;
}

std::optional<SplitState> build_dominating_star(const EdgeColouredGraph& g,
                                                const MonoComponent& b,
                                                const HeuristicConfig& cfg,
                                                ColourRoles roles) {
  require_two_colours(g, "build_dominating_star");
  if (b.members.empty()) throw PreconditionError("build_dominating_star: empty component");
  const int n = g.n();
  Vertex u = b.members.first();

  auto finish = [&](VertexSet star) {
    SplitState state;
    state.neighbourhood = colour_neighbourhood(g, star, roles.red);
    state.star = std::move(star);
    state.closure = state.neighbourhood;
    state.rest = VertexSet::full(n) - state.star - state.closure;
    return state;
  };

  if (b.members.size() == 1) return finish(VertexSet::singleton(n, u));

  VertexSet candidates = g.neighbours(u, roles.red) - b.members;
  double p = std::min(1.0, cfg.sample_coefficient * log_of(n, cfg) / n);
  int cap = star_cap(n, cfg);
  std::mt19937_64 rng = stream(cfg, kStarStream, roles);
  std::bernoulli_distribution coin(p);

  for (int attempt = 0; attempt < cfg.star_retries; ++attempt) {
    VertexSet star = VertexSet::singleton(n, u);
    for (Vertex v : candidates)
      if (coin(rng)) star.insert(v);
    if (star.size() > cap) continue;
    VertexSet reached = star | colour_neighbourhood(g, star, roles.red);
    if (b.members.is_subset_of(reached)) return finish(std::move(star));
  }
  return std::nullopt;
}

SplitState extend_closure(const EdgeColouredGraph& g, SplitState state,
                          const HeuristicConfig& cfg, ColourRoles roles) {
  const int n = g.n();
  const int threshold = closure_threshold(n, cfg);
  VertexSet outside = VertexSet::full(n) - state.star - state.closure;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v : outside) {
      if ((g.neighbours(v, roles.red) & state.closure).size() >= threshold) {
        state.closure.insert(v);
        state.appended.push_back(v);
        outside.erase(v);
        grew = true;
        break;
      }
    }
  }
  state.rest = std::move(outside);
  return state;
}

std::optional<MonoPartition> random_two_sided_split(const EdgeColouredGraph& g,
                                                    SplitState& state,
                                                    const HeuristicConfig& cfg,
                                                    ColourRoles roles) {
  const int n = g.n();
  VertexSet red_side = state.star | state.closure;
  if (state.rest.empty()) {
    if (!is_mono_connected(g, roles.red, red_side)) return std::nullopt;
    return MonoPartition{{{roles.red, red_side}}};
  }
  state.pivot = state.rest.first();
  state.pivot_blue = g.neighbours(state.pivot, roles.blue) & state.closure;

  std::mt19937_64 rng = stream(cfg, kSplitStream, roles);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < cfg.split_retries; ++attempt) {
    VertexSet sample(n);
    for (Vertex v : state.pivot_blue)
      if (coin(rng)) sample.insert(v);
    state.sample = sample;
    VertexSet red_part = red_side - sample;
    VertexSet blue_part = state.rest | sample;
    if (is_mono_connected(g, roles.red, red_part) && is_mono_connected(g, roles.blue, blue_part))
      return MonoPartition{{{roles.red, std::move(red_part)}, {roles.blue, std::move(blue_part)}}};
  }
  return std::nullopt;
}

namespace {

// Direct split when some colour has one or two components.
std::optional<MonoPartition> split_by_components(const EdgeColouredGraph& g) {
  for (Colour c = 0; c < g.r(); ++c) {
    ComponentList comps = decompose(g, c);
    if (comps.size() == 2) return MonoPartition{{comps[0], comps[1]}};
    if (comps.size() == 1) {
      // The last vertex a BFS discovers is a leaf of its BFS tree.
      VertexSet seen = VertexSet::singleton(g.n(), 0);
      std::vector<Vertex> order{0};
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : g.neighbours(order[i], c) - seen) {
          seen.insert(w);
          order.push_back(w);
        }
      }
      Vertex leaf = order.back();
      VertexSet rest = VertexSet::full(g.n());
      rest.erase(leaf);
      return MonoPartition{{{c, std::move(rest)}, {c, VertexSet::singleton(g.n(), leaf)}}};
    }
  }
  return std::nullopt;
}

std::optional<MonoPartition> star_route(const EdgeColouredGraph& g, const HeuristicConfig& cfg,
                                        ColourRoles roles) {
  MonoComponent b = smallest_component(g, roles.blue);
  std::optional<SplitState> state = build_dominating_star(g, b, cfg, roles);
  if (!state) return std::nullopt;
  SplitState closed = extend_closure(g, std::move(*state), cfg, roles);
  return random_two_sided_split(g, closed, cfg, roles);
}

}  // namespace

std::optional<MonoPartition> heuristic_two_partition(const EdgeColouredGraph& g,
                                                     const HeuristicConfig& cfg) {
  require_two_colours(g, "heuristic_two_partition");
  auto verified = [&](std::optional<MonoPartition> p) -> std::optional<MonoPartition> {
    if (p && check_partition(g, *p)) return p;
    return std::nullopt;
  };
  if (g.n() == 1) return MonoPartition{{{kRed, VertexSet::singleton(1, 0)}}};
  if (auto p = verified(split_by_components(g))) return p;
  if (auto p = verified(star_route(g, cfg, {}))) return p;
  if (auto p = verified(star_route(g, cfg, ColourRoles{}.swapped()))) return p;
  if (g.n() <= cfg.fallback_n) {
    SearchLimits limits;
    limits.two_partition_max_n = std::max(limits.two_partition_max_n, cfg.fallback_n);
    return verified(exists_two_partition(g, limits));
  }
  return std::nullopt;
}

std::optional<MonoCover> triple_intersection_cover(const EdgeColouredGraph& g) {
  require_three_colours(g, "triple_intersection_cover");
  if (!dense_for_three(g))
    throw PreconditionError("triple_intersection_cover needs 8*delta >= 7n");
  ComponentDecomposition d = decompose_all(g);
  for (const MonoComponent& red : d[kRed]) {
    for (const MonoComponent& blue : d[kBlue]) {
      VertexSet rb = red.members & blue.members;
      if (8 * rb.size() < g.n()) continue;
      for (const MonoComponent& yellow : d[kYellow]) {
        if (8 * (rb & yellow.members).size() >= g.n())
          return MonoCover{{red, blue, yellow}, CoverMethod::kConstructive};
      }
    }
  }
  return std::nullopt;
}

MonoComponent large_component_finder(const EdgeColouredGraph& g, Colour avoid,
                                     DegreeCheck check) {
  require_three_colours(g, "large_component_finder");
  if (avoid < 0 || avoid >= 3) throw PreconditionError("avoid colour out of range");
  if (check == DegreeCheck::kStrict && !dense_for_three(g))
    throw PreconditionError("large_component_finder needs 8*delta >= 7n");
  const int n = g.n();
  VertexSet side = component_of(g, avoid, 0).members;
  if (side.size() == n)
    throw PreconditionError("graph is connected in colour " + std::to_string(avoid));
  VertexSet other = side.complement();
  if (side.size() > other.size()) std::swap(side, other);

  Colour a = avoid == 0 ? 1 : 0;
  Colour b = 3 - avoid - a;
  std::size_t crossing_a = 0;
  std::size_t crossing_b = 0;
  for (Vertex x : side) {
    crossing_a += static_cast<std::size_t>((g.neighbours(x, a) & other).size());
    crossing_b += static_cast<std::size_t>((g.neighbours(x, b) & other).size());
  }
  Colour majority = crossing_b > crossing_a ? b : a;

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (Vertex x = 0; x < n; ++x)
    degree[x] = (g.neighbours(x, majority) & (side.contains(x) ? other : side)).size();

  Vertex best_x = -1;
  int best_score = -1;
  for (Vertex x : side) {
    for (Vertex y : g.neighbours(x, majority) & other) {
      int score = degree[x] + degree[y];
      if (score > best_score) {
        best_score = score;
        best_x = x;
      }
    }
  }
  if (best_x < 0) throw PreconditionError("no crossing edges between the two sides");
  return component_of(g, majority, best_x);
}

MonoCover two_colour_distinct_cover(const EdgeColouredGraph& g) {
  require_two_colours(g, "two_colour_distinct_cover");
  const int n = g.n();
  if (4LL * min_degree(g) < 3LL * n)
    throw PreconditionError("two_colour_distinct_cover needs 4*delta >= 3n");

  ComponentList red = decompose(g, kRed);
  if (red.size() == 1) return MonoCover{{red.front()}, CoverMethod::kConstructive};

  // Any two vertices of a red component of order <= n/2 share a blue
  // neighbour, so the blue component through it has order >= 3n/4.
  MonoComponent smallest = *std::min_element(
      red.begin(), red.end(),
      [](const auto& l, const auto& r) { return l.members.size() < r.members.size(); });
  MonoComponent big = component_of(g, kBlue, smallest.members.first());
  if (2 * big.members.size() <= n) {
    for (Colour c : {kRed, kBlue})
      for (const MonoComponent& comp : decompose(g, c))
        if (comp.members.size() > big.members.size()) big = comp;
  }
  if (2 * big.members.size() <= n)
    throw Error("two_colour_distinct_cover: no component of order > n/2");
  if (big.members.size() == n) return MonoCover{{big}, CoverMethod::kConstructive};

  Vertex x = big.members.complement().first();
  MonoComponent partner = component_of(g, big.colour == kRed ? kBlue : kRed, x);
  MonoCover out{{}, CoverMethod::kConstructive};
  if (big.colour == kRed) {
    out.parts = {big, partner};
  } else {
    out.parts = {partner, big};
  }
  if (!check_distinct_colour_cover(g, out))
    throw Error("two_colour_distinct_cover: constructed pair does not cover V");
  return out;
}

// ---------------------------------------------------------------------------
// Claim probes.

std::string_view to_string(ClaimId id) {
  switch (id) {
    case ClaimId::kSmallBlueComponent:
      return "small-blue-component";
    case ClaimId::kPairIntersection:
      return "pair-intersection";
    case ClaimId::kHalfOrderComponent:
      return "half-order-component";
    case ClaimId::kLargeCrossingComponent:
      return "large-crossing-component";
    case ClaimId::kDifferenceBound:
      return "difference-bound";
  }
  return "unknown";
}

std::optional<ClaimId> parse_claim_id(std::string_view text) {
  for (ClaimId id : {ClaimId::kSmallBlueComponent, ClaimId::kPairIntersection,
                     ClaimId::kHalfOrderComponent, ClaimId::kLargeCrossingComponent,
                     ClaimId::kDifferenceBound})
    if (to_string(id) == text) return id;
  return std::nullopt;
}

namespace {

struct ComponentPair {
  MonoComponent first;
  MonoComponent second;
};

// Pairs of components of distinct colours satisfying `keep`, colour pairs
// in increasing order.
template <typename Pred>
std::vector<ComponentPair> distinct_colour_pairs(const ComponentDecomposition& d, Pred keep) {
  std::vector<ComponentPair> out;
  int r = static_cast<int>(d.by_colour.size());
  for (Colour a = 0; a < r; ++a)
    for (Colour b = a + 1; b < r; ++b)
      for (const MonoComponent& p : d[a])
        for (const MonoComponent& q : d[b])
          if (keep(p, q)) out.push_back({p, q});
  return out;
}

bool has_two_partition(const EdgeColouredGraph& g, const SearchLimits& limits) {
  return exists_two_partition(g, limits).has_value();
}

}  // namespace

bool claim_hypotheses_hold(const EdgeColouredGraph& g, ClaimId id, const SearchLimits& limits) {
  const long long n = g.n();
  const long long delta = min_degree(g);
  switch (id) {
    case ClaimId::kSmallBlueComponent: {
      if (g.r() != 2 || 3 * delta < 2 * n - 5) return false;
      if (decompose(g, kRed).size() < 3 || decompose(g, kBlue).size() < 3) return false;
      return !has_two_partition(g, limits);
    }
    case ClaimId::kPairIntersection: {
      if (g.r() != 3 || !dense_for_three(g)) return false;
      ComponentDecomposition d = decompose_all(g);
      return !distinct_colour_pairs(d, [n](const auto& p, const auto& q) {
                return 4LL * (p.members & q.members).size() >= n;
              }).empty();
    }
    case ClaimId::kHalfOrderComponent: {
      if (g.r() != 3 || !dense_for_three(g)) return false;
      for (Colour c = 0; c < 3; ++c)
        for (const MonoComponent& comp : decompose(g, c))
          if (2LL * comp.members.size() >= n) return true;
      return false;
    }
    case ClaimId::kLargeCrossingComponent: {
      if (g.r() != 3 || !dense_for_three(g)) return false;
      for (Colour c = 0; c < 3; ++c)
        if (decompose(g, c).size() > 1) return true;
      return false;
    }
    case ClaimId::kDifferenceBound: {
      if (g.r() != 3 || !dense_for_three(g)) return false;
      ComponentDecomposition d = decompose_all(g);
      return !distinct_colour_pairs(d, [n](const auto& p, const auto& q) {
                return 8LL * p.members.size() >= 3 * n && 8LL * q.members.size() >= 3 * n;
              }).empty();
    }
  }
  return false;
}

ClaimReport claim_predicate_probe(const EdgeColouredGraph& g, ClaimId id,
                                  const SearchLimits& limits) {
  if (!claim_hypotheses_hold(g, id, limits))
    throw PreconditionError("hypotheses of " + std::string(to_string(id)) + " do not hold");
  const long long n = g.n();
  ClaimReport report;
  switch (id) {
    case ClaimId::kSmallBlueComponent: {
      // Smallest blue component has order at most (n+1)/6.
      MonoComponent b = smallest_component(g, kBlue);
      report.holds = 6LL * b.members.size() <= n + 1;
      report.detail = "smallest blue component has order " + std::to_string(b.members.size());
      report.witness = {b};
      break;
    }
    case ClaimId::kPairIntersection: {
      // Either the pair covers V, or the third colour's component through an
      // uncovered vertex meets the intersection in >= n/8 vertices.
      ComponentDecomposition d = decompose_all(g);
      ComponentPair pair = distinct_colour_pairs(d, [n](const auto& p, const auto& q) {
                             return 4LL * (p.members & q.members).size() >= n;
                           }).front();
      MonoCover cover{{pair.first, pair.second}, CoverMethod::kConstructive};
      VertexSet uncovered = (pair.first.members | pair.second.members).complement();
      if (!uncovered.empty()) {
        Colour third = 3 - pair.first.colour - pair.second.colour;
        MonoComponent extra = component_of(g, third, uncovered.first());
        cover.parts.push_back(extra);
      }
      Verdict v = check_distinct_colour_cover(g, cover);
      report.holds = v.ok;
      report.detail = v.ok ? "covered by " + std::to_string(cover.size()) + " components"
                           : v.reason;
      report.witness = cover.parts;
      break;
    }
    case ClaimId::kHalfOrderComponent: {
      std::optional<MonoCover> cover = distinct_colour_cover(g, limits);
      report.holds = cover.has_value();
      report.detail = cover ? "distinct-colour cover found" : "no distinct-colour cover";
      if (cover) report.witness = cover->parts;
      break;
    }
    case ClaimId::kLargeCrossingComponent: {
      for (Colour c = 0; c < 3; ++c) {
        if (decompose(g, c).size() == 1) continue;
        MonoComponent comp = large_component_finder(g, c);
        report.witness.push_back(comp);
        if (8LL * comp.members.size() < 3 * n) {
          report.holds = false;
          report.detail = "avoiding colour " + std::to_string(c) + " gave order " +
                          std::to_string(comp.members.size());
          return report;
        }
      }
      report.detail = "every finder component has order >= 3n/8";
      break;
    }
    case ClaimId::kDifferenceBound: {
      // For large R, B of distinct colours: |R\B| < n/4 or |B\R| < n/4,
      // unless R Δ B sits inside one component of the third colour.
      ComponentDecomposition d = decompose_all(g);
      auto pairs = distinct_colour_pairs(d, [n](const auto& p, const auto& q) {
        return 8LL * p.members.size() >= 3 * n && 8LL * q.members.size() >= 3 * n;
      });
      for (const ComponentPair& pair : pairs) {
        VertexSet only_first = pair.first.members - pair.second.members;
        VertexSet only_second = pair.second.members - pair.first.members;
        if (4LL * only_first.size() < n || 4LL * only_second.size() < n) continue;
        Colour third = 3 - pair.first.colour - pair.second.colour;
        MonoComponent host = component_of(g, third, only_first.first());
        if ((only_first | only_second).is_subset_of(host.members)) continue;
        report.holds = false;
        report.detail = "both differences are >= n/4 and not joined in colour " +
                        std::to_string(third);
        report.witness = {pair.first, pair.second};
        return report;
      }
      report.detail = "checked " + std::to_string(pairs.size()) + " pairs";
      break;
    }
  }
  return report;
}

}  // namespace mono
