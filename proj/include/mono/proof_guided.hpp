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

// Constructive and randomised routines for partitioning and covering dense
// coloured graphs.
//
// Two-colour partition pipeline (minimum degree around 2n/3):
//   1. take a smallest blue component B;
//   2. grow a small red star U around some u in B whose red neighbourhood
//      dominates B, by sampling red neighbours of u;
//   3. close N = N_red(U) under "has at least log n red neighbours inside";
//   4. with W the rest and w its least vertex, split a random half S off
//      N_blue(w) ∩ closure and test whether (U ∪ closure) \ S is red
//      connected and W ∪ S is blue connected.
// Every "with positive probability" step is a bounded retry loop; running
// out of retries is a soft failure.
//
// Three-colour routines (minimum degree at least 7n/8) cover V by
// components of distinct colours.

#ifndef MONO_PROOF_GUIDED_HPP
#define MONO_PROOF_GUIDED_HPP

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mono/components.hpp"
#include "mono/cover.hpp"
#include "mono/exact.hpp"
#include "mono/graph.hpp"

namespace mono {

struct HeuristicConfig {
  std::uint64_t seed = 0;
  double log_base = std::numbers::e;
  /// Sampling probability is sample_coefficient * log n / n.
  double sample_coefficient = 13.0;
  /// |U| <= ceil(star_cap_coefficient * log n).
  double star_cap_coefficient = 27.0;
  /// A vertex joins the closure with >= ceil(closure_coefficient * log n)
  /// red neighbours inside it (never fewer than 1).
  double closure_coefficient = 1.0;
  int star_retries = 64;
  int split_retries = 64;
  /// Graphs with at most this many vertices fall back to exact search.
  int fallback_n = 16;
};

/// Which colour plays "red" and which "blue" in the partition pipeline.
struct ColourRoles {
  Colour red = kRed;
  Colour blue = kBlue;

  ColourRoles swapped() const { return {blue, red}; }
};

struct SplitState {
  VertexSet star;           ///< U, red connected
  VertexSet neighbourhood;  ///< N = N_red(U)
  VertexSet closure;        ///< N plus the appended vertices
  std::vector<Vertex> appended;
  VertexSet rest;           ///< W = V \ (U ∪ closure)
  Vertex pivot = -1;        ///< least vertex of W
  VertexSet pivot_blue;     ///< X = N_blue(pivot) ∩ closure
  VertexSet sample;         ///< S, the last half of X tried
};

double log_of(int n, const HeuristicConfig& cfg);
int star_cap(int n, const HeuristicConfig& cfg);
int closure_threshold(int n, const HeuristicConfig& cfg);

/// A c-component of minimum order; ties go to the least minimum vertex.
MonoComponent smallest_component(const EdgeColouredGraph& g, Colour c);

/// Seeded search for a red star U = {u} ∪ U' (u the least vertex of B,
/// U' sampled from red neighbours of u outside B) with |U| <= star_cap and
/// B ⊆ U ∪ N_red(U). Fills star and neighbourhood; nullopt once the retry
/// budget is spent.
std::optional<SplitState> build_dominating_star(const EdgeColouredGraph& g,
                                                const MonoComponent& b,
                                                const HeuristicConfig& cfg,
                                                ColourRoles roles = {});

/// Appends, lowest vertex first, any vertex outside U ∪ closure with at
/// least closure_threshold red neighbours in the closure, until none is
/// left; then sets rest.
SplitState extend_closure(const EdgeColouredGraph& g, SplitState state,
                          const HeuristicConfig& cfg, ColourRoles roles = {});

/// Random split of N_blue(pivot) ∩ closure. Returns the red/blue partition
/// once both sides are connected, the single red part when W is empty, or
/// nullopt after split_retries attempts.
std::optional<MonoPartition> random_two_sided_split(const EdgeColouredGraph& g,
                                                    SplitState& state,
                                                    const HeuristicConfig& cfg,
                                                    ColourRoles roles = {});

/// Full pipeline: direct split when a colour has at most two components,
/// then the star/closure/split route in both colour roles, then exact
/// search for small graphs. Every returned partition has been verified.
std::optional<MonoPartition> heuristic_two_partition(const EdgeColouredGraph& g,
                                                     const HeuristicConfig& cfg = {});

/// Needs r == 3 and 8·δ >= 7n (PreconditionError otherwise). Returns the
/// first red/blue/yellow triple whose common intersection has at least n/8
/// vertices, or nullopt. The triple is returned as found, not re-checked.
std::optional<MonoCover> triple_intersection_cover(const EdgeColouredGraph& g);

enum class DegreeCheck { kStrict, kDiagnostic };

/// Splits V into the `avoid`-component of vertex 0 and the rest (smaller
/// side first), takes the majority colour among crossing edges, and returns
/// the component of an endpoint of a crossing edge maximising
/// d_H(x) + d_H(y) in that colour's crossing graph H. Under 8·δ >= 7n its
/// order is at least 3n/8.
MonoComponent large_component_finder(const EdgeColouredGraph& g, Colour avoid,
                                     DegreeCheck check = DegreeCheck::kStrict);

/// Needs r == 2 and 4·δ >= 3n. Covers V with one red and one blue component
/// (or a single spanning one) following the common-neighbour argument.
MonoCover two_colour_distinct_cover(const EdgeColouredGraph& g);

enum class ClaimId {
  kSmallBlueComponent,
  kPairIntersection,
  kHalfOrderComponent,
  kLargeCrossingComponent,
  kDifferenceBound,
};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view text);

struct ClaimReport {
  bool holds = true;
  std::string detail;
  std::vector<MonoComponent> witness;
};

/// Whether g satisfies the hypotheses of the claim.
bool claim_hypotheses_hold(const EdgeColouredGraph& g, ClaimId id,
                           const SearchLimits& limits = {});

/// Evaluates the claim's conclusion on g. Throws PreconditionError when the
/// hypotheses fail.
ClaimReport claim_predicate_probe(const EdgeColouredGraph& g, ClaimId id,
                                  const SearchLimits& limits = {});

}  // namespace mono

#endif  // MONO_PROOF_GUIDED_HPP
