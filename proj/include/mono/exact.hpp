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

// Exact oracles for small graphs. All of them work on 64-bit vertex masks,
// so no limit may exceed 64.

#ifndef MONO_EXACT_HPP
#define MONO_EXACT_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "mono/cover.hpp"
#include "mono/graph.hpp"

namespace mono {

struct SearchLimits {
  int cover_max_n = 24;
  int partition_max_n = 16;
  int two_partition_max_n = 16;
  int distinct_max_n = 64;
  int distinct_max_colours = 3;
  /// Search nodes before LimitExceeded is raised.
  std::uint64_t node_budget = std::uint64_t{1} << 40;
};

struct MinCover {
  int size = 0;
  MonoCover witness;
};

struct MinPartition {
  int size = 0;
  MonoPartition witness;
};

/// Minimum number of maximal monochromatic components covering V, with a
/// witness. Iterative deepening over the at most r components that contain
/// the least-covered vertex.
MinCover min_mono_cover(const EdgeColouredGraph& g, const SearchLimits& limits = {});

/// Minimum number of parts in a partition of V into monochromatic connected
/// sets. Parts are grown from the least unassigned vertex; failed
/// (remaining set, budget) pairs are memoised. Singleton parts carry colour 0.
MinPartition min_mono_partition(const EdgeColouredGraph& g, const SearchLimits& limits = {});

/// A partition into two monochromatic connected sets (any colour pairing),
/// or nullopt. For n == 1 the single-part partition is returned. Requires
/// r == 2.
std::optional<MonoPartition> exists_two_partition(const EdgeColouredGraph& g,
                                                  const SearchLimits& limits = {});

/// A cover using at most one component of each colour, or nullopt. Covers
/// with fewer parts are preferred.
std::optional<MonoCover> distinct_colour_cover(const EdgeColouredGraph& g,
                                               const SearchLimits& limits = {});

enum class EnumerationMode {
  kCompleteGraph,  ///< every pair is an edge; digit = colour
  kWithNonEdges,   ///< digit 0 = no edge, digit d = colour d-1
};

struct EnumerationStats {
  std::uint64_t visited = 0;  ///< colourings that met the degree filter
  std::uint64_t passed = 0;   ///< visitor returned true
  std::uint64_t failed = 0;   ///< visitor returned false
};

struct EnumerationOptions {
  int threads = 1;
  /// When true the visitor is never entered concurrently.
  bool serial_visitor = true;
  /// Largest admissible state space, radix^(n(n-1)/2).
  std::uint64_t budget = std::uint64_t{1} << 36;
};

/// Visitor receives the graph and its mixed-radix index (first edge in
/// (u, v) order is the most significant digit) and returns pass/fail.
using ColouringVisitor = std::function<bool(const EdgeColouredGraph&, std::uint64_t index)>;

/// Visits every edge-state assignment on n vertices with minimum degree at
/// least min_degree, in increasing index order when single-threaded.
/// Throws LimitExceeded when the state space exceeds options.budget.
EnumerationStats enumerate_colourings(int n, int r, EnumerationMode mode, int min_degree,
                                      const ColouringVisitor& visitor,
                                      const EnumerationOptions& options = {});

/// Rebuilds the colouring with the given mixed-radix index.
EdgeColouredGraph colouring_from_index(int n, int r, EnumerationMode mode, std::uint64_t index);

}  // namespace mono

#endif  // MONO_EXACT_HPP
