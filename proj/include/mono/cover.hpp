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

#ifndef MONO_COVER_HPP
#define MONO_COVER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mono/components.hpp"
#include "mono/graph.hpp"

namespace mono {

enum class CoverMethod { kKoenig, kExact, kConstructive };

std::string_view to_string(CoverMethod m);

/// Monochromatic components whose union is V.
struct MonoCover {
  std::vector<MonoComponent> parts;
  CoverMethod method = CoverMethod::kExact;

  std::size_t size() const { return parts.size(); }
};

/// Pairwise disjoint monochromatic connected sets whose union is V.
struct MonoPartition {
  std::vector<MonoComponent> parts;

  std::size_t size() const { return parts.size(); }
};

/// Outcome of an independent certificate check. `reason` is empty when ok.
struct Verdict {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// The checks below walk the colour matrix directly and never consult the
// bitset adjacency or the components module, so they can audit both.

/// Connectivity of W in colour c; singletons pass, the empty set fails.
bool verify_connected(const EdgeColouredGraph& g, Colour c, const VertexSet& w);

/// True iff no vertex outside W has a c-edge into W.
bool verify_maximal(const EdgeColouredGraph& g, Colour c, const VertexSet& w);

/// Every part connected in its colour and the union is V. With
/// `require_maximal`, every part must also be a full component.
Verdict check_cover(const EdgeColouredGraph& g, const std::vector<MonoComponent>& parts,
                    bool require_maximal = true);
Verdict check_cover(const EdgeColouredGraph& g, const MonoCover& cover);

/// check_cover plus: at most one part per colour.
Verdict check_distinct_colour_cover(const EdgeColouredGraph& g, const MonoCover& cover);

/// Parts non-empty, connected in their colours, pairwise disjoint, union V.
Verdict check_partition(const EdgeColouredGraph& g, const MonoPartition& partition);

}  // namespace mono

#endif  // MONO_COVER_HPP
