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

#include <gtest/gtest.h>

#include "mono/components.hpp"
#include "mono/constructions.hpp"
#include "mono/cover.hpp"

namespace {

using mono::EdgeColouredGraph;
using mono::MonoComponent;
using mono::VertexSet;

// 0-1 red, 1-2 red, 2-3 blue.
EdgeColouredGraph path4() {
  EdgeColouredGraph g(4, 2);
  g.add_edge(0, 1, mono::kRed);
  g.add_edge(1, 2, mono::kRed);
  g.add_edge(2, 3, mono::kBlue);
  return g;
}

MonoComponent part(int n, mono::Colour c, std::vector<int> v) {
  return {c, VertexSet::from_vector(n, v)};
}

TEST(Verifier, Cover) {
  EdgeColouredGraph g = path4();
  EXPECT_TRUE(mono::check_cover(g, {part(4, 0, {0, 1, 2}), part(4, 1, {2, 3})}).ok);
  // Missing vertex 3.
  mono::Verdict v = mono::check_cover(g, {part(4, 0, {0, 1, 2})});
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.reason.empty());
  // Not maximal: {0,1} is connected but not a whole red component.
  EXPECT_FALSE(mono::check_cover(g, {part(4, 0, {0, 1}), part(4, 1, {2, 3})}).ok);
  EXPECT_TRUE(mono::check_cover(g, {part(4, 0, {0, 1}), part(4, 1, {2, 3})}, false).ok);
  // Not connected in its colour.
  EXPECT_FALSE(mono::check_cover(g, {part(4, 1, {0, 1, 2, 3})}, false).ok);
}

TEST(Verifier, DistinctColours) {
  EdgeColouredGraph g = path4();
  mono::MonoCover ok{{part(4, 0, {0, 1, 2}), part(4, 1, {2, 3})}};
  EXPECT_TRUE(mono::check_distinct_colour_cover(g, ok).ok);
  mono::MonoCover twice{{part(4, 0, {0, 1, 2}), part(4, 0, {3}), part(4, 1, {2, 3})}};
  EXPECT_TRUE(mono::check_cover(g, twice).ok);
  EXPECT_FALSE(mono::check_distinct_colour_cover(g, twice).ok);
}

TEST(Verifier, Partition) {
  EdgeColouredGraph g = path4();
  EXPECT_TRUE(mono::check_partition(g, {{part(4, 0, {0, 1}), part(4, 1, {2, 3})}}).ok);
  // Overlap.
  EXPECT_FALSE(mono::check_partition(g, {{part(4, 0, {0, 1, 2}), part(4, 1, {2, 3})}}).ok);
  // Empty part.
  EXPECT_FALSE(
      mono::check_partition(g, {{part(4, 0, {0, 1, 2}), part(4, 1, {3}), part(4, 1, {})}}).ok);
  // Disconnected part.
  EXPECT_FALSE(mono::check_partition(g, {{part(4, 0, {0, 2}), part(4, 1, {1, 3})}}).ok);
  // Not spanning.
  EXPECT_FALSE(mono::check_partition(g, {{part(4, 0, {0, 1})}}).ok);
}

TEST(Verifier, Maximality) {
  EdgeColouredGraph g = path4();
  EXPECT_TRUE(mono::verify_maximal(g, 0, VertexSet::from_vector(4, {0, 1, 2})));
  EXPECT_FALSE(mono::verify_maximal(g, 0, VertexSet::from_vector(4, {0, 1})));
  EXPECT_TRUE(mono::verify_maximal(g, 1, VertexSet::from_vector(4, {0})));
}

TEST(Verifier, MethodNames) {
  EXPECT_EQ(mono::to_string(mono::CoverMethod::kKoenig), "koenig");
  EXPECT_EQ(mono::to_string(mono::CoverMethod::kExact), "exact");
  EXPECT_EQ(mono::to_string(mono::CoverMethod::kConstructive), "constructive");
}

}  // namespace
