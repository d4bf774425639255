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

#include <random>

#include "mono/components.hpp"
#include "mono/constructions.hpp"
#include "mono/cover.hpp"
#include "oracles.hpp"

namespace {

using mono::EdgeColouredGraph;
using mono::MonoComponent;
using mono::VertexSet;

EdgeColouredGraph all_red_k(int n, int r = 2) {
  EdgeColouredGraph g(n, r);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, mono::kRed);
  return g;
}

TEST(Components, AllRedK4) {
  EdgeColouredGraph g = all_red_k(4);
  auto red = mono::decompose(g, mono::kRed);
  ASSERT_EQ(red.size(), 1u);
  EXPECT_EQ(red[0].members.to_string(), "{0,1,2,3}");
  auto blue = mono::decompose(g, mono::kBlue);
  ASSERT_EQ(blue.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(blue[i].members.to_vector(), std::vector<int>{i});
  EXPECT_EQ(mono::component_of(g, mono::kRed, 2).members.size(), 4);
  EXPECT_EQ(mono::component_of(g, mono::kBlue, 2).members.to_string(), "{2}");
  EXPECT_THROW(mono::component_of(g, 2, 0), std::out_of_range);
  EXPECT_THROW(mono::component_of(g, 0, 4), std::out_of_range);
}

TEST(Components, AntipodalColourZero) {
  EdgeColouredGraph g = mono::build_antipodal_example(8, 2);
  auto comps = mono::decompose(g, 0);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].members.to_string(), "{0,1,2,3}");  // A(00) ∪ A(01)
  EXPECT_EQ(comps[1].members.to_string(), "{4,5,6,7}");  // A(10) ∪ A(11)
  EXPECT_TRUE(mono::is_mono_connected(g, 0, VertexSet::from_vector(8, {0, 1, 2, 3})));
}

TEST(Components, CoverTRedSingleton) {
  // x_2 (vertex 1) only has blue edges.
  EdgeColouredGraph g = mono::build_cover_t_example(12, 2);
  EXPECT_EQ(mono::component_of(g, mono::kRed, 1).members.to_string(), "{1}");
}

TEST(Components, Connectivity) {
  EdgeColouredGraph g = all_red_k(4);
  EXPECT_TRUE(mono::is_mono_connected(g, mono::kBlue, VertexSet::singleton(4, 3)));
  EXPECT_FALSE(mono::is_mono_connected(g, mono::kBlue, VertexSet::from_vector(4, {0, 1})));
  EXPECT_FALSE(mono::is_mono_connected(g, mono::kRed, VertexSet(4)));
  // Induced connectivity: path 0-1-2 in red, {0,2} alone is not connected.
  EdgeColouredGraph p(3, 1);
  p.add_edge(0, 1, 0);
  p.add_edge(1, 2, 0);
  EXPECT_FALSE(mono::is_mono_connected(p, 0, VertexSet::from_vector(3, {0, 2})));
  EXPECT_EQ(mono::reach(p, 0, 0, VertexSet::from_vector(3, {0, 2})).to_string(), "{0}");
}

TEST(Components, DecomposeAgreesWithUnionFind) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 40);
    int r = 1 + static_cast<int>(rng() % 3);
    EdgeColouredGraph g(n, r);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v, static_cast<int>(rng() % r));
    mono::ComponentDecomposition d = mono::decompose_all(g);
    for (int c = 0; c < r; ++c) {
      auto expected = oracle::components(g, c);
      ASSERT_EQ(d[c].size(), expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(d[c][i].members.to_mask(), expected[i]);
        EXPECT_EQ(d[c][i].colour, c);
        EXPECT_TRUE(mono::verify_maximal(g, c, d[c][i].members));
      }
      for (int x = 0; x < n; ++x)
        EXPECT_TRUE(d[c][d.index_of(c, x)].members.contains(x));
    }
  }
}

TEST(Components, ConnectivityAgreesWithOracle) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    EdgeColouredGraph g(n, 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3) g.add_edge(u, v, static_cast<int>(rng() % 2));
    oracle::Mask m = rng() & oracle::full(n);
    VertexSet w = VertexSet::from_mask(n, m);
    for (int c = 0; c < 2; ++c) {
      EXPECT_EQ(mono::is_mono_connected(g, c, w), oracle::connected(g, c, m));
      EXPECT_EQ(mono::verify_connected(g, c, w), oracle::connected(g, c, m));
    }
  }
}

}  // namespace
