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

#include "mono/constructions.hpp"
#include "mono/exact.hpp"
#include "mono/koenig.hpp"
#include "oracles.hpp"

namespace {

using mono::BipartiteGraph;
using mono::EdgeColouredGraph;

EdgeColouredGraph all_red_k4() {
  EdgeColouredGraph g(4, 2);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, mono::kRed);
  return g;
}

// Red perfect matching {01, 23}, everything else blue.
EdgeColouredGraph red_matching_k4() {
  EdgeColouredGraph g(4, 2);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      g.add_edge(u, v, (u == 0 && v == 1) || (u == 2 && v == 3) ? mono::kRed : mono::kBlue);
  return g;
}

BipartiteGraph random_bipartite(std::mt19937_64& rng, int max_side) {
  BipartiteGraph h;
  h.left_size = 1 + static_cast<int>(rng() % max_side);
  h.right_size = 1 + static_cast<int>(rng() % max_side);
  int density = static_cast<int>(rng() % 100);
  h.adjacency.resize(h.left_size);
  for (int i = 0; i < h.left_size; ++i)
    for (int j = 0; j < h.right_size; ++j)
      if (static_cast<int>(rng() % 100) < density) h.adjacency[i].push_back(j);
  return h;
}

TEST(Auxiliary, AllRedK4IsAStar) {
  mono::AuxBipartiteGraph aux = mono::build_auxiliary(all_red_k4());
  EXPECT_EQ(aux.graph.left_size, 1);
  EXPECT_EQ(aux.graph.right_size, 4);
  EXPECT_EQ(aux.graph.edge_count(), 4u);
  mono::Matching m = mono::max_matching(aux);
  EXPECT_EQ(m.size(), 1u);
  mono::HCover cover = mono::koenig_vertex_cover(aux, m);
  EXPECT_EQ(cover.left, std::vector<int>{0});
  EXPECT_TRUE(cover.right.empty());
}

TEST(Auxiliary, RedMatchingK4) {
  mono::AuxBipartiteGraph aux = mono::build_auxiliary(red_matching_k4());
  EXPECT_EQ(aux.graph.left_size, 2);
  EXPECT_EQ(aux.graph.right_size, 1);
  EXPECT_EQ(aux.graph.edge_count(), 2u);
  mono::Matching m = mono::max_matching(aux);
  mono::HCover cover = mono::koenig_vertex_cover(aux, m);
  EXPECT_TRUE(cover.left.empty());
  EXPECT_EQ(cover.right, std::vector<int>{0});

  mono::MonoCover c = mono::cover_two_coloured(red_matching_k4());
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.parts[0].colour, mono::kBlue);
  EXPECT_EQ(c.parts[0].members.size(), 4);
  EXPECT_EQ(c.method, mono::CoverMethod::kKoenig);
}

TEST(Auxiliary, CoverTExample) {
  EdgeColouredGraph g = mono::build_cover_t_example(12, 2);
  mono::AuxBipartiteGraph aux = mono::build_auxiliary(g);
  EXPECT_EQ(aux.graph.left_size, 3);
  EXPECT_EQ(aux.graph.right_size, 3);
  EXPECT_EQ(aux.graph.edge_count(), 6u);
  mono::Matching m = mono::max_matching(aux);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_EQ(mono::koenig_vertex_cover(aux, m).size(), 3u);
  mono::MonoCover c = mono::cover_two_coloured(g);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_TRUE(mono::check_cover(g, c).ok);
}

TEST(Auxiliary, RejectsOtherColourCounts) {
  EXPECT_THROW(mono::build_auxiliary(EdgeColouredGraph(3, 3)), mono::PreconditionError);
}

TEST(Matching, OneByOne) {
  BipartiteGraph h{1, 1, {{0}}};
  EXPECT_EQ(mono::max_matching(h).size(), 1u);
}

TEST(Matching, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    BipartiteGraph h = random_bipartite(rng, 10);
    mono::Matching m = mono::max_matching(h);
    ASSERT_EQ(static_cast<int>(m.size()),
              oracle::max_matching(h.left_size, h.right_size, h.adjacency));
    EXPECT_FALSE(mono::find_augmenting_path(h, m).has_value());
    mono::HCover cover = mono::koenig_vertex_cover(h, m);
    EXPECT_EQ(cover.size(), m.size());
    EXPECT_TRUE(mono::covers_all_edges(h, cover));
  }
}

TEST(Matching, NonMaximumMatchingIsDetected) {
  // Path l0-r0-l1-r1 with only l1-r0 matched has an augmenting path.
  BipartiteGraph h{2, 2, {{0}, {0, 1}}};
  mono::Matching m;
  m.mate_left = {-1, 0};
  m.mate_right = {1, -1};
  m.pairs = {{1, 0}};
  auto path = mono::find_augmenting_path(h, m);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(*path, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_THROW(mono::koenig_vertex_cover(h, m), mono::MatchingNotMaximum);
}

TEST(Matching, CoverCheckCatchesUncoveredEdge) {
  BipartiteGraph h{2, 2, {{0}, {1}}};
  EXPECT_FALSE(mono::covers_all_edges(h, {{0}, {}}));
  EXPECT_TRUE(mono::covers_all_edges(h, {{0}, {1}}));
}

TEST(Threshold, ExactValues) {
  EXPECT_EQ(mono::degree_threshold(12, 2), boost::rational<long long>(19, 3));
  EXPECT_EQ(mono::degree_threshold(8, 1), boost::rational<long long>(13, 2));
  for (int t = 1; t <= 6; ++t)
    EXPECT_EQ(mono::degree_threshold(t + 1, t), boost::rational<long long>(1, t + 1));
  EXPECT_TRUE(mono::meets_degree_threshold(7, 12, 2));
  EXPECT_FALSE(mono::meets_degree_threshold(6, 12, 2));
  EXPECT_EQ(mono::integral_degree_threshold(12, 2), 7);
  EXPECT_EQ(mono::integral_degree_threshold(8, 1), 7);
  EXPECT_THROW(mono::degree_threshold(0, 1), std::invalid_argument);
  EXPECT_THROW(mono::degree_threshold(5, 0), std::invalid_argument);
}

TEST(KoenigCover, SizeEqualsMinimumVertexCoverAndBoundsExactCover) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    EdgeColouredGraph g(n, 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 4) g.add_edge(u, v, static_cast<int>(rng() % 2));
    mono::MonoCover c = mono::cover_two_coloured(g);
    ASSERT_TRUE(mono::check_cover(g, c).ok) << mono::to_text(g);
    mono::AuxBipartiteGraph aux = mono::build_auxiliary(g);
    EXPECT_EQ(static_cast<int>(c.size()),
              oracle::max_matching(aux.graph.left_size, aux.graph.right_size,
                                   aux.graph.adjacency));
    EXPECT_GE(static_cast<int>(c.size()), oracle::min_cover(g));
  }
}

}  // namespace
