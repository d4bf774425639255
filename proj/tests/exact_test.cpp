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
#include <set>

#include "mono/constructions.hpp"
#include "mono/error.hpp"
#include "mono/exact.hpp"
#include "oracles.hpp"

namespace {

using mono::EdgeColouredGraph;
using mono::EnumerationMode;

EdgeColouredGraph complete(int n, int r, mono::Colour c) {
  EdgeColouredGraph g(n, r);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, c);
  return g;
}

EdgeColouredGraph random_graph(std::mt19937_64& rng, int n, int r, int absent_in = 4) {
  EdgeColouredGraph g(n, r);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % absent_in) g.add_edge(u, v, static_cast<int>(rng() % r));
  return g;
}

TEST(MinCover, KnownValues) {
  EXPECT_EQ(mono::min_mono_cover(complete(6, 2, mono::kRed)).size, 1);
  EXPECT_EQ(mono::min_mono_cover(mono::build_cover_t_example(12, 2)).size, 3);
  mono::MinCover a = mono::min_mono_cover(mono::build_antipodal_example(8, 2));
  EXPECT_EQ(a.size, 2);
  EXPECT_TRUE(mono::check_cover(mono::build_antipodal_example(8, 2), a.witness).ok);
}

TEST(MinCover, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    int r = 1 + static_cast<int>(rng() % 3);
    EdgeColouredGraph g = random_graph(rng, n, r, 2 + static_cast<int>(rng() % 4));
    mono::MinCover c = mono::min_mono_cover(g);
    ASSERT_EQ(c.size, oracle::min_cover(g)) << mono::to_text(g);
    EXPECT_EQ(static_cast<int>(c.witness.size()), c.size);
    EXPECT_TRUE(mono::check_cover(g, c.witness).ok);
  }
}

TEST(MinPartition, KnownValues) {
  EXPECT_EQ(mono::min_mono_partition(complete(5, 2, mono::kRed)).size, 1);
  // Red = two disjoint triangles, blue = K_{3,3}, which spans.
  EdgeColouredGraph g(6, 2);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) g.add_edge(u, v, (u < 3) == (v < 3) ? mono::kRed : mono::kBlue);
  mono::MinPartition p = mono::min_mono_partition(g);
  EXPECT_EQ(p.size, 1);
  EXPECT_EQ(p.witness.parts[0].colour, mono::kBlue);
  EXPECT_EQ(mono::min_mono_partition(mono::build_cover_t_example(12, 2)).size, 3);
}

TEST(MinPartition, AgreesWithRecursiveOracle) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    int r = 1 + static_cast<int>(rng() % 3);
    EdgeColouredGraph g = random_graph(rng, n, r, 2 + static_cast<int>(rng() % 4));
    mono::MinPartition p = mono::min_mono_partition(g);
    ASSERT_EQ(p.size, oracle::min_partition(g)) << mono::to_text(g);
    EXPECT_TRUE(mono::check_partition(g, p.witness).ok);
    EXPECT_EQ(static_cast<int>(p.witness.size()), p.size);
  }
}

TEST(MinPartition, SizeLimit) {
  EXPECT_THROW(mono::min_mono_partition(EdgeColouredGraph(17, 2)), mono::LimitExceeded);
  mono::SearchLimits limits;
  limits.partition_max_n = 20;
  EXPECT_EQ(mono::min_mono_partition(mono::build_cover_t_example(20, 4), limits).size, 5);
}

TEST(TwoPartition, KnownValues) {
  auto p = mono::exists_two_partition(complete(4, 2, mono::kRed));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 2u);
  EXPECT_TRUE(mono::check_partition(complete(4, 2, mono::kRed), *p).ok);
  EXPECT_FALSE(mono::exists_two_partition(mono::build_cover_t_example(12, 2)).has_value());

  EdgeColouredGraph m(4, 2);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      m.add_edge(u, v, (u == 0 && v == 1) || (u == 2 && v == 3) ? mono::kRed : mono::kBlue);
  auto q = mono::exists_two_partition(m);
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(mono::check_partition(m, *q).ok);
  EXPECT_LE(q->size(), 2u);

  auto one = mono::exists_two_partition(EdgeColouredGraph(1, 2));
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->size(), 1u);
  EXPECT_THROW(mono::exists_two_partition(EdgeColouredGraph(3, 3)), mono::PreconditionError);
}

TEST(TwoPartition, AgreesWithOracle) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    EdgeColouredGraph g = random_graph(rng, n, 2, 2 + static_cast<int>(rng() % 3));
    auto p = mono::exists_two_partition(g);
    ASSERT_EQ(p.has_value(), oracle::has_two_partition(g)) << mono::to_text(g);
    if (p) EXPECT_TRUE(mono::check_partition(g, *p).ok);
    EXPECT_EQ(p.has_value(), oracle::min_partition(g) <= 2);
  }
}

TEST(DistinctCover, KnownValues) {
  auto k4 = mono::distinct_colour_cover(complete(4, 2, mono::kRed));
  ASSERT_TRUE(k4.has_value());
  ASSERT_EQ(k4->size(), 1u);
  EXPECT_EQ(k4->parts[0].colour, mono::kRed);
  EXPECT_FALSE(mono::distinct_colour_cover(mono::build_antipodal_example(8, 2)).has_value());
  EXPECT_FALSE(mono::distinct_colour_cover(mono::build_antipodal_example(16, 3)).has_value());
  auto k8 = mono::distinct_colour_cover(complete(8, 3, mono::kRed));
  ASSERT_TRUE(k8.has_value());
  EXPECT_EQ(k8->size(), 1u);
}

TEST(DistinctCover, AgreesWithOracle) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    int r = 1 + static_cast<int>(rng() % 3);
    EdgeColouredGraph g = random_graph(rng, n, r, 2 + static_cast<int>(rng() % 4));
    auto c = mono::distinct_colour_cover(g);
    ASSERT_EQ(c.has_value(), oracle::has_distinct_cover(g)) << mono::to_text(g);
    if (c) EXPECT_TRUE(mono::check_distinct_colour_cover(g, *c).ok);
  }
}

TEST(DistinctCover, ColourLimit) {
  EXPECT_THROW(mono::distinct_colour_cover(EdgeColouredGraph(4, 4)), mono::LimitExceeded);
}

TEST(Enumerate, CountsMatchClosedForms) {
  auto count = [](int n, int r, EnumerationMode mode, int delta) {
    return mono::enumerate_colourings(n, r, mode, delta,
                                      [](const EdgeColouredGraph&, std::uint64_t) { return true; })
        .visited;
  };
  EXPECT_EQ(count(3, 2, EnumerationMode::kCompleteGraph, 0), 8u);
  EXPECT_EQ(count(4, 2, EnumerationMode::kCompleteGraph, 0), 64u);
  EXPECT_EQ(count(4, 2, EnumerationMode::kWithNonEdges, 3), 64u);
  EXPECT_EQ(count(4, 2, EnumerationMode::kWithNonEdges, 0), 729u);
  EXPECT_EQ(count(3, 3, EnumerationMode::kCompleteGraph, 0), 27u);
}

TEST(Enumerate, DegreeFilterMatchesBruteForce) {
  for (int n = 2; n <= 5; ++n) {
    for (int delta = 0; delta < n; ++delta) {
      std::uint64_t expected = 0;
      std::uint64_t states = 1;
      for (int k = 0; k < n * (n - 1) / 2; ++k) states *= 3;
      for (std::uint64_t i = 0; i < states; ++i)
        if (oracle::min_degree(mono::colouring_from_index(n, 2, EnumerationMode::kWithNonEdges, i)) >=
            delta)
          ++expected;
      std::vector<std::uint64_t> seen;
      mono::EnumerationStats stats = mono::enumerate_colourings(
          n, 2, EnumerationMode::kWithNonEdges, delta,
          [&](const EdgeColouredGraph& g, std::uint64_t index) {
            seen.push_back(index);
            return g == mono::colouring_from_index(n, 2, EnumerationMode::kWithNonEdges, index) &&
                   oracle::min_degree(g) >= delta;
          });
      EXPECT_EQ(stats.visited, expected) << n << " " << delta;
      EXPECT_EQ(stats.failed, 0u);
      EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
    }
  }
}

TEST(Enumerate, IndexDigitsAreMostSignificantFirst) {
  // n = 3 pairs (0,1), (0,2), (1,2); index 1 sets only the last pair.
  EdgeColouredGraph g = mono::colouring_from_index(3, 2, EnumerationMode::kCompleteGraph, 1);
  EXPECT_EQ(g.colour(0, 1), 0);
  EXPECT_EQ(g.colour(0, 2), 0);
  EXPECT_EQ(g.colour(1, 2), 1);
  // Base 3 with digit 0 = absent: 3 = (0, 1, 0).
  EdgeColouredGraph h = mono::colouring_from_index(3, 2, EnumerationMode::kWithNonEdges, 3);
  EXPECT_EQ(h.colour(0, 1), mono::kNoEdge);
  EXPECT_EQ(h.colour(0, 2), 0);
  EXPECT_EQ(h.colour(1, 2), mono::kNoEdge);
}

TEST(Enumerate, ThreadedRunAggregatesIdentically) {
  auto run = [](int threads) {
    mono::EnumerationOptions o;
    o.threads = threads;
    std::set<std::uint64_t> indices;
    mono::EnumerationStats s = mono::enumerate_colourings(
        5, 2, EnumerationMode::kWithNonEdges, 2,
        [&](const EdgeColouredGraph& g, std::uint64_t i) {
          indices.insert(i);
          return mono::exists_two_partition(g).has_value();
        },
        o);
    return std::make_tuple(s.visited, s.passed, s.failed, indices);
  };
  EXPECT_EQ(run(1), run(3));
}

TEST(Enumerate, BudgetGuard) {
  mono::EnumerationOptions o;
  o.budget = 1000;
  EXPECT_THROW(mono::enumerate_colourings(
                   6, 2, EnumerationMode::kCompleteGraph, 0,
                   [](const EdgeColouredGraph&, std::uint64_t) { return true; }, o),
               mono::LimitExceeded);
}

}  // namespace
