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

#include "mono/koenig.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace mono {

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency) total += row.size();
  return total;
}

bool BipartiteGraph::has_edge(int i, int j) const {
  const auto& row = adjacency[i];
  return std::binary_search(row.begin(), row.end(), j);
}

AuxBipartiteGraph build_auxiliary(const EdgeColouredGraph& g) {
  if (g.r() != 2)
    throw PreconditionError("auxiliary graph needs exactly 2 colours, got " +
                            std::to_string(g.r()));
  AuxBipartiteGraph h;
  h.left = decompose(g, kRed);
  h.right = decompose(g, kBlue);
  h.graph.left_size = static_cast<int>(h.left.size());
  h.graph.right_size = static_cast<int>(h.right.size());
  h.graph.adjacency.resize(h.left.size());
  for (std::size_t i = 0; i < h.left.size(); ++i)
    for (std::size_t j = 0; j < h.right.size(); ++j)
      if (h.left[i].members.intersects(h.right[j].members))
        h.graph.adjacency[i].push_back(static_cast<int>(j));
  return h;
}

namespace {

class Augmenter {
 public:
  Augmenter(const BipartiteGraph& h, Matching& m)
      : h_(h), m_(m), visited_(static_cast<std::size_t>(h.right_size), 0) {}

  bool augment_from(int left) {
    std::fill(visited_.begin(), visited_.end(), 0);
    return dfs(left);
  }

 private:
  bool dfs(int left) {
    for (int right : h_.adjacency[left]) {
      if (visited_[right]) continue;
      visited_[right] = 1;
      if (m_.mate_right[right] < 0 || dfs(m_.mate_right[right])) {
        m_.mate_left[left] = right;
        m_.mate_right[right] = left;
        return true;
      }
    }
    return false;
  }

  const BipartiteGraph& h_;
  Matching& m_;
  std::vector<char> visited_;
};

}  // namespace

Matching max_matching(const BipartiteGraph& h) {
  Matching m;
  m.mate_left.assign(static_cast<std::size_t>(h.left_size), -1);
  m.mate_right.assign(static_cast<std::size_t>(h.right_size), -1);
  Augmenter aug(h, m);
  for (int i = 0; i < h.left_size; ++i) aug.augment_from(i);
  for (int i = 0; i < h.left_size; ++i)
    if (m.mate_left[i] >= 0) m.pairs.emplace_back(i, m.mate_left[i]);
  return m;
}

std::optional<std::vector<int>> find_augmenting_path(const BipartiteGraph& h,
                                                     const Matching& m) {
  // BFS over alternating paths; parent_of_right[j] is the left vertex that
  // reached j, parent_of_left[i] the right vertex through which i was reached.
  std::vector<int> parent_of_right(static_cast<std::size_t>(h.right_size), -2);
  std::vector<int> parent_of_left(static_cast<std::size_t>(h.left_size), -2);
  std::deque<int> queue;
  for (int i = 0; i < h.left_size; ++i) {
    if (m.mate_left[i] < 0) {
      parent_of_left[i] = -1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : h.adjacency[i]) {
      if (parent_of_right[j] != -2) continue;
      parent_of_right[j] = i;
      int mate = m.mate_right[j];
      if (mate < 0) {
        std::vector<int> path;
        for (int right = j; right >= 0;) {
          int left = parent_of_right[right];
          path.push_back(right);
          path.push_back(left);
          right = parent_of_left[left];
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (parent_of_left[mate] == -2) {
        parent_of_left[mate] = j;
        queue.push_back(mate);
      }
    }
  }
  return std::nullopt;
}

HCover koenig_vertex_cover(const BipartiteGraph& h, const Matching& m) {
  std::vector<char> left_reached(static_cast<std::size_t>(h.left_size), 0);
  std::vector<char> right_reached(static_cast<std::size_t>(h.right_size), 0);
  std::deque<int> queue;
  for (int i = 0; i < h.left_size; ++i) {
    if (m.mate_left[i] < 0) {
      left_reached[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j : h.adjacency[i]) {
      if (right_reached[j]) continue;
      right_reached[j] = 1;
      int mate = m.mate_right[j];
      if (mate < 0)
        throw MatchingNotMaximum("augmenting path ends at right vertex " + std::to_string(j));
      if (!left_reached[mate]) {
        left_reached[mate] = 1;
        queue.push_back(mate);
      }
    }
  }
  HCover cover;
  for (int i = 0; i < h.left_size; ++i)
    if (!left_reached[i]) cover.left.push_back(i);
  for (int j = 0; j < h.right_size; ++j)
    if (right_reached[j]) cover.right.push_back(j);
  return cover;
}

bool covers_all_edges(const BipartiteGraph& h, const HCover& cover) {
  std::vector<char> in_left(static_cast<std::size_t>(h.left_size), 0);
  std::vector<char> in_right(static_cast<std::size_t>(h.right_size), 0);
  for (int i : cover.left) in_left[i] = 1;
  for (int j : cover.right) in_right[j] = 1;
  for (int i = 0; i < h.left_size; ++i)
    for (int j : h.adjacency[i])
      if (!in_left[i] && !in_right[j]) return false;
  return true;
}

MonoCover cover_two_coloured(const EdgeColouredGraph& g) {
  AuxBipartiteGraph h = build_auxiliary(g);
  Matching m = max_matching(h.graph);
  HCover hc = koenig_vertex_cover(h.graph, m);
  MonoCover out;
  out.method = CoverMethod::kKoenig;
  out.parts.reserve(hc.size());
  for (int i : hc.left) out.parts.push_back(h.left[i]);
  for (int j : hc.right) out.parts.push_back(h.right[j]);
  return out;
}

boost::rational<long long> degree_threshold(long long n, long long t) {
  if (n < 1 || t < 1) throw std::invalid_argument("degree_threshold needs n >= 1 and t >= 1");
  return {2 * n - 2 * t - 1, t + 1};
}

bool meets_degree_threshold(long long delta, long long n, long long t) {
  return delta * (t + 1) >= 2 * n - 2 * t - 1;
}

long long integral_degree_threshold(long long n, long long t) {
  long long num = 2 * n - 2 * t - 1;
  long long den = t + 1;
  // ceil for possibly negative numerators.
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

}  // namespace mono
