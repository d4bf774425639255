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

#include "mono/exact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mask_graph.hpp"
#include "mono/error.hpp"

namespace mono {

using detail::bit;
using detail::lowest;
using detail::Mask;
using detail::MaskGraph;

namespace {

void require_size(const EdgeColouredGraph& g, int limit, const char* what) {
  int cap = std::min(limit, 64);
  if (g.n() > cap)
    throw LimitExceeded(std::string(what) + ": n=" + std::to_string(g.n()) +
                        " exceeds limit " + std::to_string(cap));
}

MonoComponent to_component(int n, Colour c, Mask m) {
  return {c, VertexSet::from_mask(n, m)};
}

class NodeCounter {
 public:
  NodeCounter(std::uint64_t budget, const char* what) : budget_(budget), what_(what) {}
  void tick() {
    if (++nodes_ > budget_)
      throw LimitExceeded(std::string(what_) + ": node budget exhausted");
  }

 private:
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  const char* what_;
};

// ---------------------------------------------------------------------------
// Minimum cover by maximal components.

class CoverSearch {
 public:
  CoverSearch(const MaskGraph& mg, const SearchLimits& limits)
      : mg_(mg), counter_(limits.node_budget, "min_mono_cover") {
    for (Colour c = 0; c < mg.r(); ++c) {
      for (Mask m : mg.components(c, mg.all())) {
        bool seen = std::any_of(comps_.begin(), comps_.end(),
                                [m](const auto& p) { return p.second == m; });
        if (!seen) comps_.emplace_back(c, m);
      }
    }
    options_.resize(static_cast<std::size_t>(mg.n()));
    star_.assign(static_cast<std::size_t>(mg.n()), 0);
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      for (Mask m = comps_[i].second; m != 0; m &= m - 1) {
        int v = lowest(m);
        options_[v].push_back(static_cast<int>(i));
        star_[v] |= comps_[i].second;
      }
    }
  }

  MinCover run() {
    for (int k = 1;; ++k) {
      chosen_.clear();
      if (dfs(0, k)) break;
    }
    MinCover out;
    out.size = static_cast<int>(chosen_.size());
    out.witness.method = CoverMethod::kExact;
    for (int i : chosen_)
      out.witness.parts.push_back(to_component(mg_.n(), comps_[i].first, comps_[i].second));
    std::sort(out.witness.parts.begin(), out.witness.parts.end(),
              [](const MonoComponent& a, const MonoComponent& b) {
                return std::pair(a.members.first(), a.colour) <
                       std::pair(b.members.first(), b.colour);
              });
    return out;
  }

 private:
  // Vertices pairwise sharing no component each need their own part.
  int lower_bound(Mask uncovered) const {
    int count = 0;
    Mask blocked = 0;
    for (Mask m = uncovered; m != 0; m &= m - 1) {
      int v = lowest(m);
      if (blocked & bit(v)) continue;
      ++count;
      blocked |= star_[v];
    }
    return count;
  }

  bool dfs(Mask covered, int budget) {
    counter_.tick();
    Mask uncovered = mg_.all() & ~covered;
    if (uncovered == 0) return true;
    if (lower_bound(uncovered) > budget) return false;
    int v = lowest(uncovered);
    for (int i : options_[v]) {
      chosen_.push_back(i);
      if (dfs(covered | comps_[i].second, budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const MaskGraph& mg_;
  NodeCounter counter_;
  std::vector<std::pair<Colour, Mask>> comps_;
  std::vector<std::vector<int>> options_;
  std::vector<Mask> star_;
  std::vector<int> chosen_;
};

// ---------------------------------------------------------------------------
// Minimum partition into monochromatic connected sets.

class PartitionSearch {
 public:
  PartitionSearch(const MaskGraph& mg, const SearchLimits& limits)
      : mg_(mg), counter_(limits.node_budget, "min_mono_partition") {}

  bool solve(Mask remaining, int budget) {
    counter_.tick();
    if (remaining == 0) return true;
    if (budget == 0) return false;
    if (auto it = failed_.find(remaining); it != failed_.end() && it->second >= budget)
      return false;

    if (budget == 1) {
      for (Colour c = 0; c < mg_.r(); ++c) {
        if (mg_.connected(c, remaining)) {
          parts_.emplace_back(std::popcount(remaining) == 1 ? 0 : c, remaining);
          return true;
        }
      }
      remember_failure(remaining, budget);
      return false;
    }
    if (lower_bound(remaining) > budget) {
      remember_failure(remaining, budget);
      return false;
    }

    int v = lowest(remaining);
    Mask vbit = bit(v);
    for (Colour c = 0; c < mg_.r(); ++c) {
      Mask comp = mg_.reach(c, vbit, remaining);
      Mask rest = comp & ~vbit;
      if (rest == 0) continue;
      // Descending submasks: large parts first.
      for (Mask sub = rest; sub != 0; sub = (sub - 1) & rest) {
        Mask part = sub | vbit;
        if (sub != rest && !mg_.connected(c, part)) continue;
        parts_.emplace_back(c, part);
        if (solve(remaining & ~part, budget - 1)) return true;
        parts_.pop_back();
      }
    }
    parts_.emplace_back(0, vbit);
    if (solve(remaining & ~vbit, budget - 1)) return true;
    parts_.pop_back();

    remember_failure(remaining, budget);
    return false;
  }

  const std::vector<std::pair<Colour, Mask>>& parts() const { return parts_; }
  void reset_parts() { parts_.clear(); }

 private:
  void remember_failure(Mask remaining, int budget) {
    int& slot = failed_[remaining];
    slot = std::max(slot, budget);
  }

  // Vertices pairwise in distinct components of G[remaining] in every colour
  // must lie in distinct parts. With two colours the largest such set is a
  // maximum matching between red and blue components of G[remaining].
  int lower_bound(Mask remaining) const {
    if (mg_.r() == 2) return matching_bound(remaining);
    int count = 0;
    Mask blocked = 0;
    for (Mask m = remaining; m != 0; m &= m - 1) {
      int v = lowest(m);
      if (blocked & bit(v)) continue;
      ++count;
      for (Colour c = 0; c < mg_.r(); ++c) blocked |= mg_.reach(c, bit(v), remaining);
    }
    return count;
  }

  int matching_bound(Mask remaining) const {
    std::vector<Mask> red = mg_.components(0, remaining);
    std::vector<Mask> blue = mg_.components(1, remaining);
    std::vector<std::vector<int>> adj(red.size());
    for (std::size_t i = 0; i < red.size(); ++i)
      for (std::size_t j = 0; j < blue.size(); ++j)
        if (red[i] & blue[j]) adj[i].push_back(static_cast<int>(j));
    std::vector<int> mate(blue.size(), -1);
    std::vector<char> seen;
    std::function<bool(int)> augment = [&](int i) {
      for (int j : adj[i]) {
        if (seen[j]) continue;
        seen[j] = 1;
        if (mate[j] < 0 || augment(mate[j])) {
          mate[j] = i;
          return true;
        }
      }
      return false;
    };
    int size = 0;
    for (std::size_t i = 0; i < red.size(); ++i) {
      seen.assign(blue.size(), 0);
      if (augment(static_cast<int>(i))) ++size;
    }
    return size;
  }

  const MaskGraph& mg_;
  NodeCounter counter_;
  std::unordered_map<Mask, int> failed_;
  std::vector<std::pair<Colour, Mask>> parts_;
};

MonoPartition to_partition(int n, const std::vector<std::pair<Colour, Mask>>& parts) {
  MonoPartition out;
  for (const auto& [c, m] : parts) out.parts.push_back(to_component(n, c, m));
  return out;
}

}  // namespace

MinCover min_mono_cover(const EdgeColouredGraph& g, const SearchLimits& limits) {
  require_size(g, limits.cover_max_n, "min_mono_cover");
  MaskGraph mg(g);
  return CoverSearch(mg, limits).run();
}

MinPartition min_mono_partition(const EdgeColouredGraph& g, const SearchLimits& limits) {
  require_size(g, limits.partition_max_n, "min_mono_partition");
  MaskGraph mg(g);
  // Each part lies inside a component of its colour, so the minimum cover
  // is a lower bound.
  SearchLimits cover_limits = limits;
  cover_limits.cover_max_n = 64;
  int k = CoverSearch(mg, cover_limits).run().size;
  PartitionSearch search(mg, limits);
  for (;; ++k) {
    search.reset_parts();
    if (search.solve(mg.all(), k)) break;
  }
  MinPartition out;
  out.witness = to_partition(g.n(), search.parts());
  out.size = static_cast<int>(out.witness.parts.size());
  return out;
}

std::optional<MonoPartition> exists_two_partition(const EdgeColouredGraph& g,
                                                  const SearchLimits& limits) {
  if (g.r() != 2)
    throw PreconditionError("exists_two_partition needs exactly 2 colours");
  require_size(g, limits.two_partition_max_n, "exists_two_partition");
  MaskGraph mg(g);
  int n = g.n();
  if (n == 1) return to_partition(n, {{0, Mask{1}}});

  auto colour_of = [&](Mask part) -> int {
    if (std::popcount(part) == 1) return 0;
    for (Colour c = 0; c < 2; ++c)
      if (mg.connected(c, part)) return c;
    return -1;
  };
  NodeCounter counter(limits.node_budget, "exists_two_partition");
  Mask all = mg.all();
  Mask subsets = Mask{1} << (n - 1);
  // The part holding vertex 0 is 1 | (sub << 1); sub ranges over proper
  // subsets of the other n-1 vertices.
  for (Mask sub = 0; sub + 1 < subsets; ++sub) {
    counter.tick();
    Mask first = Mask{1} | (sub << 1);
    Mask second = all & ~first;
    int c1 = colour_of(first);
    if (c1 < 0) continue;
    int c2 = colour_of(second);
    if (c2 < 0) continue;
    return to_partition(n, {{c1, first}, {c2, second}});
  }
  return std::nullopt;
}

std::optional<MonoCover> distinct_colour_cover(const EdgeColouredGraph& g,
                                               const SearchLimits& limits) {
  require_size(g, limits.distinct_max_n, "distinct_colour_cover");
  if (g.r() > limits.distinct_max_colours)
    throw LimitExceeded("distinct_colour_cover: r=" + std::to_string(g.r()) +
                        " exceeds exhaustive limit " +
                        std::to_string(limits.distinct_max_colours));
  MaskGraph mg(g);
  int r = g.r();
  std::vector<std::vector<Mask>> comps(static_cast<std::size_t>(r));
  for (Colour c = 0; c < r; ++c) comps[c] = mg.components(c, mg.all());
  NodeCounter counter(limits.node_budget, "distinct_colour_cover");

  std::vector<Colour> colours;
  std::vector<int> picks;
  std::function<bool(std::size_t, Mask)> pick = [&](std::size_t depth, Mask covered) {
    counter.tick();
    if (depth == colours.size()) return covered == mg.all();
    const auto& list = comps[colours[depth]];
    for (std::size_t i = 0; i < list.size(); ++i) {
      picks.push_back(static_cast<int>(i));
      if (pick(depth + 1, covered | list[i])) return true;
      picks.pop_back();
    }
    return false;
  };

  // Colour subsets by increasing size, each in lexicographic order.
  for (int size = 1; size <= r; ++size) {
    std::vector<char> selector(static_cast<std::size_t>(r), 0);
    std::fill(selector.begin(), selector.begin() + size, 1);
    do {
      colours.clear();
      picks.clear();
      for (Colour c = 0; c < r; ++c)
        if (selector[c]) colours.push_back(c);
      if (pick(0, 0)) {
        MonoCover out;
        out.method = CoverMethod::kExact;
        for (std::size_t i = 0; i < colours.size(); ++i)
          out.parts.push_back(
              to_component(g.n(), colours[i], comps[colours[i]][picks[i]]));
        return out;
      }
    } while (std::prev_permutation(selector.begin(), selector.end()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Colouring enumeration.

namespace {

struct EdgeSlot {
  Vertex u;
  Vertex v;
};

class ColouringWalker {
 public:
  ColouringWalker(int n, int r, EnumerationMode mode, int min_degree,
                  const ColouringVisitor& visitor, std::mutex* visitor_lock)
      : n_(n),
        r_(r),
        mode_(mode),
        min_degree_(min_degree),
        radix_(mode == EnumerationMode::kCompleteGraph ? r : r + 1),
        visitor_(visitor),
        lock_(visitor_lock),
        graph_(n, r),
        degree_(static_cast<std::size_t>(n), 0),
        unassigned_(static_cast<std::size_t>(n), n - 1) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots_.push_back({u, v});
  }

  std::size_t edge_slots() const { return slots_.size(); }
  std::uint64_t radix() const { return radix_; }

  /// Walks the subtree below the fixed digits `prefix`.
  void walk(const std::vector<int>& prefix, EnumerationStats& stats) {
    stats_ = &stats;
    descend(0, 0, prefix);
  }

 private:
  void descend(std::size_t e, std::uint64_t index, const std::vector<int>& prefix) {
    if (e == slots_.size()) {
      ++stats_->visited;
      bool ok;
      if (lock_ != nullptr) {
        std::lock_guard<std::mutex> guard(*lock_);
        ok = visitor_(graph_, index);
      } else {
        ok = visitor_(graph_, index);
      }
      ++(ok ? stats_->passed : stats_->failed);
      return;
    }
    auto [u, v] = slots_[e];
    --unassigned_[u];
    --unassigned_[v];
    int lo = 0;
    int hi = static_cast<int>(radix_) - 1;
    if (e < prefix.size()) lo = hi = prefix[e];
    for (int digit = lo; digit <= hi; ++digit) {
      Colour c = mode_ == EnumerationMode::kCompleteGraph ? digit : digit - 1;
      if (c == kNoEdge) {
        if (degree_[u] + unassigned_[u] < min_degree_ ||
            degree_[v] + unassigned_[v] < min_degree_)
          continue;
        descend(e + 1, index * radix_ + static_cast<std::uint64_t>(digit), prefix);
      } else {
        graph_.add_edge(u, v, c);
        ++degree_[u];
        ++degree_[v];
        if (degree_[u] + unassigned_[u] >= min_degree_ &&
            degree_[v] + unassigned_[v] >= min_degree_)
          descend(e + 1, index * radix_ + static_cast<std::uint64_t>(digit), prefix);
        --degree_[u];
        --degree_[v];
        graph_.remove_edge(u, v);
      }
    }
    ++unassigned_[u];
    ++unassigned_[v];
  }

  int n_;
  int r_;
  EnumerationMode mode_;
  int min_degree_;
  std::uint64_t radix_;
  const ColouringVisitor& visitor_;
  std::mutex* lock_;
  EdgeColouredGraph graph_;
  std::vector<EdgeSlot> slots_;
  std::vector<int> degree_;
  std::vector<int> unassigned_;
  EnumerationStats* stats_ = nullptr;
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

EnumerationStats enumerate_colourings(int n, int r, EnumerationMode mode, int min_degree,
                                      const ColouringVisitor& visitor,
                                      const EnumerationOptions& options) {
  if (n < 1 || r < 1) throw PreconditionError("enumerate_colourings needs n >= 1, r >= 1");
  std::uint64_t radix = mode == EnumerationMode::kCompleteGraph ? r : r + 1;
  std::size_t slots = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::uint64_t space = checked_power(radix, slots, options.budget);
  if (space > options.budget)
    throw LimitExceeded("enumerate_colourings: state space exceeds budget of " +
                        std::to_string(options.budget));

  int threads = std::max(1, options.threads);
  std::mutex lock;
  std::mutex* visitor_lock = (threads > 1 && options.serial_visitor) ? &lock : nullptr;

  // Split on a prefix of the edge digits so workers own disjoint subtrees.
  std::size_t prefix_len = 0;
  std::uint64_t tasks = 1;
  while (threads > 1 && prefix_len < slots && tasks < static_cast<std::uint64_t>(threads) * 8) {
    ++prefix_len;
    tasks *= radix;
  }
  std::vector<std::vector<int>> prefixes;
  prefixes.reserve(tasks);
  for (std::uint64_t t = 0; t < tasks; ++t) {
    std::vector<int> digits(prefix_len);
    std::uint64_t x = t;
    for (std::size_t i = prefix_len; i-- > 0;) {
      digits[i] = static_cast<int>(x % radix);
      x /= radix;
    }
    prefixes.push_back(std::move(digits));
  }

  std::vector<EnumerationStats> per_task(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ColouringWalker walker(n, r, mode, min_degree, visitor, visitor_lock);
    for (std::size_t t = next++; t < prefixes.size(); t = next++)
      walker.walk(prefixes[t], per_task[t]);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  EnumerationStats total;
  for (const auto& s : per_task) {
    total.visited += s.visited;
    total.passed += s.passed;
    total.failed += s.failed;
  }
  return total;
}

EdgeColouredGraph colouring_from_index(int n, int r, EnumerationMode mode, std::uint64_t index) {
  std::uint64_t radix = mode == EnumerationMode::kCompleteGraph ? r : r + 1;
  std::vector<EdgeSlot> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.push_back({u, v});
  EdgeColouredGraph g(n, r);
  for (std::size_t i = slots.size(); i-- > 0;) {
    int digit = static_cast<int>(index % radix);
    index /= radix;
    Colour c = mode == EnumerationMode::kCompleteGraph ? digit : digit - 1;
    if (c != kNoEdge) g.add_edge(slots[i].u, slots[i].v, c);
  }
  return g;
}

}  // namespace mono
