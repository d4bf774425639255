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

#include "mono/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "mono/components.hpp"
#include "mono/constructions.hpp"
#include "mono/error.hpp"
#include "mono/exact.hpp"
#include "mono/koenig.hpp"
#include "mono/proof_guided.hpp"

namespace mono::harness {

using nlohmann::json;

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t counter) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(master ^ mix(counter));
}

json to_json(const MonoComponent& c) {
  return json{{"colour", c.colour}, {"members", c.members.to_vector()}};
}

json to_json(const std::vector<MonoComponent>& parts) {
  json out = json::array();
  for (const MonoComponent& c : parts) out.push_back(to_json(c));
  return out;
}

json to_json(const Certificate& cert) {
  json out{{"graph", cert.graph}, {"predicate", cert.predicate}, {"witness", cert.witness}};
  if (!cert.annotation.empty()) out["annotation"] = cert.annotation;
  return out;
}

json to_json(const VerificationResult& result) {
  json certs = json::array();
  for (const Certificate& c : result.certificates) certs.push_back(to_json(c));
  return json{{"id", result.id},
              {"visited", result.visited},
              {"passes", result.passes},
              {"failures", result.failures},
              {"certificates", certs},
              {"seconds", result.seconds},
              {"seed", result.seed},
              {"passed", result.passed},
              {"details", result.details}};
}

// ---------------------------------------------------------------------------
// Predicates. Each one recomputes everything from the graph and witness.

namespace {

using Predicate = std::function<bool(const EdgeColouredGraph&, const json&)>;

int ceil_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
  return static_cast<int>(q);
}

int two_partition_degree(int n) { return std::max(0, ceil_div(2LL * n - 5, 3)); }

BipartiteGraph bipartite_from_graph(const EdgeColouredGraph& g, int left_size) {
  BipartiteGraph h;
  h.left_size = left_size;
  h.right_size = g.n() - left_size;
  h.adjacency.assign(static_cast<std::size_t>(left_size), {});
  for (const Edge& e : g.edges()) {
    if (e.u >= left_size || e.v < left_size)
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " does not cross the bipartition");
    h.adjacency[e.u].push_back(e.v - left_size);
  }
  return h;
}

bool koenig_equality(const EdgeColouredGraph& g, const json& w) {
  BipartiteGraph h = bipartite_from_graph(g, w.at("left_size").get<int>());
  Matching m = max_matching(h);
  std::vector<char> used(static_cast<std::size_t>(h.right_size), 0);
  for (auto [i, j] : m.pairs) {
    if (!h.has_edge(i, j) || used[j]) return false;
    used[j] = 1;
  }
  if (find_augmenting_path(h, m)) return false;
  HCover cover;
  try {
    cover = koenig_vertex_cover(h, m);
  } catch (const MatchingNotMaximum&) {
    return false;
  }
  return cover.size() == m.size() && covers_all_edges(h, cover);
}

bool cover_within_t(const EdgeColouredGraph& g, const json& w) {
  int t = w.at("t").get<int>();
  MonoCover cover = cover_two_coloured(g);
  return check_cover(g, cover).ok && static_cast<int>(cover.size()) <= t;
}

bool cover_t_sharpness(const EdgeColouredGraph& g, const json& w) {
  int t = w.at("t").get<int>();
  int n = g.n();
  if (min_degree(g) != integral_degree_threshold(n, t) - 1) return false;
  // x_1..x_{t+1} are vertices 0..t; no two share a component.
  ComponentDecomposition d = decompose_all(g);
  for (Colour c = 0; c < g.r(); ++c) {
    std::vector<int> seen;
    for (Vertex x = 0; x <= t; ++x) seen.push_back(d.index_of(c, x));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  SearchLimits limits;
  limits.partition_max_n = std::max(limits.partition_max_n, n);
  limits.cover_max_n = std::max(limits.cover_max_n, n);
  MinCover cover = min_mono_cover(g, limits);
  MinPartition partition = min_mono_partition(g, limits);
  return cover.size == t + 1 && partition.size == t + 1 && check_cover(g, cover.witness).ok &&
         check_partition(g, partition.witness).ok;
}

bool r2_distinct_cover(const EdgeColouredGraph& g, const json&) {
  try {
    MonoCover cover = two_colour_distinct_cover(g);
    return check_distinct_colour_cover(g, cover).ok && cover.size() <= 2;
  } catch (const Error&) {
    return false;
  }
}

bool antipodal_boundary(const EdgeColouredGraph& g, const json& w) {
  int r = w.at("r").get<int>();
  long long parts = 1LL << r;
  int boundary = ceil_div((parts - 1) * g.n(), parts) - 1;
  return min_degree(g) == boundary && !distinct_colour_cover(g).has_value();
}

bool distinct_cover_exists(const EdgeColouredGraph& g, const json&) {
  std::optional<MonoCover> cover = distinct_colour_cover(g);
  return cover && check_distinct_colour_cover(g, *cover).ok;
}

bool two_partition_exists(const EdgeColouredGraph& g, const json&) {
  return exists_two_partition(g).has_value();
}

bool two_partition_valid(const EdgeColouredGraph& g, const json&) {
  std::optional<MonoPartition> p = exists_two_partition(g);
  return !p || (check_partition(g, *p).ok && p->size() <= 2);
}

HeuristicConfig heuristic_config(const json& w) {
  HeuristicConfig cfg;
  cfg.seed = w.at("seed").get<std::uint64_t>();
  return cfg;
}

bool heuristic_valid(const EdgeColouredGraph& g, const json& w) {
  std::optional<MonoPartition> p = heuristic_two_partition(g, heuristic_config(w));
  return !p || (check_partition(g, *p).ok && p->size() <= 2);
}

bool heuristic_found(const EdgeColouredGraph& g, const json& w) {
  return heuristic_two_partition(g, heuristic_config(w)).has_value();
}

bool heuristic_deterministic(const EdgeColouredGraph& g, const json& w) {
  std::optional<MonoPartition> a = heuristic_two_partition(g, heuristic_config(w));
  std::optional<MonoPartition> b = heuristic_two_partition(g, heuristic_config(w));
  if (a.has_value() != b.has_value()) return false;
  return !a || a->parts == b->parts;
}

bool ryser_bound(const EdgeColouredGraph& g, const json&) {
  MinCover cover = min_mono_cover(g);
  return cover.size <= (g.r() - 1) * independence_number(g);
}

bool claim_holds(ClaimId id, const EdgeColouredGraph& g) {
  return claim_predicate_probe(g, id).holds;
}

const std::map<std::string, Predicate, std::less<>>& predicates() {
  static const std::map<std::string, Predicate, std::less<>> table = [] {
    std::map<std::string, Predicate, std::less<>> t{
        {"koenig-equality", koenig_equality},
        {"koenig-cover-within-t", cover_within_t},
        {"cover-t-sharpness", cover_t_sharpness},
        {"r2-distinct-cover", r2_distinct_cover},
        {"antipodal-boundary", antipodal_boundary},
        {"distinct-cover-exists", distinct_cover_exists},
        {"two-partition-exists", two_partition_exists},
        {"two-partition-valid", two_partition_valid},
        {"heuristic-partition-valid", heuristic_valid},
        {"heuristic-partition-found", heuristic_found},
        {"heuristic-deterministic", heuristic_deterministic},
        {"ryser-bound", ryser_bound},
    };
    for (ClaimId id : {ClaimId::kSmallBlueComponent, ClaimId::kPairIntersection,
                       ClaimId::kHalfOrderComponent, ClaimId::kLargeCrossingComponent,
                       ClaimId::kDifferenceBound})
      t.emplace("claim:" + std::string(to_string(id)),
                [id](const EdgeColouredGraph& g, const json&) { return claim_holds(id, g); });
    return t;
  }();
  return table;
}

}  // namespace

bool evaluate_predicate(const std::string& predicate, const EdgeColouredGraph& g,
                        const json& witness) {
  auto it = predicates().find(predicate);
  if (it == predicates().end()) throw std::invalid_argument("unknown predicate: " + predicate);
  return it->second(g, witness);
}

bool replay_certificate(const Certificate& cert) {
  EdgeColouredGraph g = parse_graph(cert.graph);
  return !evaluate_predicate(cert.predicate, g, cert.witness);
}

// ---------------------------------------------------------------------------
// Suites.

namespace {

class Tally {
 public:
  explicit Tally(VerificationResult& result) : result_(result) {}

  bool check(const EdgeColouredGraph& g, const std::string& predicate,
             const json& witness = json::object(), const std::string& annotation = {}) {
    bool ok = evaluate_predicate(predicate, g, witness);
    record(ok, g, predicate, witness, annotation);
    return ok;
  }

  void record(bool ok, const EdgeColouredGraph& g, const std::string& predicate,
              const json& witness, const std::string& annotation = {}) {
    ++result_.visited;
    if (ok) {
      ++result_.passes;
      return;
    }
    ++result_.failures;
    result_.certificates.push_back({to_text(g), predicate, witness, annotation});
  }

 private:
  VerificationResult& result_;
};

std::uint64_t pick(std::uint64_t given, std::uint64_t fallback) { return given ? given : fallback; }
int pick(int given, int fallback) { return given > 0 ? given : fallback; }

EnumerationOptions enumeration_options(const SuiteParams& p) {
  EnumerationOptions o;
  o.threads = std::max(1, p.threads);
  o.serial_visitor = true;
  return o;
}

void koenig_internal(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  std::uint64_t samples = pick(p.samples, std::uint64_t{10000});
  int side = pick(p.n_max, 50);
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(instance_seed(p.seed, i));
    int left = std::uniform_int_distribution<int>(1, side)(rng);
    int right = std::uniform_int_distribution<int>(1, side)(rng);
    // Mostly sparse, so that maximum matchings are far from perfect.
    double density = std::pow(std::uniform_real_distribution<double>(0, 1)(rng), 3);
    std::bernoulli_distribution edge(density);
    EdgeColouredGraph g(left + right, 1);
    for (int a = 0; a < left; ++a)
      for (int b = 0; b < right; ++b)
        if (edge(rng)) g.add_edge(a, left + b, 0);
    tally.check(g, "koenig-equality", json{{"left_size", left}});
  }
  out.passed = out.failures == 0;
}

void prop_koenig_cover(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  int n_max = pick(p.n_max, 6);
  json exhaustive = json::object();
  for (int t = 1; t <= 3; ++t) {
    for (int n = 1; n <= n_max; ++n) {
      int floor = static_cast<int>(std::max(0LL, integral_degree_threshold(n, t)));
      json w{{"t", t}};
      EnumerationStats stats = enumerate_colourings(
          n, 2, EnumerationMode::kWithNonEdges, floor,
          [&](const EdgeColouredGraph& g, std::uint64_t) {
            return tally.check(g, "koenig-cover-within-t", w);
          },
          enumeration_options(p));
      exhaustive["t=" + std::to_string(t) + ",n=" + std::to_string(n)] = stats.visited;
    }
  }
  out.details["exhaustive"] = exhaustive;

  std::uint64_t samples = pick(p.samples, std::uint64_t{10000});
  for (std::uint64_t i = 0; i < samples; ++i) {
    int n = 8 + static_cast<int>(i % 7);
    int t = 1 + static_cast<int>((i / 7) % 3);
    int floor = static_cast<int>(integral_degree_threshold(n, t));
    EdgeColouredGraph g = random_dense_coloured(n, 2, floor, instance_seed(p.seed, i));
    tally.check(g, "koenig-cover-within-t", json{{"t", t}});
  }
  out.details["sampled"] = samples;
  out.passed = out.failures == 0;
}

void sharpness_cover_t(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  json rows = json::array();
  for (auto [t, n] : std::vector<std::pair<int, int>>{{2, 12}, {2, 15}, {3, 16}, {4, 20}}) {
    if (p.n_max > 0 && n > p.n_max) continue;
    EdgeColouredGraph g = build_cover_t_example(n, t);
    bool ok = tally.check(g, "cover-t-sharpness", json{{"t", t}});
    rows.push_back(json{{"n", n}, {"t", t}, {"min_degree", min_degree(g)}, {"ok", ok}});
  }
  out.details["instances"] = rows;
  out.passed = out.failures == 0 && out.visited > 0;
}

void lemma_r2_distinct(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  int n_max = pick(p.n_max, 6);
  json exhaustive = json::object();
  for (int n = 4; n <= n_max; ++n) {
    EnumerationStats stats = enumerate_colourings(
        n, 2, EnumerationMode::kWithNonEdges, ceil_div(3LL * n, 4),
        [&](const EdgeColouredGraph& g, std::uint64_t) {
          return tally.check(g, "r2-distinct-cover");
        },
        enumeration_options(p));
    exhaustive["n=" + std::to_string(n)] = stats.visited;
  }
  out.details["exhaustive"] = exhaustive;
  for (int n : {8, 12, 16}) tally.check(build_antipodal_example(n, 2), "antipodal-boundary", json{{"r", 2}});
  out.details["boundary"] = json::array({8, 12, 16});
  out.passed = out.failures == 0;
}

void thm_r3_distinct(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  std::uint64_t complete = pick(p.samples, std::uint64_t{100000});
  std::uint64_t constrained = p.samples ? std::max<std::uint64_t>(1, p.samples / 100) : 1000;
  std::uint64_t counter = 0;
  for (std::uint64_t i = 0; i < complete; ++i)
    tally.check(random_dense_coloured(8, 3, 7, instance_seed(p.seed, counter++)),
                "distinct-cover-exists");
  int n_hi = std::max(9, pick(p.n_max, 16));
  for (std::uint64_t i = 0; i < constrained; ++i) {
    int n = 9 + static_cast<int>(i % static_cast<std::uint64_t>(n_hi - 8));
    tally.check(random_dense_coloured(n, 3, ceil_div(7LL * n, 8), instance_seed(p.seed, counter++)),
                "distinct-cover-exists");
  }
  tally.check(build_antipodal_example(16, 3), "antipodal-boundary", json{{"r", 3}});
  out.details["complete_k8"] = complete;
  out.details["degree_constrained"] = constrained;
  out.passed = out.failures == 0;
}

void thm_two_partition(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  std::uint64_t samples = pick(p.samples, std::uint64_t{1000});
  int n_hi = std::max(12, pick(p.n_max, 16));
  std::uint64_t hard = 0;
  std::uint64_t asymptotic = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    int n = 12 + static_cast<int>(i % static_cast<std::uint64_t>(n_hi - 11));
    EdgeColouredGraph g = random_dense_coloured(n, 2, two_partition_degree(n), instance_seed(p.seed, i));
    std::optional<MonoPartition> part = exists_two_partition(g);
    if (!part) {
      ++asymptotic;
      tally.record(false, g, "two-partition-exists", json::object(),
                   std::string(kAsymptoticAnnotation));
    } else if (!check_partition(g, *part).ok || part->size() > 2) {
      ++hard;
      tally.record(false, g, "two-partition-valid", json{{"partition", to_json(part->parts)}});
    } else {
      tally.record(true, g, "two-partition-exists", json::object());
    }
  }
  // The cover-t example with t = 2 sits one below the degree threshold and
  // has no 2-partition; its certificate must fail again on replay.
  Certificate probe{to_text(build_cover_t_example(12, 2)), "two-partition-exists",
                    json::object(), std::string(kAsymptoticAnnotation)};
  bool replay_ok = replay_certificate(probe);
  for (const Certificate& c : out.certificates) replay_ok = replay_ok && replay_certificate(c);
  out.details["asymptotic_counterexamples"] = asymptotic;
  out.details["invalid_partitions"] = hard;
  out.details["replay_self_check"] = replay_ok;
  out.passed = hard == 0 && replay_ok;
}

void heuristic_partition(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  std::uint64_t samples = pick(p.samples, std::uint64_t{200});
  int n_hi = std::max(60, pick(p.n_max, 200));
  std::uint64_t found = 0;
  std::uint64_t invalid = 0;
  std::uint64_t nondeterministic = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    int n = samples == 1 ? 60 : 60 + static_cast<int>(i * (n_hi - 60) / (samples - 1));
    std::uint64_t seed = instance_seed(p.seed, i);
    EdgeColouredGraph g = random_dense_coloured(n, 2, two_partition_degree(n), seed);
    json w{{"seed", seed}};
    HeuristicConfig cfg;
    cfg.seed = seed;
    std::optional<MonoPartition> a = heuristic_two_partition(g, cfg);
    std::optional<MonoPartition> b = heuristic_two_partition(g, cfg);
    bool same = a.has_value() == b.has_value() && (!a || a->parts == b->parts);
    bool valid = !a || (check_partition(g, *a).ok && a->size() <= 2);
    if (a) ++found;
    if (!valid) {
      ++invalid;
      tally.record(false, g, "heuristic-partition-valid", w);
    } else if (!same) {
      ++nondeterministic;
      tally.record(false, g, "heuristic-deterministic", w);
    } else if (!a) {
      tally.record(false, g, "heuristic-partition-found", w);
    } else {
      tally.record(true, g, "heuristic-partition-valid", w);
    }
  }
  double rate = samples ? static_cast<double>(found) / static_cast<double>(samples) : 0.0;
  out.details["found"] = found;
  out.details["success_rate"] = rate;
  out.details["invalid"] = invalid;
  out.details["nondeterministic"] = nondeterministic;
  out.passed = invalid == 0 && nondeterministic == 0 && rate >= 0.9;
}

struct ClaimPlan {
  ClaimId id;
  int r;
  int n_lo;
  int n_hi;
  std::function<int(int)> degree;
};

void claim_probes(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  std::uint64_t target = pick(p.samples, std::uint64_t{1000});
  std::uint64_t budget = 20 * target;
  auto seven_eighths = [](int n) { return ceil_div(7LL * n, 8); };
  std::vector<ClaimPlan> plans{
      {ClaimId::kSmallBlueComponent, 2, 8, 14, two_partition_degree},
      {ClaimId::kPairIntersection, 3, 8, 16, seven_eighths},
      {ClaimId::kHalfOrderComponent, 3, 8, 16, seven_eighths},
      {ClaimId::kLargeCrossingComponent, 3, 8, 16, seven_eighths},
      {ClaimId::kDifferenceBound, 3, 8, 16, seven_eighths},
  };
  bool all_ok = true;
  std::uint64_t stream = 0;
  for (const ClaimPlan& plan : plans) {
    int n_hi = p.n_max > 0 ? std::max(plan.n_lo, std::min(plan.n_hi, p.n_max)) : plan.n_hi;
    std::uint64_t eligible = 0;
    std::uint64_t violations = 0;
    std::uint64_t drawn = 0;
    std::string predicate = "claim:" + std::string(to_string(plan.id));
    for (; drawn < budget && eligible < target; ++drawn) {
      int n = plan.n_lo + static_cast<int>(drawn % static_cast<std::uint64_t>(n_hi - plan.n_lo + 1));
      EdgeColouredGraph g = random_dense_coloured(n, plan.r, plan.degree(n),
                                                  instance_seed(p.seed, (stream << 40) | drawn));
      if (!claim_hypotheses_hold(g, plan.id)) continue;
      ++eligible;
      if (!tally.check(g, predicate)) ++violations;
    }
    ++stream;
    out.details[std::string(to_string(plan.id))] =
        json{{"drawn", drawn}, {"eligible", eligible}, {"violations", violations}};
    all_ok = all_ok && violations == 0 && eligible >= target;
  }
  out.details["target"] = target;
  out.passed = all_ok;
}

void ryser_probe(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  int n_max = pick(p.n_max, 5);
  json exhaustive = json::object();
  for (int n = 1; n <= n_max; ++n) {
    for (EnumerationMode mode : {EnumerationMode::kCompleteGraph, EnumerationMode::kWithNonEdges}) {
      EnumerationStats stats = enumerate_colourings(
          n, 2, mode, 0,
          [&](const EdgeColouredGraph& g, std::uint64_t) { return tally.check(g, "ryser-bound"); },
          enumeration_options(p));
      std::string key = (mode == EnumerationMode::kCompleteGraph ? "complete,n=" : "any,n=") +
                        std::to_string(n);
      exhaustive[key] = stats.visited;
    }
  }
  out.details["r2_exhaustive"] = exhaustive;
  std::uint64_t samples = pick(p.samples, std::uint64_t{10000});
  for (std::uint64_t i = 0; i < samples; ++i) {
    int n = 3 + static_cast<int>(i % 5);
    tally.check(random_dense_coloured(n, 3, n - 1, instance_seed(p.seed, i)), "ryser-bound");
  }
  out.details["r3_sampled"] = samples;
  out.passed = out.failures == 0;
}

void sharpness_antipodal(VerificationResult& out, const SuiteParams& p);

using SuiteFn = void (*)(VerificationResult&, const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"koenig-internal", koenig_internal},
      {"prop-koenig-cover", prop_koenig_cover},
      {"sharpness-cover-t", sharpness_cover_t},
      {"lemma-r2-distinct", lemma_r2_distinct},
      {"thm-r3-distinct", thm_r3_distinct},
      {"sharpness-antipodal", sharpness_antipodal},
      {"thm-two-partition", thm_two_partition},
      {"heuristic-partition", heuristic_partition},
      {"claim-probes", claim_probes},
      {"ryser-probe", ryser_probe},
  };
  return table;
}

void sharpness_antipodal(VerificationResult& out, const SuiteParams& p) {
  Tally tally(out);
  json rows = json::array();
  for (auto [n, r] : std::vector<std::pair<int, int>>{{8, 2}, {12, 2}, {16, 2}, {16, 3}}) {
    if (p.n_max > 0 && n > p.n_max) continue;
    EdgeColouredGraph g = build_antipodal_example(n, r);
    bool ok = tally.check(g, "antipodal-boundary", json{{"r", r}});
    rows.push_back(json{{"n", n}, {"r", r}, {"min_degree", min_degree(g)}, {"ok", ok}});
  }
  out.details["instances"] = rows;
  out.passed = out.failures == 0 && out.visited > 0;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : suite_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerificationResult run_suite(const std::string& id, const SuiteParams& params) {
  auto it = std::find_if(suite_table().begin(), suite_table().end(),
                         [&](const auto& entry) { return entry.first == id; });
  if (it == suite_table().end()) throw std::invalid_argument("unknown suite: " + id);

  VerificationResult result;
  result.id = id;
  result.seed = params.seed;
  auto start = std::chrono::steady_clock::now();
  it->second(result, params);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

json make_report(const std::vector<VerificationResult>& results, const json& config) {
  json suites = json::array();
  bool ok = true;
  for (const VerificationResult& r : results) {
    suites.push_back(to_json(r));
    ok = ok && r.passed;
  }
  return json{{"version", std::string(kVersion)},
              {"config", config},
              {"suites", suites},
              {"verdict", ok ? "pass" : "fail"}};
}

void emit_report(const std::vector<VerificationResult>& results, const std::filesystem::path& path,
                 ReportFormat format, const json& config) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  if (format == ReportFormat::kJson) {
    out << make_report(results, config).dump(2) << '\n';
  } else {
    out << "id,visited,passes,failures,certificates,seconds,passed\n";
    for (const VerificationResult& r : results)
      out << r.id << ',' << r.visited << ',' << r.passes << ',' << r.failures << ','
          << r.certificates.size() << ',' << r.seconds << ',' << (r.passed ? "true" : "false")
          << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace mono::harness
