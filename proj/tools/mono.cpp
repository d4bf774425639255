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

// mono: analyse, cover and partition edge-coloured graphs; build extremal
// examples; run verification suites.
//
// Exit codes: 0 success, 1 a suite failed or no object exists, 2 usage,
// input or configuration error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mono/components.hpp"
#include "mono/constructions.hpp"
#include "mono/error.hpp"
#include "mono/exact.hpp"
#include "mono/graph.hpp"
#include "mono/harness.hpp"
#include "mono/koenig.hpp"
#include "mono/proof_guided.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

void print_parts(const std::vector<mono::MonoComponent>& parts) {
  for (const mono::MonoComponent& c : parts) std::cout << "  " << c.to_string() << '\n';
}

int emit_json(const json& j) {
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int run_analyze(const std::string& path, bool as_json) {
  mono::EdgeColouredGraph g = mono::load_graph(path);
  std::vector<std::size_t> counts;
  for (mono::Colour c = 0; c < g.r(); ++c) counts.push_back(mono::decompose(g, c).size());
  std::optional<int> alpha;
  if (g.n() <= 64) alpha = mono::independence_number(g);

  if (as_json) {
    json j{{"n", g.n()}, {"r", g.r()}, {"edges", g.edge_count()},
           {"min_degree", mono::min_degree(g)}, {"components", counts}};
    j["alpha"] = alpha ? json(*alpha) : json(nullptr);
    return emit_json(j);
  }
  std::cout << "n " << g.n() << "\nr " << g.r() << "\nedges " << g.edge_count()
            << "\nmin_degree " << mono::min_degree(g) << "\nalpha ";
  if (alpha)
    std::cout << *alpha << '\n';
  else
    std::cout << "skipped (n > 64)\n";
  for (mono::Colour c = 0; c < g.r(); ++c)
    std::cout << "components[" << c << "] " << counts[c] << '\n';
  return kOk;
}

int run_cover(const std::string& path, const std::string& method, bool as_json) {
  mono::EdgeColouredGraph g = mono::load_graph(path);
  mono::MonoCover cover = method == "koenig" ? mono::cover_two_coloured(g)
                                             : mono::min_mono_cover(g).witness;
  mono::Verdict v = mono::check_cover(g, cover);
  if (!v) throw mono::Error("internal: produced cover failed verification: " + v.reason);
  if (as_json)
    return emit_json(json{{"method", std::string(mono::to_string(cover.method))},
                          {"size", cover.size()},
                          {"parts", mono::harness::to_json(cover.parts)}});
  std::cout << "cover size " << cover.size() << " (" << mono::to_string(cover.method) << ")\n";
  print_parts(cover.parts);
  return kOk;
}

int run_partition(const std::string& path, const std::string& method, std::uint64_t seed,
                  int budget, bool as_json) {
  mono::EdgeColouredGraph g = mono::load_graph(path);
  std::optional<mono::MonoPartition> part;
  if (method == "exact") {
    part = mono::min_mono_partition(g).witness;
  } else {
    mono::HeuristicConfig cfg;
    cfg.seed = seed;
    if (budget > 0) cfg.star_retries = cfg.split_retries = budget;
    part = mono::heuristic_two_partition(g, cfg);
  }
  if (part && !mono::check_partition(g, *part))
    throw mono::Error("internal: produced partition failed verification");
  if (as_json) {
    json j{{"method", method}, {"found", part.has_value()}};
    if (part) {
      j["size"] = part->size();
      j["parts"] = mono::harness::to_json(part->parts);
    }
    emit_json(j);
  } else if (part) {
    std::cout << "partition size " << part->size() << '\n';
    print_parts(part->parts);
  } else {
    std::cout << "none\n";
  }
  return part ? kOk : kFailure;
}

int run_distinct(const std::string& path, const std::string& method, bool as_json) {
  mono::EdgeColouredGraph g = mono::load_graph(path);
  std::optional<mono::MonoCover> cover;
  if (method == "exact") {
    cover = mono::distinct_colour_cover(g);
  } else if (g.r() == 2) {
    cover = mono::two_colour_distinct_cover(g);
  } else if (g.r() == 3) {
    cover = mono::triple_intersection_cover(g);
    if (cover && !mono::check_distinct_colour_cover(g, *cover)) cover.reset();
  } else {
    throw mono::PreconditionError("constructive distinct cover supports r = 2 or 3");
  }
  if (as_json) {
    json j{{"method", method}, {"found", cover.has_value()}};
    if (cover) j["parts"] = mono::harness::to_json(cover->parts);
    emit_json(j);
  } else if (cover) {
    std::cout << "distinct-colour cover with " << cover->size() << " parts\n";
    print_parts(cover->parts);
  } else {
    std::cout << "none\n";
  }
  return cover ? kOk : kFailure;
}

int write_out(const mono::EdgeColouredGraph& g, const std::string& out) {
  if (out.empty() || out == "-")
    mono::write_graph(g, std::cout);
  else
    mono::save_graph(g, out);
  return kOk;
}

int run_verify(const std::string& suite, const mono::harness::SuiteParams& params,
               const std::string& json_path, const std::string& csv_path) {
  std::vector<std::string> ids;
  if (suite == "all")
    ids = mono::harness::suite_ids();
  else
    ids.push_back(suite);

  std::vector<mono::harness::VerificationResult> results;
  bool ok = true;
  for (const std::string& id : ids) {
    mono::harness::VerificationResult r = mono::harness::run_suite(id, params);
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  visited=" << r.visited
              << " passes=" << r.passes << " failures=" << r.failures << " seconds=" << r.seconds
              << '\n';
    for (const mono::harness::Certificate& c : r.certificates) {
      if (c.annotation == mono::harness::kAsymptoticAnnotation)
        std::cout << "  WARNING counterexample to an asymptotic statement (" << c.predicate
                  << "); see certificates\n";
    }
    ok = ok && r.passed;
    results.push_back(std::move(r));
  }
  json config{{"n_max", params.n_max},
              {"samples", params.samples},
              {"seed", params.seed},
              {"threads", params.threads},
              {"suites", ids}};
  if (!json_path.empty())
    mono::harness::emit_report(results, json_path, mono::harness::ReportFormat::kJson, config);
  if (!csv_path.empty())
    mono::harness::emit_report(results, csv_path, mono::harness::ReportFormat::kCsvSummary,
                               config);
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic covers and partitions of edge-coloured graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mono::harness::kVersion));
  bool as_json = false;
  app.add_flag("--json-output", as_json, "Print results as JSON");

  std::string graph_path;

  auto* analyze = app.add_subcommand("analyze", "Print n, r, min degree, alpha, component counts");
  analyze->add_option("graph", graph_path, "Graph file")->required();

  auto* cover = app.add_subcommand("cover", "Cover V by monochromatic components");
  cover->add_option("graph", graph_path, "Graph file")->required();
  std::string cover_method = "exact";
  cover->add_option("--method", cover_method)->check(CLI::IsMember({"koenig", "exact"}));

  auto* partition = app.add_subcommand("partition", "Partition V into monochromatic connected sets");
  partition->add_option("graph", graph_path, "Graph file")->required();
  std::string partition_method = "exact";
  std::uint64_t partition_seed = 0;
  int partition_budget = 0;
  partition->add_option("--method", partition_method)
      ->check(CLI::IsMember({"exact", "heuristic"}));
  partition->add_option("--seed", partition_seed);
  partition->add_option("--budget", partition_budget, "Retries per randomised step");

  auto* distinct = app.add_subcommand("distinct-cover", "Cover V by components of distinct colours");
  distinct->add_option("graph", graph_path, "Graph file")->required();
  std::string distinct_method = "exact";
  distinct->add_option("--method", distinct_method)
      ->check(CLI::IsMember({"exact", "constructive"}));

  auto* construct = app.add_subcommand("construct", "Generate a graph");
  construct->require_subcommand(1);
  mono::ConstructionSpec spec;
  std::string out_path;
  auto* cover_t = construct->add_subcommand("cover-t", "Extremal example for t-component covers");
  cover_t->add_option("--n", spec.n)->required();
  cover_t->add_option("--t", spec.t)->required();
  cover_t->add_option("--clique-colour", spec.clique_colour);
  cover_t->add_option("-o,--output", out_path);
  auto* antipodal = construct->add_subcommand("antipodal", "Antipodal 2^r-part example");
  antipodal->add_option("--n", spec.n)->required();
  antipodal->add_option("--r", spec.r)->required();
  antipodal->add_option("-o,--output", out_path);
  auto* random = construct->add_subcommand("random", "Seeded random dense colouring");
  random->add_option("--n", spec.n)->required();
  random->add_option("--r", spec.r)->required();
  random->add_option("--min-degree", spec.min_degree)->required();
  random->add_option("--seed", spec.seed);
  random->add_option("-o,--output", out_path);

  auto* verify = app.add_subcommand("verify", "Run a verification suite, or all of them");
  std::string suite;
  mono::harness::SuiteParams params;
  std::string json_path;
  std::string csv_path;
  std::vector<std::string> suite_choices = mono::harness::suite_ids();
  suite_choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--n-max", params.n_max);
  verify->add_option("--samples", params.samples);
  verify->add_option("--seed", params.seed);
  verify->add_option("--threads", params.threads);
  verify->add_option("--json", json_path, "Write the full JSON report here");
  verify->add_option("--csv", csv_path, "Write a per-suite CSV summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(graph_path, as_json);
    if (*cover) return run_cover(graph_path, cover_method, as_json);
    if (*partition)
      return run_partition(graph_path, partition_method, partition_seed, partition_budget,
                           as_json);
    if (*distinct) return run_distinct(graph_path, distinct_method, as_json);
    if (*construct) {
      if (*cover_t) spec.kind = mono::ConstructionKind::kCoverT;
      if (*antipodal) spec.kind = mono::ConstructionKind::kAntipodal;
      if (*random) spec.kind = mono::ConstructionKind::kRandomDense;
      return write_out(mono::build(spec), out_path);
    }
    if (*verify) return run_verify(suite, params, json_path, csv_path);
  } catch (const mono::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
