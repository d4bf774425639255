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

// Verification suites, counterexample certificates and reports.

#ifndef MONO_HARNESS_HPP
#define MONO_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mono/cover.hpp"
#include "mono/graph.hpp"

namespace mono::harness {

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr std::string_view kAsymptoticAnnotation = "asymptotic-statement";

/// Zero means "suite default" for n_max and samples.
struct SuiteParams {
  int n_max = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int threads = 1;
};

/// A failing instance: graph text, the predicate that failed on it and
/// whatever the predicate needs to be re-evaluated.
struct Certificate {
  std::string graph;
  std::string predicate;
  nlohmann::json witness = nlohmann::json::object();
  std::string annotation;
};

struct VerificationResult {
  std::string id;
  std::uint64_t visited = 0;
  std::uint64_t passes = 0;
  std::uint64_t failures = 0;
  std::vector<Certificate> certificates;
  double seconds = 0.0;
  std::uint64_t seed = 0;
  /// Suite-specific counters and notes.
  nlohmann::json details = nlohmann::json::object();
  bool passed = false;
};

/// Every suite id run_suite accepts.
const std::vector<std::string>& suite_ids();

/// Throws std::invalid_argument for an unknown id.
VerificationResult run_suite(const std::string& id, const SuiteParams& params = {});

/// Per-instance seed: a mix of the master seed and an instance counter.
std::uint64_t instance_seed(std::uint64_t master, std::uint64_t counter);

/// Re-evaluates the certificate's predicate on its graph. Returns true when
/// the predicate still fails. Throws std::invalid_argument for an unknown
/// predicate.
bool replay_certificate(const Certificate& cert);

/// Evaluates a named predicate on g; true means the instance passes.
bool evaluate_predicate(const std::string& predicate, const EdgeColouredGraph& g,
                        const nlohmann::json& witness);

nlohmann::json to_json(const MonoComponent& c);
nlohmann::json to_json(const std::vector<MonoComponent>& parts);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const VerificationResult& result);

enum class ReportFormat { kJson, kCsvSummary };

nlohmann::json make_report(const std::vector<VerificationResult>& results,
                           const nlohmann::json& config = nlohmann::json::object());

/// Throws mono::Error when the file cannot be written.
void emit_report(const std::vector<VerificationResult>& results,
                 const std::filesystem::path& path, ReportFormat format,
                 const nlohmann::json& config = nlohmann::json::object());

}  // namespace mono::harness

#endif  // MONO_HARNESS_HPP
