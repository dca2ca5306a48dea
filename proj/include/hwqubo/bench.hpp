// Copyright 2026 The hwqubo Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hwqubo/compiler.hpp"

namespace hwqubo {

struct InstanceConfig {
  int num_vars = 8;
  int num_terms = 8;
  int max_term_degree = 6;
  double coef_lo = -10.0;
  double coef_hi = 10.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument for an unusable configuration.
  void validate() const;
  /// num_terms = N and max_term_degree = min(N, 6).
  static InstanceConfig defaults(int num_vars, std::uint64_t seed);
};

/// Coefficients smaller than this in magnitude are redrawn.
inline constexpr double kMinCoefficient = 0.5;

/// Sum of c * prod(x_i) over `num_terms` random subsets of x1..xN. Subset
/// sizes are uniform in [2, min(max_term_degree, N)], coefficients uniform
/// in [coef_lo, coef_hi]. Repeated subsets merge by adding coefficients.
/// Uses std::mt19937_64 seeded with cfg.seed.
Polynomial generate_instance(const InstanceConfig &cfg);

/// Product x1 * ... * xN. Throws std::invalid_argument for N < 1.
Polynomial pure_product(int n);

/// Seed of sample `sample` at size `n` under a run seed.
std::uint64_t instance_seed(std::uint64_t run_seed, int n, int sample);

const char *to_string(Strategy s);
Strategy strategy_from_name(std::string_view name);

struct BenchRecord {
  std::uint64_t seed = 0;
  int n = 0;
  Strategy strategy = Strategy::Chain;
  std::size_t aux_count = 0;
  std::size_t depth = 0;
  std::size_t width = 0;
  std::size_t two_qubit_count = 0;
  std::size_t swap_count = 0;
  double compile_time_ms = 0.0;
};

struct BenchConfig {
  std::vector<int> sizes;
  int samples = 1;
  std::uint64_t seed = 0;
  /// Defaults to N terms per instance.
  std::optional<int> num_terms;
  /// Defaults to min(N, 6).
  std::optional<int> max_term_degree;
  double coef_lo = -10.0;
  double coef_hi = 10.0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// When false, compile_time_ms is written as 0 so output is reproducible.
  bool record_timing = true;
  /// Largest total variable count given to check_quadratization.
  std::size_t verify_limit = 20;
  double gamma = 0.5;
  double beta = 0.5;
};

struct BenchReport {
  /// Sorted by (N, seed, strategy).
  std::vector<BenchRecord> records;
  std::size_t connectivity_violations = 0;
  std::size_t quadratization_checked = 0;
  std::size_t quadratization_failed = 0;
  /// Chain cost-layer depth of the pure product at each size.
  std::vector<std::pair<int, std::size_t>> control_depths;
  /// Instances that failed to compile, with the reason.
  std::vector<std::string> errors;
};

BenchReport run_benchmark(const BenchConfig &cfg, const CouplingMap &device);

std::string to_csv(const BenchReport &report, const BenchConfig &cfg,
                   const CouplingMap &device);

/// Means per (N, strategy), depth reduction per N, controls and check counts.
nlohmann::json summary_json(const BenchReport &report, const BenchConfig &cfg,
                            const CouplingMap &device);

/// Parses "8..16", "8,10,12" or "12".
std::vector<int> parse_sizes(std::string_view text);

}  // namespace hwqubo
