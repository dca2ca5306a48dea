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

#include "hwqubo/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hwqubo/verify.hpp"

namespace hwqubo {

void InstanceConfig::validate() const {
  if (num_vars < 2) {
    throw std::invalid_argument("instances need at least two variables");
  }
  if (num_terms < 1) {
    throw std::invalid_argument("instances need at least one term");
  }
  if (max_term_degree < 2) {
    throw std::invalid_argument("max term degree must be at least 2");
  }
  if (coef_lo > coef_hi) {
    throw std::invalid_argument("coefficient range is empty");
  }
  if (std::max(std::abs(coef_lo), std::abs(coef_hi)) < kMinCoefficient) {
    throw std::invalid_argument(
        "coefficient range holds no value of magnitude >= 0.5");
  }
}

InstanceConfig InstanceConfig::defaults(int num_vars, std::uint64_t seed) {
  InstanceConfig cfg;
  cfg.num_vars = num_vars;
  cfg.num_terms = num_vars;
  cfg.max_term_degree = std::min(num_vars, 6);
  cfg.seed = seed;
  return cfg;
}

Polynomial generate_instance(const InstanceConfig &cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const int top = std::min(cfg.max_term_degree, cfg.num_vars);
  std::uniform_int_distribution<int> size_dist(2, top);
  std::uniform_real_distribution<double> coef_dist(cfg.coef_lo, cfg.coef_hi);
  std::vector<std::uint32_t> pool(static_cast<std::size_t>(cfg.num_vars));
  std::iota(pool.begin(), pool.end(), 1);

  Polynomial poly;
  for (int t = 0; t < cfg.num_terms; ++t) {
    const int size = size_dist(rng);
    // Partial Fisher-Yates: the first `size` slots become the subset.
    for (int i = 0; i < size; ++i) {
      std::uniform_int_distribution<int> pick(i, cfg.num_vars - 1);
      std::swap(pool[static_cast<std::size_t>(i)],
                pool[static_cast<std::size_t>(pick(rng))]);
    }
    std::vector<VarId> vars;
    for (int i = 0; i < size; ++i) {
      vars.push_back(VarId::problem(pool[static_cast<std::size_t>(i)]));
    }
    double c = 0.0;
    do {
      c = coef_dist(rng);
    } while (std::abs(c) < kMinCoefficient);
    poly.add_term(Monomial(std::move(vars)), c);
  }
  return poly;
}

Polynomial pure_product(int n) {
  if (n < 1) {
    throw std::invalid_argument("a product needs at least one variable");
  }
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i) {
    vars.push_back(VarId::problem(static_cast<std::uint32_t>(i)));
  }
  Polynomial p;
  p.add_term(Monomial(std::move(vars)), 1.0);
  return p;
}

std::uint64_t instance_seed(std::uint64_t run_seed, int n, int sample) {
  // splitmix64 finaliser over the packed coordinates.
  std::uint64_t z = run_seed + 0x9e3779b97f4a7c15ULL *
                                   (static_cast<std::uint64_t>(n) << 32 |
                                    static_cast<std::uint32_t>(sample));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const char *to_string(Strategy s) {
  return s == Strategy::Chain ? "chain" : "baseline";
}

Strategy strategy_from_name(std::string_view name) {
  if (name == "chain") {
    return Strategy::Chain;
  }
  if (name == "baseline") {
    return Strategy::Baseline;
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

namespace {

struct Job {
  int n;
  std::uint64_t seed;
};

struct JobResult {
  std::vector<BenchRecord> records;
  std::size_t violations = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> error;
};

JobResult run_job(const Job &job, const BenchConfig &cfg,
                  const CouplingMap &device) {
  InstanceConfig icfg = InstanceConfig::defaults(job.n, job.seed);
  if (cfg.num_terms) {
    icfg.num_terms = *cfg.num_terms;
  }
  if (cfg.max_term_degree) {
    icfg.max_term_degree = *cfg.max_term_degree;
  }
  icfg.coef_lo = cfg.coef_lo;
  icfg.coef_hi = cfg.coef_hi;

  JobResult out;
  try {
    const Polynomial poly = generate_instance(icfg);
    const QaoaParams params = QaoaParams::uniform(1, cfg.gamma, cfg.beta);
    for (Strategy s : {Strategy::Baseline, Strategy::Chain}) {
      auto start = std::chrono::steady_clock::now();
      PipelineResult r = compile_polynomial(poly, device, params, s);
      auto stop = std::chrono::steady_clock::now();

      out.violations += check_connectivity(r.compilation.circuit, device).size();
      if (r.problem.total_variables() <= cfg.verify_limit) {
        ++out.checked;
        if (!check_quadratization(poly, r.problem).ok()) {
          ++out.failed;
        }
      }
      BenchRecord rec;
      rec.seed = job.seed;
      rec.n = job.n;
      rec.strategy = s;
      rec.aux_count = r.problem.aux_count();
      rec.depth = r.compilation.metrics.depth;
      rec.width = r.compilation.metrics.width;
      rec.two_qubit_count = r.compilation.metrics.two_qubit_count;
      rec.swap_count = metrics(r.compilation.logical_circuit).swap_count;
      rec.compile_time_ms =
          cfg.record_timing
              ? std::chrono::duration<double, std::milli>(stop - start).count()
              : 0.0;
      out.records.push_back(rec);
    }
  } catch (const std::exception &e) {
    out.records.clear();
    out.error = "N=" + std::to_string(job.n) + " seed=" +
                std::to_string(job.seed) + ": " + e.what();
  }
  return out;
}

}  // namespace

BenchReport run_benchmark(const BenchConfig &cfg, const CouplingMap &device) {
  if (cfg.samples < 0) {
    throw std::invalid_argument("sample count must not be negative");
  }
  std::vector<Job> jobs;
  for (int n : cfg.sizes) {
    for (int s = 0; s < cfg.samples; ++s) {
      jobs.push_back({n, instance_seed(cfg.seed, n, s)});
    }
  }

  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = run_job(jobs[i], cfg, device);
    }
  };
  unsigned threads = cfg.threads ? cfg.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto &t : pool) {
    t.join();
  }

  BenchReport report;
  for (auto &r : results) {
    report.records.insert(report.records.end(), r.records.begin(),
                          r.records.end());
    report.connectivity_violations += r.violations;
    report.quadratization_checked += r.checked;
    report.quadratization_failed += r.failed;
    if (r.error) {
      report.errors.push_back(*r.error);
    }
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const BenchRecord &a, const BenchRecord &b) {
              return std::tuple(a.n, a.seed, std::string_view(to_string(a.strategy))) <
                     std::tuple(b.n, b.seed, std::string_view(to_string(b.strategy)));
            });
  std::sort(report.errors.begin(), report.errors.end());

  std::vector<int> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int n : sizes) {
    try {
      PipelineResult r = compile_polynomial(
          pure_product(n), device, QaoaParams::uniform(1, cfg.gamma, cfg.beta),
          Strategy::Chain);
      report.control_depths.emplace_back(n, r.compilation.cost_layer_depth);
    } catch (const std::exception &e) {
      report.errors.push_back("control N=" + std::to_string(n) + ": " + e.what());
    }
  }
  return report;
}

std::string to_csv(const BenchReport &report, const BenchConfig &cfg,
                   const CouplingMap &device) {
  std::ostringstream out;
  out << "# generator=mt19937_64 seed=" << cfg.seed << " samples=" << cfg.samples
      << " terms="
      << (cfg.num_terms ? std::to_string(*cfg.num_terms) : std::string("auto"))
      << " max_degree="
      << (cfg.max_term_degree ? std::to_string(*cfg.max_term_degree)
                              : std::string("auto"))
      << " coef_range=" << cfg.coef_lo << ":" << cfg.coef_hi
      << " device=" << device.name() << "\n";
  out << "seed,N,strategy,aux_count,depth,width,two_qubit_count,swap_count,"
         "compile_time_ms\n";
  for (const BenchRecord &r : report.records) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", r.compile_time_ms);
    out << r.seed << ',' << r.n << ',' << to_string(r.strategy) << ','
        << r.aux_count << ',' << r.depth << ',' << r.width << ','
        << r.two_qubit_count << ',' << r.swap_count << ',' << ms << '\n';
  }
  return out.str();
}

nlohmann::json summary_json(const BenchReport &report, const BenchConfig &cfg,
                            const CouplingMap &device) {
  struct Acc {
    std::size_t count = 0;
    double depth = 0, width = 0, two_qubit = 0, swaps = 0, aux = 0, ms = 0;
  };
  std::map<std::pair<int, std::string>, Acc> groups;
  std::map<std::uint64_t, std::map<Strategy, std::size_t>> depth_of;
  for (const BenchRecord &r : report.records) {
    Acc &a = groups[{r.n, to_string(r.strategy)}];
    ++a.count;
    a.depth += static_cast<double>(r.depth);
    a.width += static_cast<double>(r.width);
    a.two_qubit += static_cast<double>(r.two_qubit_count);
    a.swaps += static_cast<double>(r.swap_count);
    a.aux += static_cast<double>(r.aux_count);
    a.ms += r.compile_time_ms;
    depth_of[r.seed][r.strategy] = r.depth;
  }

  nlohmann::json group_list = nlohmann::json::array();
  std::map<int, std::map<std::string, double>> mean_depth;
  for (const auto &[key, a] : groups) {
    const double n = static_cast<double>(a.count);
    mean_depth[key.first][key.second] = a.depth / n;
    group_list.push_back({{"N", key.first},
                          {"strategy", key.second},
                          {"count", a.count},
                          {"mean_depth", a.depth / n},
                          {"mean_width", a.width / n},
                          {"mean_two_qubit_count", a.two_qubit / n},
                          {"mean_swap_count", a.swaps / n},
                          {"mean_aux_count", a.aux / n},
                          {"mean_compile_time_ms", a.ms / n}});
  }

  nlohmann::json reduction = nlohmann::json::array();
  for (const auto &[n, by] : mean_depth) {
    if (!by.contains("chain") || !by.contains("baseline")) {
      continue;
    }
    double sum = 0.0;
    std::size_t pairs = 0;
    for (const BenchRecord &r : report.records) {
      if (r.n != n || r.strategy != Strategy::Chain) {
        continue;
      }
      const auto &d = depth_of[r.seed];
      if (d.contains(Strategy::Baseline) && d.at(Strategy::Baseline) > 0) {
        sum += 1.0 - static_cast<double>(d.at(Strategy::Chain)) /
                         static_cast<double>(d.at(Strategy::Baseline));
        ++pairs;
      }
    }
    reduction.push_back(
        {{"N", n},
         {"reduction_of_mean_depth", 1.0 - by.at("chain") / by.at("baseline")},
         {"mean_relative_reduction", pairs ? sum / static_cast<double>(pairs) : 0.0}});
  }

  nlohmann::json controls = nlohmann::json::array();
  for (auto [n, d] : report.control_depths) {
    controls.push_back({{"N", n}, {"cost_layer_depth", d}});
  }

  return {{"generator", "mt19937_64"},
          {"seed", cfg.seed},
          {"samples", cfg.samples},
          {"device", device.name()},
          {"groups", std::move(group_list)},
          {"depth_reduction", std::move(reduction)},
          {"pure_product_controls", std::move(controls)},
          {"connectivity_violations", report.connectivity_violations},
          {"quadratization_checked", report.quadratization_checked},
          {"quadratization_failed", report.quadratization_failed},
          {"errors", report.errors}};
}

std::vector<int> parse_sizes(std::string_view text) {
  auto number = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v < 1) {
      throw std::invalid_argument("bad size '" + std::string(part) + "'");
    }
    return v;
  };
  std::vector<int> out;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    int lo = number(text.substr(0, dots));
    int hi = number(text.substr(dots + 2));
    if (lo > hi) {
      throw std::invalid_argument("size range runs backwards");
    }
    for (int n = lo; n <= hi; ++n) {
      out.push_back(n);
    }
    return out;
  }
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t comma = text.find(',', begin);
    if (comma == std::string_view::npos) {
      comma = text.size();
    }
    out.push_back(number(text.substr(begin, comma - begin)));
    begin = comma + 1;
  }
  return out;
}

}  // namespace hwqubo
