/*
 * Copyright 2026 The ponplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ponplan/forecast.hpp"
#include "ponplan/zipf_model.hpp"

namespace ponplan {

inline constexpr std::uint64_t kDefaultSeed = 20170901ULL;

// Shape of the per-user population; its mean is set from the demand forecast.
struct PopulationShape {
  std::size_t size = 100;
  double alpha = 1.0;
};

struct ScenarioConfig {
  int split_n = 1;
  std::size_t trials = 100'000;
  std::size_t bootstrap_reps = 1'000;
  double confidence = 0.95;
  std::vector<double> percentiles{0.50, 0.90, 0.99};
  std::uint64_t seed = kDefaultSeed;
  // Worker threads; 0 picks std::thread::hardware_concurrency(). Results do
  // not depend on this value.
  unsigned threads = 0;

  void validate() const;
};

struct TrialProvenance {
  std::size_t population_size = 0;
  double alpha = 0.0;
  double mean_target = 0.0;
  int split_n = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo draws of the aggregate offered traffic of one PON, in Mb/s.
struct TrialSet {
  std::vector<double> samples;
  TrialProvenance provenance;
};

struct PercentileEstimate {
  double p = 0.0;
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// Tukey five-number summary.
struct Boxplot {
  double whisker_low = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double whisker_high = 0.0;
};

struct SimulationSummary {
  int year = 0;
  int split_n = 0;
  TrafficDemand demand;
  std::vector<PercentileEstimate> estimates;
  Boxplot boxplot;

  // Estimate whose level equals `p` to within 1e-9, if present.
  std::optional<PercentileEstimate> find(double p) const;
};

// Each of config.trials samples is the sum of config.split_n ranks drawn
// uniformly with replacement from `pop`. Trial i uses its own random stream
// keyed by (seed, i), so output is bit-identical for any thread count.
TrialSet simulate_aggregate(const ZipfPopulation& pop, const ScenarioConfig& config);

// Simulates every split in `splits` (strictly increasing) in one pass. Trial i
// of split n consumes the first n draws of stream i, so the result for each
// split equals simulate_aggregate() with that split_n and the same seed.
std::vector<TrialSet> simulate_split_ladder(const ZipfPopulation& pop, std::span<const int> splits,
                                            const ScenarioConfig& config);

// Linear-interpolation quantile: with sorted x_1..x_n and h = 1 + (n-1)p,
// returns x_floor(h) + (h - floor(h)) (x_ceil(h) - x_floor(h)).
double empirical_percentile(std::span<const double> samples, double p);

// As empirical_percentile() but `sorted` must already be ascending.
double sorted_percentile(std::span<const double> sorted, double p);

// Percentile-bootstrap confidence interval for the p-quantile. The point
// estimate comes from the full trial set; the interval is widened if needed
// so that ci_low <= point <= ci_high.
PercentileEstimate bootstrap_ci(const TrialSet& trials, double p, std::size_t reps, double confidence,
                                std::uint64_t seed, unsigned threads = 0);

// Batch form sharing one set of resamples across all levels in `ps`.
std::vector<PercentileEstimate> bootstrap_percentiles(const TrialSet& trials, std::span<const double> ps,
                                                      std::size_t reps, double confidence,
                                                      std::uint64_t seed, unsigned threads = 0);

// Whiskers sit at the most extreme samples within 1.5 IQR of the quartiles.
Boxplot tukey_boxplot(std::span<const double> sorted);

SimulationSummary summarize(const TrialSet& trials, int year, const TrafficDemand& demand,
                            const ScenarioConfig& config);

// Forecast -> population (mean = peak demand) -> simulation -> summary.
SimulationSummary run_scenario(const ForecastParams& params, int year, const ScenarioConfig& config,
                               const PopulationShape& shape = {});

}  // namespace ponplan
