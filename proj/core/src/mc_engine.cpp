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

#include "ponplan/mc_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "ponplan/error.hpp"
#include "ponplan/random.hpp"

namespace ponplan {

namespace {

void validate_level(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw InvalidArgument(std::string(what) + " must lie in (0, 1), got " + std::to_string(p));
  }
}

void validate_sampling(const ScenarioConfig& config) {
  if (config.trials < 1) throw InvalidArgument("trial count must be at least 1");
  if (config.bootstrap_reps < 1) throw InvalidArgument("bootstrap resample count must be at least 1");
  validate_level(config.confidence, "confidence");
  for (double p : config.percentiles) validate_level(p, "percentile");
}

}  // namespace

void ScenarioConfig::validate() const {
  if (split_n < 1) throw InvalidArgument("split must be at least 1, got " + std::to_string(split_n));
  validate_sampling(*this);
}

std::optional<PercentileEstimate> SimulationSummary::find(double p) const {
  for (const auto& e : estimates) {
    if (std::abs(e.p - p) < 1e-9) return e;
  }
  return std::nullopt;
}

std::vector<TrialSet> simulate_split_ladder(const ZipfPopulation& pop, std::span<const int> splits,
                                            const ScenarioConfig& config) {
  validate_sampling(config);
  if (splits.empty()) throw InvalidArgument("split ladder is empty");
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (splits[i] < 1) throw InvalidArgument("split must be at least 1, got " + std::to_string(splits[i]));
    if (i > 0 && splits[i] <= splits[i - 1]) throw InvalidArgument("split ladder must be strictly increasing");
  }

  const auto values = pop.values();
  const std::size_t ranks = values.size();
  const std::size_t trials = config.trials;

  std::vector<TrialSet> out(splits.size());
  for (std::size_t s = 0; s < splits.size(); ++s) {
    out[s].samples.resize(trials);
    out[s].provenance = {ranks, pop.alpha(), pop.mean_target(), splits[s], config.seed};
  }

  detail::parallel_for(trials, config.threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    // Samples are summed per rank from draw counts, so each one depends only
    // on the multiset of ranks drawn.
    std::vector<std::uint32_t> counts(ranks);
    for (std::size_t t = begin; t < end; ++t) {
      std::fill(counts.begin(), counts.end(), 0U);
      SplitMix64 rng = make_stream(config.seed, StreamDomain::kTrial, t);
      int drawn = 0;
      for (std::size_t s = 0; s < splits.size(); ++s) {
        for (; drawn < splits[s]; ++drawn) ++counts[uniform_index(rng, ranks)];
        double sum = 0.0;
        for (std::size_t k = 0; k < ranks; ++k) {
          if (counts[k] != 0) sum += static_cast<double>(counts[k]) * values[k];
        }
        out[s].samples[t] = sum;
      }
    }
  });
  return out;
}

TrialSet simulate_aggregate(const ZipfPopulation& pop, const ScenarioConfig& config) {
  config.validate();
  const int split = config.split_n;
  return std::move(simulate_split_ladder(pop, std::span<const int>(&split, 1), config).front());
}

double sorted_percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InvalidArgument("percentile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("percentile level must lie in [0, 1]");
  const double h = 1.0 + static_cast<double>(sorted.size() - 1) * p;
  const double lower = std::floor(h);
  const auto lo = static_cast<std::size_t>(lower) - 1;
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - lower) * (sorted[hi] - sorted[lo]);
}

double empirical_percentile(std::span<const double> samples, double p) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted_percentile(sorted, p);
}

std::vector<PercentileEstimate> bootstrap_percentiles(const TrialSet& trials, std::span<const double> ps,
                                                      std::size_t reps, double confidence,
                                                      std::uint64_t seed, unsigned threads) {
  if (trials.samples.empty()) throw InvalidArgument("bootstrap of an empty trial set");
  if (reps < 1) throw InvalidArgument("bootstrap resample count must be at least 1");
  validate_level(confidence, "confidence");
  for (double p : ps) validate_level(p, "percentile");

  std::vector<double> sorted = trials.samples;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  // Each level p needs the order statistics at ranks floor(h) and ceil(h)
  // of every resample; collect them once in ascending rank order.
  struct Probe {
    std::size_t rank;  // 1-based
    std::size_t level;
    bool upper;
  };
  std::vector<Probe> probes;
  std::vector<double> fractions(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const double h = 1.0 + static_cast<double>(n - 1) * ps[j];
    const auto lo = static_cast<std::size_t>(std::floor(h));
    fractions[j] = h - std::floor(h);
    probes.push_back({lo, j, false});
    probes.push_back({std::min(lo + 1, n), j, true});
  }
  std::sort(probes.begin(), probes.end(), [](const Probe& a, const Probe& b) { return a.rank < b.rank; });

  // replicate[j][r]: level-j percentile of resample r.
  std::vector<std::vector<double>> replicate(ps.size(), std::vector<double>(reps));

  detail::parallel_for(reps, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> counts(n);
    std::vector<double> lower(ps.size());
    std::vector<double> upper(ps.size());
    for (std::size_t r = begin; r < end; ++r) {
      std::fill(counts.begin(), counts.end(), 0U);
      SplitMix64 rng = make_stream(seed, StreamDomain::kBootstrap, r);
      for (std::size_t i = 0; i < n; ++i) ++counts[uniform_index(rng, n)];

      std::size_t index = 0;
      std::size_t below = 0;  // resample elements strictly before `index`
      for (const Probe& probe : probes) {
        while (below + counts[index] < probe.rank) below += counts[index++];
        (probe.upper ? upper : lower)[probe.level] = sorted[index];
      }
      for (std::size_t j = 0; j < ps.size(); ++j) {
        replicate[j][r] = lower[j] + fractions[j] * (upper[j] - lower[j]);
      }
    }
  });

  const double tail = (1.0 - confidence) / 2.0;
  std::vector<PercentileEstimate> out;
  out.reserve(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    std::sort(replicate[j].begin(), replicate[j].end());
    PercentileEstimate e;
    e.p = ps[j];
    e.point = sorted_percentile(sorted, ps[j]);
    e.ci_low = std::min(sorted_percentile(replicate[j], tail), e.point);
    e.ci_high = std::max(sorted_percentile(replicate[j], 1.0 - tail), e.point);
    out.push_back(e);
  }
  return out;
}

PercentileEstimate bootstrap_ci(const TrialSet& trials, double p, std::size_t reps, double confidence,
                                std::uint64_t seed, unsigned threads) {
  return bootstrap_percentiles(trials, std::span<const double>(&p, 1), reps, confidence, seed, threads).front();
}

Boxplot tukey_boxplot(std::span<const double> sorted) {
  if (sorted.empty()) throw InvalidArgument("boxplot of an empty sample");
  Boxplot box;
  box.q1 = sorted_percentile(sorted, 0.25);
  box.median = sorted_percentile(sorted, 0.50);
  box.q3 = sorted_percentile(sorted, 0.75);
  const double fence = 1.5 * (box.q3 - box.q1);
  const auto low = std::lower_bound(sorted.begin(), sorted.end(), box.q1 - fence);
  const auto high = std::upper_bound(sorted.begin(), sorted.end(), box.q3 + fence);
  box.whisker_low = std::min(*low, box.q1);
  box.whisker_high = std::max(*(high - 1), box.q3);
  return box;
}

SimulationSummary summarize(const TrialSet& trials, int year, const TrafficDemand& demand,
                            const ScenarioConfig& config) {
  validate_sampling(config);
  SimulationSummary summary;
  summary.year = year;
  summary.split_n = trials.provenance.split_n;
  summary.demand = demand;
  summary.estimates = bootstrap_percentiles(trials, config.percentiles, config.bootstrap_reps, config.confidence,
                                            config.seed, config.threads);
  std::vector<double> sorted = trials.samples;
  std::sort(sorted.begin(), sorted.end());
  summary.boxplot = tukey_boxplot(sorted);
  return summary;
}

SimulationSummary run_scenario(const ForecastParams& params, int year, const ScenarioConfig& config,
                               const PopulationShape& shape) {
  config.validate();
  const TrafficDemand demand = project_demand(params, year);
  const ZipfPopulation pop(shape.size, shape.alpha, demand.peak_mbps);
  return summarize(simulate_aggregate(pop, config), year, demand, config);
}

}  // namespace ponplan
