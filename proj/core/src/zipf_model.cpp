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

#include "ponplan/zipf_model.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ponplan/error.hpp"

namespace ponplan {

ZipfPopulation::ZipfPopulation(std::size_t size, double alpha, double mean_target)
    : alpha_(alpha), mean_target_(mean_target) {
  if (size == 0) throw InvalidArgument("population size must be at least 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("zipf alpha must be non-negative, got " + std::to_string(alpha));
  }
  if (!(mean_target > 0.0) || !std::isfinite(mean_target)) {
    throw InvalidArgument("population mean must be positive, got " + std::to_string(mean_target));
  }

  values_.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    values_[k] = std::pow(static_cast<double>(k + 1), -alpha);
  }
  const double weight_sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  // size / sum is exactly 1 when alpha == 0, so a flat population equals the
  // target bit for bit.
  const double scale = mean_target * (static_cast<double>(size) / weight_sum);
  for (double& v : values_) v *= scale;
}

ZipfPopulation build_population(std::size_t size, double alpha, double mean_target) {
  return ZipfPopulation(size, alpha, mean_target);
}

namespace {

double top_share(std::span<const double> values, std::size_t count) {
  const double top = std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(count), 0.0);
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  return top / total;
}

}  // namespace

double share_of_top(const ZipfPopulation& pop, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw InvalidArgument("top fraction must lie in (0, 1], got " + std::to_string(fraction));
  }
  if (fraction == 1.0) return 1.0;
  const auto n = pop.size();
  // 0.29 * 100 evaluates to 28.999999999999996.
  auto count = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(n) + 1e-9));
  if (count < 1) count = 1;
  if (count > n) count = n;
  return top_share(pop.values(), count);
}

PopulationStats population_stats(const ZipfPopulation& pop) {
  const auto values = pop.values();
  if (values.front() == values.back()) return {values.front(), 0.0};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / n)};
}

std::vector<CdfPoint> cdf_points(const ZipfPopulation& pop) {
  const auto values = pop.values();
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  const double n = static_cast<double>(values.size());

  std::vector<CdfPoint> points;
  points.reserve(values.size());
  double running = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    running += values[k];
    points.push_back({static_cast<double>(k + 1) / n, running / total});
  }
  points.back().traffic_share = 1.0;
  return points;
}

}  // namespace ponplan
