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
#include <span>
#include <vector>

namespace ponplan {

// Ranked per-user offered bandwidths v_k = c * k^-alpha, k = 1..size, with c
// chosen so the arithmetic mean of the values equals `mean_target`. A user's
// offered traffic is v_K for a rank K drawn uniformly from 1..size, so rank 1
// is the heaviest hitter. Immutable once built.
class ZipfPopulation {
 public:
  // Throws InvalidArgument if size == 0, alpha < 0 or mean_target <= 0.
  ZipfPopulation(std::size_t size, double alpha, double mean_target);

  std::size_t size() const noexcept { return values_.size(); }
  double alpha() const noexcept { return alpha_; }
  double mean_target() const noexcept { return mean_target_; }

  // v_1 >= v_2 >= ... >= v_size, in Mb/s.
  std::span<const double> values() const noexcept { return values_; }
  double heaviest() const noexcept { return values_.front(); }
  double lightest() const noexcept { return values_.back(); }

 private:
  double alpha_;
  double mean_target_;
  std::vector<double> values_;
};

ZipfPopulation build_population(std::size_t size, double alpha, double mean_target);

// Fraction of total traffic offered by the top floor(fraction * size) ranks
// (at least one). `fraction` must lie in (0, 1].
double share_of_top(const ZipfPopulation& pop, double fraction);

struct PopulationStats {
  double mean = 0.0;
  double std_dev = 0.0;  // population (1/size) standard deviation
};

PopulationStats population_stats(const ZipfPopulation& pop);

struct CdfPoint {
  double user_fraction = 0.0;
  double traffic_share = 0.0;
};

// Lorenz-style curve: point k is (k / size, share of the top k ranks).
std::vector<CdfPoint> cdf_points(const ZipfPopulation& pop);

}  // namespace ponplan
