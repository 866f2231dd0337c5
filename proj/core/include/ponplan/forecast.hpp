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

#include <span>
#include <vector>

namespace ponplan {

// Unit conventions for turning a monthly volume into a mean rate.
inline constexpr double kBytesPerGigabyte = 1e9;
inline constexpr double kSecondsPerMonth = 365.0 / 12.0 * 86400.0;  // 2,628,000 s

struct ForecastParams {
  int base_year = 2016;
  double base_consumption_gb_month = 77.66;
  double cagr = 0.25;
  double peak_factor = 5.0;

  // Throws InvalidArgument unless consumption > 0, cagr > -1, peak_factor >= 1.
  void validate() const;
};

// Offered bandwidth of one household in a given year.
struct TrafficDemand {
  int year = 0;
  double avg_mbps = 0.0;
  double peak_mbps = 0.0;
};

// GB/month -> Mb/s with a 365/12-day month and decimal gigabytes.
double gb_month_to_mbps(double gb_per_month);

// (1 + cagr)^(year - base_year). Throws if year precedes the base year.
double growth_factor(const ForecastParams& params, int year);

TrafficDemand project_demand(const ForecastParams& params, int year);

struct DemandRow {
  double peak_factor = 1.0;
  TrafficDemand demand;
};

// One row per (year, factor), years outermost. The `peak_factor` field of
// `params` is ignored in favour of each entry of `peak_factors`.
std::vector<DemandRow> demand_table(const ForecastParams& params, std::span<const int> years,
                                    std::span<const double> peak_factors);

}  // namespace ponplan
