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

#include "ponplan/forecast.hpp"

#include <cmath>
#include <string>

#include "ponplan/error.hpp"

namespace ponplan {

void ForecastParams::validate() const {
  if (!(base_consumption_gb_month > 0.0) || !std::isfinite(base_consumption_gb_month)) {
    throw InvalidArgument("base consumption must be a positive number of GB/month");
  }
  if (!(cagr > -1.0) || !std::isfinite(cagr)) {
    throw InvalidArgument("cagr must be greater than -1, got " + std::to_string(cagr));
  }
  if (!(peak_factor >= 1.0) || !std::isfinite(peak_factor)) {
    throw InvalidArgument("peak factor must be at least 1, got " + std::to_string(peak_factor));
  }
}

double gb_month_to_mbps(double gb_per_month) {
  if (!(gb_per_month >= 0.0) || !std::isfinite(gb_per_month)) {
    throw InvalidArgument("consumption must be a non-negative number of GB/month");
  }
  return gb_per_month * kBytesPerGigabyte * 8.0 / kSecondsPerMonth / 1e6;
}

double growth_factor(const ForecastParams& params, int year) {
  if (year < params.base_year) {
    throw InvalidArgument("year " + std::to_string(year) + " precedes base year " +
                          std::to_string(params.base_year));
  }
  return std::pow(1.0 + params.cagr, year - params.base_year);
}

TrafficDemand project_demand(const ForecastParams& params, int year) {
  params.validate();
  TrafficDemand demand;
  demand.year = year;
  demand.avg_mbps = gb_month_to_mbps(params.base_consumption_gb_month) * growth_factor(params, year);
  demand.peak_mbps = params.peak_factor * demand.avg_mbps;
  return demand;
}

std::vector<DemandRow> demand_table(const ForecastParams& params, std::span<const int> years,
                                    std::span<const double> peak_factors) {
  if (years.empty()) throw InvalidArgument("demand table needs at least one year");
  if (peak_factors.empty()) throw InvalidArgument("demand table needs at least one peak factor");

  std::vector<DemandRow> rows;
  rows.reserve(years.size() * peak_factors.size());
  for (int year : years) {
    for (double factor : peak_factors) {
      ForecastParams p = params;
      p.peak_factor = factor;
      rows.push_back({factor, project_demand(p, year)});
    }
  }
  return rows;
}

}  // namespace ponplan
