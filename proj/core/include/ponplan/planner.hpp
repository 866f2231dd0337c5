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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ponplan/forecast.hpp"
#include "ponplan/mc_engine.hpp"
#include "ponplan/tech_catalog.hpp"

namespace ponplan {

struct PlanningPolicy {
  double headroom = 0.75;
  double decision_percentile = 0.99;
  // Compare the bootstrap upper bound instead of the point estimate.
  bool use_ci_upper = false;
  std::vector<int> split_options{4, 8, 16, 32, 64, 128, 256, 512, 1024};
  // Cap candidate splits at the technology's max_standard_split.
  bool enforce_standard_split = true;

  void validate() const;
};

struct FeasibilityVerdict {
  bool feasible = false;
  double statistic_mbps = 0.0;
  double limit_mbps = 0.0;
  double margin_mbps = 0.0;  // limit - statistic
};

// Usable upstream capacity: headroom * upstream_mbps.
double capacity_limit(const PonTechnology& tech, const PlanningPolicy& policy);

FeasibilityVerdict evaluate_statistic(double statistic_mbps, const PonTechnology& tech,
                                      const PlanningPolicy& policy);

// Throws InvalidArgument if `summary` lacks the decision percentile.
FeasibilityVerdict check_feasibility(const SimulationSummary& summary, const PonTechnology& tech,
                                     const PlanningPolicy& policy);

// Decision statistic of every split option at the base year. Statistics of
// later years follow by scaling with growth_factor(); all splits share one
// seed, so year-to-year and split-to-split comparisons are exact.
class DecisionTable {
 public:
  DecisionTable(const ForecastParams& params, const PlanningPolicy& policy, const ScenarioConfig& sim,
                const PopulationShape& shape = {});

  std::span<const int> splits() const noexcept { return splits_; }
  const ForecastParams& params() const noexcept { return params_; }
  const PlanningPolicy& policy() const noexcept { return policy_; }

  // Throws InvalidArgument if `split` is not one of the split options.
  double base_statistic(int split) const;
  double statistic(int split, int year) const;
  FeasibilityVerdict verdict(const PonTechnology& tech, int split, int year) const;

  // Largest feasible split option (capped by the standard when the policy
  // says so), or 0 when none is feasible.
  int max_split(const PonTechnology& tech, int year) const;
  // First infeasible year in [base_year, horizon], if any.
  std::optional<int> upgrade_year(const PonTechnology& tech, int split, int horizon) const;

 private:
  ForecastParams params_;
  PlanningPolicy policy_;
  std::vector<int> splits_;
  std::vector<double> base_statistics_;
};

int max_split(const PonTechnology& tech, int year, const ForecastParams& params, const PlanningPolicy& policy,
              const ScenarioConfig& sim, const PopulationShape& shape = {});

std::optional<int> upgrade_year(const PonTechnology& tech, int split, const ForecastParams& params,
                                const PlanningPolicy& policy, int horizon, const ScenarioConfig& sim,
                                const PopulationShape& shape = {});

struct UpgradeEntry {
  std::string technology;
  int split = 0;
  std::optional<int> first_infeasible_year;
};

struct UpgradeSchedule {
  std::vector<std::string> technologies;
  std::vector<int> years;
  // max_split[t][y] for technologies[t] and years[y]; 0 when none fits.
  std::vector<std::vector<int>> max_split;
  // One entry per (technology, split option), technologies outermost.
  // Splits above a technology's standard limit are included only when the
  // policy does not enforce it.
  std::vector<UpgradeEntry> upgrades;

  int max_split_at(std::string_view technology, int year) const;
};

// Years must be nonempty, strictly increasing and >= base_year. The last
// year is the horizon for upgrade entries.
UpgradeSchedule build_schedule(const Catalog& catalog, std::span<const int> years,
                               const ForecastParams& params, const PlanningPolicy& policy,
                               const ScenarioConfig& sim, const PopulationShape& shape = {});

UpgradeSchedule build_schedule(const Catalog& catalog, std::span<const int> years, const DecisionTable& table);

}  // namespace ponplan
