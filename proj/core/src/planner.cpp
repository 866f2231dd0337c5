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

#include "ponplan/planner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "ponplan/error.hpp"

namespace ponplan {

void PlanningPolicy::validate() const {
  if (!(headroom > 0.0 && headroom <= 1.0)) {
    throw InvalidArgument("headroom must lie in (0, 1], got " + std::to_string(headroom));
  }
  if (!(decision_percentile > 0.0 && decision_percentile < 1.0)) {
    throw InvalidArgument("decision percentile must lie in (0, 1), got " + std::to_string(decision_percentile));
  }
  if (split_options.empty()) throw InvalidArgument("no split options given");
  for (std::size_t i = 0; i < split_options.size(); ++i) {
    const int s = split_options[i];
    if (s < 1 || !std::has_single_bit(static_cast<unsigned>(s))) {
      throw InvalidArgument("split option " + std::to_string(s) + " is not a power of two");
    }
    if (i > 0 && s <= split_options[i - 1]) throw InvalidArgument("split options must be strictly increasing");
  }
}

double capacity_limit(const PonTechnology& tech, const PlanningPolicy& policy) {
  return policy.headroom * tech.upstream_mbps;
}

FeasibilityVerdict evaluate_statistic(double statistic_mbps, const PonTechnology& tech,
                                      const PlanningPolicy& policy) {
  FeasibilityVerdict v;
  v.statistic_mbps = statistic_mbps;
  v.limit_mbps = capacity_limit(tech, policy);
  v.margin_mbps = v.limit_mbps - statistic_mbps;
  v.feasible = statistic_mbps <= v.limit_mbps;
  return v;
}

FeasibilityVerdict check_feasibility(const SimulationSummary& summary, const PonTechnology& tech,
                                     const PlanningPolicy& policy) {
  policy.validate();
  const auto estimate = summary.find(policy.decision_percentile);
  if (!estimate) {
    throw InvalidArgument("summary has no estimate for percentile " + std::to_string(policy.decision_percentile));
  }
  return evaluate_statistic(policy.use_ci_upper ? estimate->ci_high : estimate->point, tech, policy);
}

DecisionTable::DecisionTable(const ForecastParams& params, const PlanningPolicy& policy,
                             const ScenarioConfig& sim, const PopulationShape& shape)
    : params_(params), policy_(policy), splits_(policy.split_options) {
  params_.validate();
  policy_.validate();

  const TrafficDemand base = project_demand(params_, params_.base_year);
  const ZipfPopulation pop(shape.size, shape.alpha, base.peak_mbps);
  const auto ladder = simulate_split_ladder(pop, splits_, sim);

  base_statistics_.reserve(ladder.size());
  for (const auto& trials : ladder) {
    if (policy_.use_ci_upper) {
      base_statistics_.push_back(bootstrap_ci(trials, policy_.decision_percentile, sim.bootstrap_reps,
                                              sim.confidence, sim.seed, sim.threads)
                                     .ci_high);
    } else {
      base_statistics_.push_back(empirical_percentile(trials.samples, policy_.decision_percentile));
    }
  }
}

double DecisionTable::base_statistic(int split) const {
  const auto it = std::find(splits_.begin(), splits_.end(), split);
  if (it == splits_.end()) throw InvalidArgument("split " + std::to_string(split) + " is not a split option");
  return base_statistics_[static_cast<std::size_t>(it - splits_.begin())];
}

double DecisionTable::statistic(int split, int year) const {
  return base_statistic(split) * growth_factor(params_, year);
}

FeasibilityVerdict DecisionTable::verdict(const PonTechnology& tech, int split, int year) const {
  return evaluate_statistic(statistic(split, year), tech, policy_);
}

int DecisionTable::max_split(const PonTechnology& tech, int year) const {
  for (auto it = splits_.rbegin(); it != splits_.rend(); ++it) {
    if (policy_.enforce_standard_split && *it > tech.max_standard_split) continue;
    if (verdict(tech, *it, year).feasible) return *it;
  }
  return 0;
}

std::optional<int> DecisionTable::upgrade_year(const PonTechnology& tech, int split, int horizon) const {
  if (horizon < params_.base_year) {
    throw InvalidArgument("horizon " + std::to_string(horizon) + " precedes base year " +
                          std::to_string(params_.base_year));
  }
  for (int year = params_.base_year; year <= horizon; ++year) {
    if (!verdict(tech, split, year).feasible) return year;
  }
  return std::nullopt;
}

int max_split(const PonTechnology& tech, int year, const ForecastParams& params, const PlanningPolicy& policy,
              const ScenarioConfig& sim, const PopulationShape& shape) {
  return DecisionTable(params, policy, sim, shape).max_split(tech, year);
}

std::optional<int> upgrade_year(const PonTechnology& tech, int split, const ForecastParams& params,
                                const PlanningPolicy& policy, int horizon, const ScenarioConfig& sim,
                                const PopulationShape& shape) {
  PlanningPolicy single = policy;
  single.validate();
  if (std::find(policy.split_options.begin(), policy.split_options.end(), split) == policy.split_options.end()) {
    throw InvalidArgument("split " + std::to_string(split) + " is not a split option");
  }
  single.split_options = {split};
  return DecisionTable(params, single, sim, shape).upgrade_year(tech, split, horizon);
}

int UpgradeSchedule::max_split_at(std::string_view technology, int year) const {
  const auto t = std::find(technologies.begin(), technologies.end(), technology);
  const auto y = std::find(years.begin(), years.end(), year);
  if (t == technologies.end()) throw UnknownTechnology("technology '" + std::string(technology) + "' not in schedule");
  if (y == years.end()) throw InvalidArgument("year " + std::to_string(year) + " not in schedule");
  return max_split[static_cast<std::size_t>(t - technologies.begin())][static_cast<std::size_t>(y - years.begin())];
}

UpgradeSchedule build_schedule(const Catalog& catalog, std::span<const int> years, const DecisionTable& table) {
  if (years.empty()) throw InvalidArgument("schedule needs at least one year");
  for (std::size_t i = 0; i < years.size(); ++i) {
    if (years[i] < table.params().base_year) {
      throw InvalidArgument("year " + std::to_string(years[i]) + " precedes base year");
    }
    if (i > 0 && years[i] <= years[i - 1]) throw InvalidArgument("schedule years must be strictly increasing");
  }

  UpgradeSchedule schedule;
  schedule.years.assign(years.begin(), years.end());
  const int horizon = years.back();
  for (const auto& tech : catalog.technologies()) {
    schedule.technologies.push_back(tech.name);
    auto& row = schedule.max_split.emplace_back();
    for (int year : years) row.push_back(table.max_split(tech, year));
    for (int split : table.splits()) {
      if (table.policy().enforce_standard_split && split > tech.max_standard_split) continue;
      schedule.upgrades.push_back({tech.name, split, table.upgrade_year(tech, split, horizon)});
    }
  }
  return schedule;
}

UpgradeSchedule build_schedule(const Catalog& catalog, std::span<const int> years, const ForecastParams& params,
                               const PlanningPolicy& policy, const ScenarioConfig& sim,
                               const PopulationShape& shape) {
  return build_schedule(catalog, years, DecisionTable(params, policy, sim, shape));
}

}  // namespace ponplan
