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

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ponplan/mc_engine.hpp"
#include "ponplan/planner.hpp"
#include "ponplan/zipf_model.hpp"

// CSV exports. Every header is frozen; a layout change bumps kSchemaVersion.
namespace ponplan {

inline constexpr int kSchemaVersion = 1;

// Column label of a percentile level: 0.5 -> "p50", 0.99 -> "p99", 0.999 -> "p99.9".
std::string percentile_label(double p);

// fraction,cumulative_share
void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> points);

// aggregate_mbps
void write_trialset_csv(std::ostream& out, const TrialSet& trials);

// schema_version,year,split,p50,p50_lo,p50_hi,...,whisker_low,q1,median,q3,whisker_high
std::vector<std::string> summary_csv_header(std::span<const double> percentiles);
std::vector<std::string> summary_csv_fields(const SimulationSummary& summary);
void write_summaries_csv(std::ostream& out, std::span<const SimulationSummary> summaries);

// schema_version,technology,<year>,<year>,...
void write_schedule_matrix_csv(std::ostream& out, const UpgradeSchedule& schedule);

// schema_version,technology,split,first_infeasible_year (empty when none)
void write_upgrade_table_csv(std::ostream& out, const UpgradeSchedule& schedule);

}  // namespace ponplan
