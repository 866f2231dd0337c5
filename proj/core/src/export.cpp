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

#include "ponplan/export.hpp"

#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ponplan/format.hpp"

namespace ponplan {

namespace {

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  out << fmt::format("{}", fmt::join(fields, ",")) << '\n';
}

}  // namespace

std::string percentile_label(double p) {
  const double percent = std::round(p * 1e6) / 1e4;
  return "p" + format_exact(percent);
}

void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> points) {
  out << "fraction,cumulative_share\n";
  for (const auto& pt : points) out << format_exact(pt.user_fraction) << ',' << format_exact(pt.traffic_share) << '\n';
}

void write_trialset_csv(std::ostream& out, const TrialSet& trials) {
  out << "aggregate_mbps\n";
  for (double s : trials.samples) out << format_exact(s) << '\n';
}

std::vector<std::string> summary_csv_header(std::span<const double> percentiles) {
  std::vector<std::string> header{"schema_version", "year", "split"};
  for (double p : percentiles) {
    const auto label = percentile_label(p);
    header.push_back(label);
    header.push_back(label + "_lo");
    header.push_back(label + "_hi");
  }
  for (const char* col : {"whisker_low", "q1", "median", "q3", "whisker_high"}) header.emplace_back(col);
  return header;
}

std::vector<std::string> summary_csv_fields(const SimulationSummary& summary) {
  std::vector<std::string> fields{std::to_string(kSchemaVersion), std::to_string(summary.year),
                                  std::to_string(summary.split_n)};
  for (const auto& e : summary.estimates) {
    fields.push_back(format_exact(e.point));
    fields.push_back(format_exact(e.ci_low));
    fields.push_back(format_exact(e.ci_high));
  }
  const auto& b = summary.boxplot;
  for (double v : {b.whisker_low, b.q1, b.median, b.q3, b.whisker_high}) fields.push_back(format_exact(v));
  return fields;
}

void write_summaries_csv(std::ostream& out, std::span<const SimulationSummary> summaries) {
  std::vector<double> levels;
  if (!summaries.empty()) {
    for (const auto& e : summaries.front().estimates) levels.push_back(e.p);
  }
  write_row(out, summary_csv_header(levels));
  for (const auto& s : summaries) write_row(out, summary_csv_fields(s));
}

void write_schedule_matrix_csv(std::ostream& out, const UpgradeSchedule& schedule) {
  std::vector<std::string> header{"schema_version", "technology"};
  for (int y : schedule.years) header.push_back(std::to_string(y));
  write_row(out, header);
  for (std::size_t t = 0; t < schedule.technologies.size(); ++t) {
    std::vector<std::string> row{std::to_string(kSchemaVersion), schedule.technologies[t]};
    for (int split : schedule.max_split[t]) row.push_back(std::to_string(split));
    write_row(out, row);
  }
}

void write_upgrade_table_csv(std::ostream& out, const UpgradeSchedule& schedule) {
  out << "schema_version,technology,split,first_infeasible_year\n";
  for (const auto& u : schedule.upgrades) {
    out << kSchemaVersion << ',' << u.technology << ',' << u.split << ','
        << (u.first_infeasible_year ? std::to_string(*u.first_infeasible_year) : std::string()) << '\n';
  }
}

}  // namespace ponplan
