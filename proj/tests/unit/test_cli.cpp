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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "ponplan/export.hpp"
#include "ponplan/planner.hpp"

using namespace ponplan;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  return fields;
}

std::size_t column(const std::string& header, const std::string& name) {
  const auto cols = split_csv(header);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Minimal well-formedness check: every element opened is closed in order.
bool balanced_xml(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const auto end = text.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag.back() == '/') continue;
    const auto name_end = tag.find_first_of(" \t\n");
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else {
      stack.push_back(tag.substr(0, name_end));
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("forecast defaults print the demand table") {
  const auto r = run_cli({"forecast"});
  REQUIRE(r.code == 0);
  for (const char* cell : {"0.236", "0.577", "1.76", "5.38", "16.4", "1.18", "82.0", "0.709", "49.2"}) {
    CHECK_MESSAGE(r.out.find(cell) != std::string::npos, cell);
  }
}

TEST_CASE("forecast single year at factor one") {
  const auto r = run_cli({"forecast", "--years", "2016", "--peak-factors", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.236") != std::string::npos);

  const auto csv = run_cli({"forecast", "--years", "2016:2018", "--format", "csv"});
  REQUIRE(csv.code == 0);
  const auto rows = lines_of(csv.out);
  CHECK(rows.front() == "schema_version,year,peak_factor,avg_mbps,peak_mbps");
  CHECK(rows.size() == 1 + 3 * 2);
}

TEST_CASE("invalid flags exit with code 2") {
  const auto negative = run_cli({"forecast", "--cagr", "-2"});
  CHECK(negative.code == 2);
  CHECK(!negative.err.empty());
  CHECK(negative.out.empty());
  CHECK(run_cli({"forecast", "--format", "svg"}).code == 2);
  CHECK(run_cli({"forecast", "--format", "xml"}).code == 2);
  CHECK(run_cli({"forecast", "--years", "2020:2016"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"simulate", "--split", "0"}).code == 2);
  CHECK(run_cli({"simulate", "--trials-out", "x.csv", "--split", "4", "--split", "8"}).code == 2);
  CHECK(run_cli({"plan", "feasibility", "--tech", "GPON", "--split", "64", "--format", "svg"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("simulate small and large splits") {
  const auto r = run_cli({"simulate", "--year", "2016", "--split", "4", "--split", "1024", "--seed", "1", "--format",
                          "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 3);
  const auto median_col = column(rows[0], "p50");
  const auto split_col = column(rows[0], "split");
  const auto last = split_csv(rows[2]);
  CHECK(last[split_col] == "1024");
  const double median = std::stod(last[median_col]);
  const double mean = 1024 * project_demand(ForecastParams{}, 2016).peak_mbps;
  CHECK(median < mean);
  CHECK(median > 0.95 * mean);
}

TEST_CASE("simulate 2025 split 64 p99") {
  const auto r = run_cli({"simulate", "--year", "2025", "--split", "64", "--seed", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 2);
  const double p99 = std::stod(split_csv(rows[1])[column(rows[0], "p99")]);
  CHECK(p99 >= 961.0);
  CHECK(p99 <= 1073.0);
}

TEST_CASE("simulate svg has one box per split and capacity lines") {
  const auto r = run_cli({"simulate", "--year", "2016", "--split", "4", "--split", "64", "--split", "1024", "--trials",
                          "2000", "--reps", "50", "--tech", "GPON", "--format", "svg"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<?xml", 0) == 0);
  CHECK(balanced_xml(r.out));
  CHECK(count(r.out, "<g class=\"box\"") == 3);
  CHECK(count(r.out, "<g class=\"capacity\"") == 2);
  CHECK(r.out.find("data-mbps=\"1250\"") != std::string::npos);
  CHECK(r.out.find("data-mbps=\"937.5\"") != std::string::npos);
  CHECK(r.out.find("width=\"800\"") != std::string::npos);
  CHECK(r.out.find("href") == std::string::npos);
}

TEST_CASE("plan feasibility for the worked example") {
  const auto r = run_cli({"plan", "feasibility", "--tech", "GPON", "--year", "2025", "--split", "64", "--seed", "1",
                          "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 2);
  const auto f = split_csv(rows[1]);
  CHECK(f[column(rows[0], "verdict")] == "infeasible");
  CHECK(f[column(rows[0], "feasible")] == "false");
  CHECK(std::stod(f[column(rows[0], "limit_mbps")]) == 937.5);
  CHECK(std::stod(f[column(rows[0], "statistic_mbps")]) == doctest::Approx(1017.0).epsilon(0.055));

  const auto table = run_cli({"plan", "feasibility", "--tech", "GPON", "--year", "2025", "--split", "64", "--seed",
                              "1"});
  CHECK(table.code == 0);
  CHECK(table.out.find("infeasible") != std::string::npos);
}

TEST_CASE("plan upgrade-year and max-split") {
  const auto up = run_cli({"plan", "upgrade-year", "--tech", "GPON", "--split", "64", "--seed", "1", "--format", "csv"});
  REQUIRE(up.code == 0);
  CHECK(lines_of(up.out).at(1) == "1,GPON,64,2025");

  const auto never = run_cli({"plan", "upgrade-year", "--tech", "100G-EPON", "--split", "4", "--horizon", "2030",
                              "--format", "csv"});
  REQUIRE(never.code == 0);
  CHECK(lines_of(never.out).at(1) == "1,100G-EPON,4,");
  const auto never_table = run_cli({"plan", "upgrade-year", "--tech", "100G-EPON", "--split", "4", "--horizon", "2030"});
  CHECK(never_table.out.find('-') != std::string::npos);

  const auto ms = run_cli({"plan", "max-split", "--tech", "GPON", "--year", "2016", "--ignore-standard-split", "--seed",
                           "1", "--format", "csv"});
  REQUIRE(ms.code == 0);
  CHECK(lines_of(ms.out).at(1) == "1,GPON,2016,512");
  const auto capped = run_cli({"plan", "max-split", "--tech", "GPON", "--year", "2016", "--format", "csv"});
  CHECK(lines_of(capped.out).at(1) == "1,GPON,2016,128");
}

TEST_CASE("unknown technology lists the catalog") {
  const auto r = run_cli({"plan", "max-split", "--tech", "FOO-PON"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  for (const char* name : {"GPON", "XGS-PON", "NG-PON2"}) CHECK(r.err.find(name) != std::string::npos);
  CHECK(run_cli({"simulate", "--tech", "FOO-PON", "--trials", "100", "--reps", "10"}).code == 2);
}

TEST_CASE("same seed gives byte-identical csv and json") {
  for (const char* format : {"csv", "json"}) {
    const std::vector<std::string> args{"simulate", "--year", "2020", "--split", "16", "--split", "128", "--trials",
                                        "5000", "--reps", "100", "--seed", "7", "--format", format};
    auto single = args;
    single.insert(single.end(), {"--threads", "1"});
    const auto a = run_cli(args);
    const auto b = run_cli(single);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    auto other = args;
    other[other.size() - 3] = "8";
    CHECK(run_cli(other).out != a.out);
  }
  const std::vector<std::string> plan{"plan", "schedule", "--years", "2016:2030", "--trials", "5000", "--reps", "100",
                                      "--format", "json"};
  CHECK(run_cli(plan).out == run_cli(plan).out);
}

TEST_CASE("seed environment variable replaces the default seed") {
  const std::vector<std::string> args{"simulate", "--split", "8", "--trials", "2000", "--reps", "50", "--format", "csv"};
  const auto with_flag = run_cli({"simulate", "--split", "8", "--trials", "2000", "--reps", "50", "--format", "csv",
                                  "--seed", "99"});
  const auto defaulted = run_cli(args);
  ::setenv(cli::kSeedEnvVar, "99", 1);
  const auto from_env = run_cli(args);
  const auto flag_wins = run_cli({"simulate", "--split", "8", "--trials", "2000", "--reps", "50", "--format", "csv",
                                  "--seed", std::to_string(kDefaultSeed)});
  ::setenv(cli::kSeedEnvVar, "not-a-number", 1);
  const auto bad = run_cli(args);
  ::unsetenv(cli::kSeedEnvVar);
  CHECK(from_env.out == with_flag.out);
  CHECK(from_env.out != defaulted.out);
  CHECK(flag_wins.out == defaulted.out);
  CHECK(bad.code == 2);
}

TEST_CASE("csv output matches the library writers") {
  ScenarioConfig config;
  config.trials = 3000;
  config.bootstrap_reps = 80;
  config.seed = 5;
  std::vector<SimulationSummary> summaries;
  for (int split : {8, 32}) {
    config.split_n = split;
    summaries.push_back(run_scenario(ForecastParams{}, 2022, config));
  }
  std::ostringstream expected;
  write_summaries_csv(expected, summaries);
  const auto r = run_cli({"simulate", "--year", "2022", "--split", "8", "--split", "32", "--trials", "3000", "--reps",
                          "80", "--seed", "5", "--format", "csv"});
  CHECK(r.out == expected.str());

  PlanningPolicy policy;
  const auto schedule = build_schedule(builtin_catalog(), std::vector<int>{2016, 2020, 2024, 2028}, ForecastParams{},
                                       policy, config);
  std::ostringstream matrix;
  write_schedule_matrix_csv(matrix, schedule);
  std::ostringstream upgrades;
  write_upgrade_table_csv(upgrades, schedule);
  const std::vector<std::string> base{"plan", "schedule", "--years", "2016,2020,2024,2028", "--trials", "3000",
                                      "--reps", "80", "--seed", "5", "--format", "csv"};
  CHECK(run_cli(base).out == matrix.str());
  auto view = base;
  view.insert(view.end(), {"--view", "upgrades"});
  CHECK(run_cli(view).out == upgrades.str());
}

TEST_CASE("trials-out writes raw samples") {
  const auto path = std::filesystem::temp_directory_path() / "ponplan_trials_test.csv";
  const auto r = run_cli({"simulate", "--split", "16", "--trials", "500", "--reps", "20", "--trials-out",
                          path.string(), "--format", "csv"});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto rows = lines_of(text.str());
  CHECK(rows.size() == 501);
  std::filesystem::remove(path);
}

TEST_CASE("catalog command round-trips and merges") {
  const auto r = run_cli({"catalog"});
  REQUIRE(r.code == 0);
  CHECK(load_catalog(r.out) == builtin_catalog());

  const auto path = std::filesystem::temp_directory_path() / "ponplan_catalog_test.csv";
  {
    std::ofstream out(path);
    out << "# lab prototype\nname,upstream_mbps,downstream_mbps,max_split,ratified\nLAB-PON,5000,5000,64,2026\n";
  }
  const auto merged = run_cli({"catalog", "--catalog", path.string()});
  CHECK(load_catalog(merged.out).size() == builtin_catalog().size() + 1);
  const auto replaced = run_cli({"catalog", "--catalog", path.string(), "--catalog-replace"});
  CHECK(load_catalog(replaced.out).size() == 1);
  const auto plan = run_cli({"plan", "max-split", "--catalog", path.string(), "--tech", "LAB-PON", "--year", "2016",
                             "--format", "csv"});
  CHECK(plan.code == 0);
  CHECK(lines_of(plan.out).at(1) == "1,LAB-PON,2016,64");
  {
    std::ofstream out(path);
    out << "name,upstream_mbps,downstream_mbps,max_split,ratified\nBAD,abc,1,1,1\n";
  }
  const auto bad = run_cli({"catalog", "--catalog", path.string()});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run_cli({"catalog", "--catalog", "/nonexistent/catalog.csv"}).code == 2);
}

TEST_CASE("zipf command") {
  const auto r = run_cli({"zipf", "--size", "4", "--alpha", "0", "--mean", "2", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "schema_version,fraction,cumulative_share\n1,0.25,0.25\n1,0.5,0.5\n1,0.75,0.75\n1,1,1\n");
  const auto s = run_cli({"zipf", "--summary"});
  CHECK(s.out.find("0.353") != std::string::npos);
  CHECK(s.out.find("0.565") != std::string::npos);
}

TEST_CASE("json field names mirror csv headers") {
  const auto csv = run_cli({"forecast", "--years", "2016", "--format", "csv"});
  const auto json = run_cli({"forecast", "--years", "2016", "--format", "json"});
  for (const auto& name : split_csv(lines_of(csv.out).front())) {
    CHECK(json.out.find('"' + name + '"') != std::string::npos);
  }
}
