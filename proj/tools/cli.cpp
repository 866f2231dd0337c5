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

#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <cstdlib>
#include <memory>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ponplan/error.hpp"
#include "ponplan/export.hpp"
#include "ponplan/format.hpp"
#include "ponplan/planner.hpp"
#include "ponplan/tech_catalog.hpp"
#include "ponplan/zipf_model.hpp"
#include "records.hpp"
#include "svg.hpp"

namespace ponplan::cli {

namespace {

// Invalid flag values that CLI11 itself cannot detect.
class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct ModelOptions {
  ForecastParams params;
  PopulationShape shape;
  ScenarioConfig sim;
  std::optional<std::uint64_t> seed;
};

struct CatalogOptions {
  std::string path;
  bool replace = false;
};

struct PolicyOptions {
  PlanningPolicy policy;
  bool ignore_standard_split = false;
  std::vector<int> split_options;
};

void add_forecast_options(CLI::App* app, ForecastParams& params) {
  app->add_option("--base-gb-month", params.base_consumption_gb_month, "Base-year consumption (GB/month/household)")
      ->capture_default_str();
  app->add_option("--base-year", params.base_year, "Year of the base consumption")->capture_default_str();
  app->add_option("--cagr", params.cagr, "Compound annual growth rate as a fraction")->capture_default_str();
}

void add_model_options(CLI::App* app, ModelOptions& m) {
  add_forecast_options(app, m.params);
  app->add_option("--peak-factor", m.params.peak_factor, "Peak-to-average multiplier")->capture_default_str();
  app->add_option("--alpha", m.shape.alpha, "Zipf shape parameter")->capture_default_str();
  app->add_option("--population", m.shape.size, "Number of population ranks")->capture_default_str();
  app->add_option("--trials", m.sim.trials, "Monte Carlo trials")->capture_default_str();
  app->add_option("--reps", m.sim.bootstrap_reps, "Bootstrap resamples")->capture_default_str();
  app->add_option("--confidence", m.sim.confidence, "Bootstrap confidence level")->capture_default_str();
  app->add_option("--seed", m.seed, "Random seed (default: $PONPLAN_SEED or built-in)");
  app->add_option("--threads", m.sim.threads, "Worker threads, 0 = all cores")->capture_default_str();
}

void add_catalog_options(CLI::App* app, CatalogOptions& c) {
  app->add_option("--catalog", c.path, "Catalog CSV extending the builtin technologies");
  app->add_flag("--catalog-replace", c.replace, "Use only the --catalog file");
}

void add_policy_options(CLI::App* app, PolicyOptions& p) {
  app->add_option("--headroom", p.policy.headroom, "Usable fraction of upstream capacity")->capture_default_str();
  app->add_option("--percentile", p.policy.decision_percentile, "Decision percentile")->capture_default_str();
  app->add_flag("--use-ci-upper", p.policy.use_ci_upper, "Compare the bootstrap upper bound");
  app->add_flag("--ignore-standard-split", p.ignore_standard_split, "Allow splits beyond the standard");
  app->add_option("--split-options", p.split_options, "Candidate splits (powers of two)")->delimiter(',');
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kSeedEnvVar); env != nullptr && *env != '\0') {
    std::uint64_t seed = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError(std::string(kSeedEnvVar) + " is not an unsigned integer: '" + env + "'");
    }
    return seed;
  }
  return kDefaultSeed;
}

void finish_model(ModelOptions& m) {
  m.sim.seed = resolve_seed(m.seed);
  m.params.validate();
}

Catalog resolve_catalog(const CatalogOptions& c) {
  if (c.path.empty()) {
    if (c.replace) throw UsageError("--catalog-replace requires --catalog");
    return builtin_catalog();
  }
  Catalog user = [&] {
    try {
      return load_catalog_file(c.path);
    } catch (const CatalogParseError& e) {
      throw UsageError(c.path + ": " + e.what());
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  return c.replace ? user : builtin_catalog().merged_with(user);
}

PlanningPolicy resolve_policy(PolicyOptions& p) {
  if (!p.split_options.empty()) p.policy.split_options = p.split_options;
  p.policy.enforce_standard_split = !p.ignore_standard_split;
  p.policy.validate();
  return p.policy;
}

std::vector<int> parse_years(const std::vector<std::string>& specs) {
  std::vector<int> years;
  auto to_int = [](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("not a year: '" + std::string(s) + "'");
    }
    return v;
  };
  for (const auto& spec : specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
      years.push_back(to_int(spec));
      continue;
    }
    const int first = to_int(std::string_view(spec).substr(0, colon));
    const int last = to_int(std::string_view(spec).substr(colon + 1));
    if (last < first) throw UsageError("empty year range '" + spec + "'");
    for (int y = first; y <= last; ++y) years.push_back(y);
  }
  return years;
}

void require_format(const std::string& format, bool svg_allowed, const std::string& command) {
  if (format == "svg" && !svg_allowed) throw UsageError("--format svg is not available for '" + command + "'");
}

std::vector<const PonTechnology*> select_technologies(const Catalog& catalog, const std::vector<std::string>& names,
                                                      bool default_all) {
  std::vector<const PonTechnology*> out;
  if (names.empty() && default_all) {
    for (const auto& t : catalog.technologies()) out.push_back(&t);
  }
  for (const auto& name : names) out.push_back(&catalog.at(name));
  return out;
}

void emit(std::ostream& out, const std::string& format, const Record& record, const std::string& json_key = "rows") {
  if (format == "csv") {
    write_csv(out, record);
  } else if (format == "json") {
    out << to_json({{json_key, &record}});
  } else {
    write_table(out, record);
  }
}

// --- forecast -------------------------------------------------------------

struct ForecastCommand {
  ForecastParams params;
  std::vector<std::string> years{"2016", "2020", "2025", "2030", "2035"};
  std::vector<double> peak_factors{3.0, 5.0};
  std::string format = "table";

  void run(std::ostream& out) {
    require_format(format, false, "forecast");
    params.validate();
    const auto year_list = parse_years(years);
    const auto rows = demand_table(params, year_list, peak_factors);

    if (format == "table") {
      // Years across, one line for the average and one per peak factor.
      std::vector<std::string> cols{"Mb/s per household"};
      for (int y : year_list) cols.push_back(std::to_string(y));
      Record pivot(cols);
      std::vector<Cell> avg{std::string("average")};
      for (std::size_t y = 0; y < year_list.size(); ++y) avg.emplace_back(rows[y * peak_factors.size()].demand.avg_mbps);
      pivot.add(avg);
      for (std::size_t f = 0; f < peak_factors.size(); ++f) {
        std::vector<Cell> line{"peak " + format_exact(peak_factors[f]) + "x average"};
        for (std::size_t y = 0; y < year_list.size(); ++y) {
          line.emplace_back(rows[y * peak_factors.size() + f].demand.peak_mbps);
        }
        pivot.add(line);
      }
      write_table(out, pivot);
      return;
    }
    Record record({"year", "peak_factor", "avg_mbps", "peak_mbps"});
    for (const auto& r : rows) {
      record.add({std::int64_t{r.demand.year}, r.peak_factor, r.demand.avg_mbps, r.demand.peak_mbps});
    }
    emit(out, format, record);
  }
};

// --- simulate -------------------------------------------------------------

struct SimulateCommand {
  ModelOptions model;
  CatalogOptions catalog;
  int year = 2016;
  std::vector<int> splits;
  std::vector<double> percentiles;
  std::vector<std::string> techs;
  double headroom = 0.75;
  std::string trials_out;
  std::string format = "table";

  void run(std::ostream& out) {
    require_format(format, true, "simulate");
    finish_model(model);
    if (splits.empty()) splits = {4, 8, 16, 32, 64, 128, 256, 512, 1024};
    if (!percentiles.empty()) model.sim.percentiles = percentiles;
    if (!trials_out.empty() && splits.size() != 1) throw UsageError("--trials-out needs exactly one --split");
    if (!(headroom > 0.0 && headroom <= 1.0)) throw UsageError("--headroom must lie in (0, 1]");
    const Catalog cat = resolve_catalog(catalog);
    const auto lines_for = select_technologies(cat, techs, false);

    const TrafficDemand demand = project_demand(model.params, year);
    const ZipfPopulation pop(model.shape.size, model.shape.alpha, demand.peak_mbps);
    std::vector<SimulationSummary> summaries;
    for (int split : splits) {
      ScenarioConfig config = model.sim;
      config.split_n = split;
      config.validate();
      const TrialSet trials = simulate_aggregate(pop, config);
      if (!trials_out.empty()) {
        std::ofstream file(trials_out, std::ios::binary);
        if (!file) throw UsageError("cannot write '" + trials_out + "'");
        write_trialset_csv(file, trials);
      }
      summaries.push_back(summarize(trials, year, demand, config));
    }

    if (format == "svg") {
      std::vector<CapacityLine> lines;
      for (const auto* tech : lines_for) {
        lines.push_back({tech->name + " " + format_significant(tech->upstream_mbps) + " Mb/s", tech->upstream_mbps, false});
        lines.push_back({tech->name + " " + format_exact(headroom * 100) + "%", headroom * tech->upstream_mbps, true});
      }
      out << boxplot_svg(summaries, lines,
                         fmt::format("Aggregated offered traffic per 1:N PON (year {}, {} Mb/s peak per household)",
                                     year, format_significant(demand.peak_mbps)));
      return;
    }

    auto header = summary_csv_header(model.sim.percentiles);
    Record record(std::vector<std::string>(header.begin() + 1, header.end()));
    for (const auto& s : summaries) {
      std::vector<Cell> row{std::int64_t{s.year}, std::int64_t{s.split_n}};
      for (const auto& e : s.estimates) {
        row.emplace_back(e.point);
        row.emplace_back(e.ci_low);
        row.emplace_back(e.ci_high);
      }
      const auto& b = s.boxplot;
      for (double v : {b.whisker_low, b.q1, b.median, b.q3, b.whisker_high}) row.emplace_back(v);
      record.add(std::move(row));
    }
    emit(out, format, record);
  }
};

// --- plan -----------------------------------------------------------------

struct PlanCommon {
  ModelOptions model;
  CatalogOptions catalog;
  PolicyOptions policy;
  std::vector<std::string> techs;
  std::string format = "table";

  void add_to(CLI::App* app) {
    add_model_options(app, model);
    add_catalog_options(app, catalog);
    add_policy_options(app, policy);
    app->add_option("--tech", techs, "Technology name (repeatable)");
    app->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json", "svg"}))
        ->capture_default_str();
  }
};

struct FeasibilityCommand {
  PlanCommon common;
  int year = 0;
  std::vector<int> splits;

  void run(std::ostream& out) {
    require_format(common.format, false, "plan feasibility");
    finish_model(common.model);
    const PlanningPolicy policy = resolve_policy(common.policy);
    const Catalog cat = resolve_catalog(common.catalog);
    if (common.techs.empty()) throw UsageError("plan feasibility needs --tech");
    if (splits.empty()) throw UsageError("plan feasibility needs --split");
    const auto techs = select_technologies(cat, common.techs, false);
    if (year == 0) year = common.model.params.base_year;

    ScenarioConfig config = common.model.sim;
    config.percentiles = {policy.decision_percentile};
    Record record({"technology", "year", "split", "percentile", "point_mbps", "ci_low_mbps", "ci_high_mbps",
                   "statistic_mbps", "limit_mbps", "margin_mbps", "feasible", "verdict"});
    for (int split : splits) {
      config.split_n = split;
      const auto summary = run_scenario(common.model.params, year, config, common.model.shape);
      const auto est = *summary.find(policy.decision_percentile);
      for (const auto* tech : techs) {
        const auto v = check_feasibility(summary, *tech, policy);
        record.add({tech->name, std::int64_t{year}, std::int64_t{split}, est.p, est.point, est.ci_low, est.ci_high,
                    v.statistic_mbps, v.limit_mbps, v.margin_mbps, v.feasible,
                    std::string(v.feasible ? "feasible" : "infeasible")});
      }
    }
    emit(out, common.format, record);
  }
};

struct MaxSplitCommand {
  PlanCommon common;
  std::vector<int> years;
  std::vector<std::string> year_specs;

  void run(std::ostream& out) {
    require_format(common.format, false, "plan max-split");
    finish_model(common.model);
    const PlanningPolicy policy = resolve_policy(common.policy);
    const Catalog cat = resolve_catalog(common.catalog);
    const auto techs = select_technologies(cat, common.techs, true);
    auto all_years = years;
    for (int y : parse_years(year_specs)) all_years.push_back(y);
    if (all_years.empty()) all_years.push_back(common.model.params.base_year);

    const DecisionTable table(common.model.params, policy, common.model.sim, common.model.shape);
    Record record({"technology", "year", "max_split"});
    for (const auto* tech : techs) {
      for (int y : all_years) record.add({tech->name, std::int64_t{y}, std::int64_t{table.max_split(*tech, y)}});
    }
    emit(out, common.format, record);
  }
};

Record upgrade_record(const UpgradeSchedule& schedule) {
  Record record({"technology", "split", "first_infeasible_year"});
  for (const auto& u : schedule.upgrades) {
    record.add({u.technology, std::int64_t{u.split},
                u.first_infeasible_year ? Cell{std::int64_t{*u.first_infeasible_year}} : Cell{}});
  }
  return record;
}

struct UpgradeYearCommand {
  PlanCommon common;
  std::vector<int> splits;
  int horizon = 2050;

  void run(std::ostream& out) {
    require_format(common.format, false, "plan upgrade-year");
    finish_model(common.model);
    const PlanningPolicy policy = resolve_policy(common.policy);
    const Catalog cat = resolve_catalog(common.catalog);
    const auto techs = select_technologies(cat, common.techs, true);
    const DecisionTable table(common.model.params, policy, common.model.sim, common.model.shape);
    const auto ladder = splits.empty() ? std::vector<int>(table.splits().begin(), table.splits().end()) : splits;

    Record record({"technology", "split", "first_infeasible_year"});
    for (const auto* tech : techs) {
      for (int split : ladder) {
        if (splits.empty() && policy.enforce_standard_split && split > tech->max_standard_split) continue;
        const auto year = table.upgrade_year(*tech, split, horizon);
        record.add({tech->name, std::int64_t{split}, year ? Cell{std::int64_t{*year}} : Cell{}});
      }
    }
    emit(out, common.format, record);
  }
};

struct ScheduleCommand {
  PlanCommon common;
  std::vector<std::string> year_specs{"2016:2040"};
  std::string view = "matrix";

  void run(std::ostream& out) {
    finish_model(common.model);
    const PlanningPolicy policy = resolve_policy(common.policy);
    Catalog cat = resolve_catalog(common.catalog);
    if (!common.techs.empty()) {
      std::vector<PonTechnology> chosen;
      for (const auto* t : select_technologies(cat, common.techs, false)) chosen.push_back(*t);
      cat = Catalog(std::move(chosen));
    }
    const auto years = parse_years(year_specs);
    const auto schedule = build_schedule(cat, years, common.model.params, policy, common.model.sim, common.model.shape);

    if (common.format == "svg") {
      out << schedule_svg(schedule, "Maximum split ratio per year and technology");
      return;
    }
    std::vector<std::string> cols{"technology"};
    for (int y : years) cols.push_back(std::to_string(y));
    Record matrix(cols);
    for (std::size_t t = 0; t < schedule.technologies.size(); ++t) {
      std::vector<Cell> row{schedule.technologies[t]};
      for (int s : schedule.max_split[t]) row.emplace_back(std::int64_t{s});
      matrix.add(std::move(row));
    }
    const Record upgrades = upgrade_record(schedule);

    if (common.format == "json") {
      out << to_json({{"matrix", &matrix}, {"upgrades", &upgrades}});
    } else if (common.format == "csv") {
      write_csv(out, view == "upgrades" ? upgrades : matrix);
    } else {
      write_table(out, matrix);
      out << '\n';
      write_table(out, upgrades);
    }
  }
};

// --- zipf and catalog -----------------------------------------------------

struct ZipfCommand {
  std::size_t size = 100;
  double alpha = 1.0;
  double mean = 1.18;
  bool summary = false;
  std::string format = "table";

  void run(std::ostream& out) {
    require_format(format, false, "zipf");
    const ZipfPopulation pop(size, alpha, mean);
    if (summary) {
      const auto stats = population_stats(pop);
      Record record({"size", "alpha", "mean_mbps", "std_dev_mbps", "heaviest_mbps", "lightest_mbps",
                     "share_top_3pct", "share_top_10pct"});
      record.add({static_cast<std::int64_t>(size), alpha, stats.mean, stats.std_dev, pop.heaviest(), pop.lightest(),
                  share_of_top(pop, 0.03), share_of_top(pop, 0.10)});
      emit(out, format, record);
      return;
    }
    Record record({"fraction", "cumulative_share"});
    for (const auto& pt : cdf_points(pop)) record.add({pt.user_fraction, pt.traffic_share});
    emit(out, format, record);
  }
};

struct CatalogCommand {
  CatalogOptions catalog;
  std::string format = "csv";

  void run(std::ostream& out) {
    require_format(format, false, "catalog");
    const Catalog cat = resolve_catalog(catalog);
    if (format == "csv") {
      out << serialize_catalog(cat);
      return;
    }
    Record record({"name", "upstream_mbps", "downstream_mbps", "max_split", "ratified"});
    for (const auto& t : cat.technologies()) {
      record.add({t.name, t.upstream_mbps, t.downstream_mbps, std::int64_t{t.max_standard_split},
                  std::int64_t{t.ratified}});
    }
    emit(out, format, record);
  }
};

CLI::Option* add_format(CLI::App* app, std::string& format, bool svg) {
  std::vector<std::string> allowed{"table", "csv", "json"};
  if (svg) allowed.emplace_back("svg");
  return app->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity planning for passive optical access networks", "ponplan"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ponplan 0.1.0");

  ForecastCommand forecast;
  auto* forecast_cmd = app.add_subcommand("forecast", "Per-household demand by year");
  add_forecast_options(forecast_cmd, forecast.params);
  forecast_cmd->add_option("--years", forecast.years, "Years or ranges, e.g. 2016,2020:2025")->delimiter(',');
  forecast_cmd->add_option("--peak-factors", forecast.peak_factors, "Peak-to-average factors")->delimiter(',');
  // svg is rejected with a specific message rather than by the validator.
  add_format(forecast_cmd, forecast.format, true);

  SimulateCommand simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo aggregate traffic per split");
  add_model_options(simulate_cmd, simulate.model);
  add_catalog_options(simulate_cmd, simulate.catalog);
  simulate_cmd->add_option("--year", simulate.year, "Demand year")->capture_default_str();
  simulate_cmd->add_option("--split", simulate.splits, "Split ratio N (repeatable)");
  simulate_cmd->add_option("--percentile", simulate.percentiles, "Percentile level (repeatable)");
  simulate_cmd->add_option("--tech", simulate.techs, "Draw capacity lines for a technology (svg)");
  simulate_cmd->add_option("--headroom", simulate.headroom, "Headroom line fraction (svg)")->capture_default_str();
  simulate_cmd->add_option("--trials-out", simulate.trials_out, "Write raw trial samples as CSV");
  add_format(simulate_cmd, simulate.format, true);

  auto* plan_cmd = app.add_subcommand("plan", "Feasibility, maximum split and upgrade planning");
  plan_cmd->require_subcommand(1);

  FeasibilityCommand feasibility;
  auto* feasibility_cmd = plan_cmd->add_subcommand("feasibility", "Check one or more (technology, split) pairs");
  feasibility.common.add_to(feasibility_cmd);
  feasibility_cmd->add_option("--year", feasibility.year, "Demand year (default: base year)");
  feasibility_cmd->add_option("--split", feasibility.splits, "Split ratio N (repeatable)");

  MaxSplitCommand max_split_cmd_state;
  auto* max_split_cmd = plan_cmd->add_subcommand("max-split", "Largest feasible split per technology and year");
  max_split_cmd_state.common.add_to(max_split_cmd);
  max_split_cmd->add_option("--year", max_split_cmd_state.years, "Year (repeatable)");
  max_split_cmd->add_option("--years", max_split_cmd_state.year_specs, "Years or ranges")->delimiter(',');

  UpgradeYearCommand upgrade;
  auto* upgrade_cmd = plan_cmd->add_subcommand("upgrade-year", "First infeasible year per technology and split");
  upgrade.common.add_to(upgrade_cmd);
  upgrade_cmd->add_option("--split", upgrade.splits, "Split ratio N (repeatable; default all options)");
  upgrade_cmd->add_option("--horizon", upgrade.horizon, "Last year considered")->capture_default_str();

  ScheduleCommand schedule;
  auto* schedule_cmd = plan_cmd->add_subcommand("schedule", "Maximum split grid and upgrade years");
  schedule.common.add_to(schedule_cmd);
  schedule_cmd->add_option("--years", schedule.year_specs, "Years or ranges")->delimiter(',')->capture_default_str();
  schedule_cmd->add_option("--view", schedule.view, "CSV view")
      ->check(CLI::IsMember({"matrix", "upgrades"}))
      ->capture_default_str();

  ZipfCommand zipf;
  auto* zipf_cmd = app.add_subcommand("zipf", "Zipf population traffic-share curve");
  zipf_cmd->add_option("--size", zipf.size, "Population ranks")->capture_default_str();
  zipf_cmd->add_option("--alpha", zipf.alpha, "Zipf shape parameter")->capture_default_str();
  zipf_cmd->add_option("--mean", zipf.mean, "Mean offered traffic (Mb/s)")->capture_default_str();
  zipf_cmd->add_flag("--summary", zipf.summary, "Print calibration statistics instead of the curve");
  add_format(zipf_cmd, zipf.format, true);

  CatalogCommand catalog;
  auto* catalog_cmd = app.add_subcommand("catalog", "List PON technologies");
  add_catalog_options(catalog_cmd, catalog.catalog);
  add_format(catalog_cmd, catalog.format, true);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ponplan");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  // Render into a buffer so a failing command leaves stdout empty.
  std::ostringstream buffer;
  try {
    if (*forecast_cmd) forecast.run(buffer);
    else if (*simulate_cmd) simulate.run(buffer);
    else if (*feasibility_cmd) feasibility.run(buffer);
    else if (*max_split_cmd) max_split_cmd_state.run(buffer);
    else if (*upgrade_cmd) upgrade.run(buffer);
    else if (*schedule_cmd) schedule.run(buffer);
    else if (*zipf_cmd) zipf.run(buffer);
    else if (*catalog_cmd) catalog.run(buffer);
  } catch (const InvalidArgument& e) {
    err << "ponplan: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "ponplan: " << e.what() << '\n';
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace ponplan::cli
