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
#include <string>

#include "ponplan/mc_engine.hpp"
#include "ponplan/planner.hpp"

namespace ponplan::cli {

struct CapacityLine {
  std::string label;
  double mbps = 0.0;
  bool dashed = false;  // headroom limit rather than nominal capacity
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 500;

// One Tukey box per summary on a log-scaled Mb/s axis, plus horizontal
// capacity lines.
std::string boxplot_svg(std::span<const SimulationSummary> summaries, std::span<const CapacityLine> lines,
                        const std::string& title);

// Maximum split per year as one step line per technology, log2 split axis.
std::string schedule_svg(const UpgradeSchedule& schedule, const std::string& title);

}  // namespace ponplan::cli
