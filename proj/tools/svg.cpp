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

#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace ponplan::cli {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 150.0;  // room for line labels and the legend
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#000000",
                                    "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(const std::string& title) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"#ffffff\"/>\n"
      "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{3}</text>\n",
      kSvgWidth, kSvgHeight, kSvgWidth / 2, escape(title));
}

double plot_right() { return kSvgWidth - kRight; }
double plot_bottom() { return kSvgHeight - kBottom; }

std::string frame(const std::string& x_label, const std::string& y_label) {
  return fmt::format(
      "<rect x=\"{0}\" y=\"{1}\" width=\"{2}\" height=\"{3}\" fill=\"none\" stroke=\"#444444\"/>\n"
      "<text x=\"{4}\" y=\"{5}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">{6}</text>\n"
      "<text x=\"18\" y=\"{7}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 18 {7})\">{8}</text>\n",
      kLeft, kTop, plot_right() - kLeft, plot_bottom() - kTop, (kLeft + plot_right()) / 2, kSvgHeight - 15,
      escape(x_label), (kTop + plot_bottom()) / 2, escape(y_label));
}

class LogAxis {
 public:
  LogAxis(double lo, double hi) : lo_(std::log10(lo)), hi_(std::log10(hi)) {
    if (hi_ - lo_ < 1e-9) {
      lo_ -= 0.5;
      hi_ += 0.5;
    }
  }
  double y(double v) const {
    const double t = (std::log10(v) - lo_) / (hi_ - lo_);
    return plot_bottom() - t * (plot_bottom() - kTop);
  }
  std::string ticks() const {
    std::string out;
    for (int e = static_cast<int>(std::ceil(lo_)); e <= static_cast<int>(std::floor(hi_)); ++e) {
      const double v = std::pow(10.0, e);
      const double yy = y(v);
      out += fmt::format(
          "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>\n"
          "<text x=\"{3}\" y=\"{4:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{5}</text>\n",
          kLeft, yy, plot_right(), kLeft - 6, yy + 4, fmt::format("{:g}", v));
    }
    return out;
  }

 private:
  double lo_;
  double hi_;
};

}  // namespace

std::string boxplot_svg(std::span<const SimulationSummary> summaries, std::span<const CapacityLine> lines,
                        const std::string& title) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& s : summaries) {
    lo = std::min(lo, s.boxplot.whisker_low);
    hi = std::max(hi, s.boxplot.whisker_high);
  }
  for (const auto& line : lines) {
    lo = std::min(lo, line.mbps);
    hi = std::max(hi, line.mbps);
  }
  if (!(lo > 0.0) || !std::isfinite(lo)) lo = std::max(hi, 1.0) * 1e-3;
  if (!(hi > 0.0)) hi = 1.0;
  const LogAxis axis(lo / 1.5, hi * 1.5);

  std::string out = header(title);
  out += frame("Split ratio (1:N)", "Aggregated offered traffic (Mb/s)");
  out += axis.ticks();

  const double slot = (plot_right() - kLeft) / static_cast<double>(std::max<std::size_t>(summaries.size(), 1));
  const double half = std::min(slot * 0.3, 30.0);
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    const auto& b = s.boxplot;
    const double cx = kLeft + slot * (static_cast<double>(i) + 0.5);
    out += fmt::format("<g class=\"box\" data-split=\"{}\">\n", s.split_n);
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#333333\"/>\n"
        "<line x1=\"{0:.2f}\" y1=\"{3:.2f}\" x2=\"{0:.2f}\" y2=\"{4:.2f}\" stroke=\"#333333\"/>\n",
        cx, axis.y(b.whisker_high), axis.y(b.q3), axis.y(b.q1), axis.y(b.whisker_low));
    for (double w : {b.whisker_low, b.whisker_high}) {
      out += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#333333\"/>\n",
                         cx - half / 2, axis.y(w), cx + half / 2, axis.y(w));
    }
    out += fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"#cfe2f3\" stroke=\"#333333\"/>\n",
        cx - half, axis.y(b.q3), 2 * half, std::max(axis.y(b.q1) - axis.y(b.q3), 0.5));
    out += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#000000\" stroke-width=\"2\"/>\n",
        cx - half, axis.y(b.median), cx + half, axis.y(b.median));
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">1:{}</text>\n",
        cx, plot_bottom() + 16, s.split_n);
    out += "</g>\n";
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const char* colour = kPalette[(i / 2) % std::size(kPalette)];
    const double yy = axis.y(line.mbps);
    out += fmt::format("<g class=\"capacity\" data-label=\"{}\" data-mbps=\"{}\">\n", escape(line.label), line.mbps);
    out += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"1.5\"{}/>\n",
                       kLeft, yy, plot_right(), yy, colour, line.dashed ? " stroke-dasharray=\"6 4\"" : "");
    out += fmt::format(
        "<text x=\"{}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"{}\">{}</text>\n",
        plot_right() + 6, yy + 4, colour, escape(line.label));
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string schedule_svg(const UpgradeSchedule& schedule, const std::string& title) {
  std::string out = header(title);
  out += frame("Year", "Maximum split ratio (1:N)");

  int max_split = 4;
  for (const auto& row : schedule.max_split) {
    for (int s : row) max_split = std::max(max_split, s);
  }
  // Level 0 means no feasible split; split s sits at level log2(s) + 1.
  const double top_level = std::log2(static_cast<double>(max_split)) + 1.0;
  auto y_of = [&](int split) {
    const double level = split <= 0 ? 0.0 : std::log2(static_cast<double>(split)) + 1.0;
    return plot_bottom() - level / top_level * (plot_bottom() - kTop);
  };
  for (int level = 0; level <= static_cast<int>(top_level); ++level) {
    const int split = level == 0 ? 0 : 1 << (level - 1);
    const double yy = y_of(split);
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>\n"
        "<text x=\"{3}\" y=\"{4:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{5}</text>\n",
        kLeft, yy, plot_right(), kLeft - 6, yy + 4, split == 0 ? std::string("none") : "1:" + std::to_string(split));
  }

  const auto& years = schedule.years;
  const double span = years.size() > 1 ? static_cast<double>(years.back() - years.front()) : 1.0;
  auto x_of = [&](double year) {
    const double t = years.size() > 1 ? (year - years.front()) / span : 0.5;
    return kLeft + t * (plot_right() - kLeft);
  };
  const int label_every = std::max<int>(1, static_cast<int>(years.size() / 10));
  for (std::size_t i = 0; i < years.size(); ++i) {
    if (i % static_cast<std::size_t>(label_every) != 0) continue;
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
        x_of(years[i]), plot_bottom() + 16, years[i]);
  }

  for (std::size_t t = 0; t < schedule.technologies.size(); ++t) {
    const char* colour = kPalette[t % std::size(kPalette)];
    const auto& row = schedule.max_split[t];
    std::string path;
    for (std::size_t i = 0; i < years.size(); ++i) {
      const double x0 = x_of(years[i]);
      const double x1 = i + 1 < years.size() ? x_of(years[i + 1]) : x0;
      const double yy = y_of(row[i]) - static_cast<double>(t) * 1.5;  // keep overlapping lines visible
      path += fmt::format("{}{:.2f} {:.2f} L{:.2f} {:.2f} ", i == 0 ? "M" : "L", x0, yy, x1, yy);
    }
    out += fmt::format("<g class=\"series\" data-technology=\"{}\">\n", escape(schedule.technologies[t]));
    out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n", path, colour);
    const double ly = kTop + 14.0 + 16.0 * static_cast<double>(t);
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"{3}\" stroke-width=\"2\"/>\n"
        "<text x=\"{4}\" y=\"{5:.2f}\" font-family=\"sans-serif\" font-size=\"11\">{6}</text>\n",
        plot_right() + 8, ly, plot_right() + 28, colour, plot_right() + 32, ly + 4,
        escape(schedule.technologies[t]));
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ponplan::cli
