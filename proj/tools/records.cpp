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

#include "records.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "json.hpp"
#include "ponplan/export.hpp"
#include "ponplan/format.hpp"

namespace ponplan::cli {

namespace {

struct TableText {
  std::string operator()(std::monostate) const { return "-"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_significant(v, 3); }
  std::string operator()(const std::string& v) const { return v; }
  std::string operator()(bool v) const { return v ? "yes" : "no"; }
};

struct CsvText {
  std::string operator()(std::monostate) const { return {}; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_exact(v); }
  std::string operator()(const std::string& v) const { return v; }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct JsonValue {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(double v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  nlohmann::ordered_json operator()(bool v) const { return v; }
};

}  // namespace

Record::Record(std::vector<std::string> data_columns) {
  columns.reserve(data_columns.size() + 1);
  columns.emplace_back("schema_version");
  for (auto& c : data_columns) columns.push_back(std::move(c));
}

void Record::add(std::vector<Cell> cells) {
  cells.insert(cells.begin(), Cell{std::int64_t{kSchemaVersion}});
  rows.push_back(std::move(cells));
}

void write_table(std::ostream& out, const Record& record) {
  const std::size_t cols = record.columns.size();
  std::vector<std::vector<std::string>> text;
  text.emplace_back(record.columns.begin() + 1, record.columns.end());
  for (const auto& row : record.rows) {
    auto& line = text.emplace_back();
    for (std::size_t c = 1; c < cols; ++c) line.push_back(std::visit(TableText{}, row[c]));
  }
  std::vector<std::size_t> width(cols - 1, 0);
  for (const auto& line : text) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  for (const auto& line : text) {
    std::string s;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) s += "  ";
      // Left-align the first column, right-align the rest.
      s += c == 0 ? fmt::format("{:<{}}", line[c], width[c]) : fmt::format("{:>{}}", line[c], width[c]);
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  }
}

void write_csv(std::ostream& out, const Record& record) {
  out << fmt::format("{}", fmt::join(record.columns, ",")) << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << std::visit(CsvText{}, row[c]);
    }
    out << '\n';
  }
}

std::string to_json(const std::vector<std::pair<std::string, const Record*>>& sections) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  for (const auto& [key, record] : sections) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : record->rows) {
      nlohmann::ordered_json obj;
      for (std::size_t c = 0; c < row.size(); ++c) obj[record->columns[c]] = std::visit(JsonValue{}, row[c]);
      rows.push_back(std::move(obj));
    }
    doc[key] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

}  // namespace ponplan::cli
