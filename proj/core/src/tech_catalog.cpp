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

#include "ponplan/tech_catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "ponplan/error.hpp"

namespace ponplan {

namespace {

bool is_power_of_two_split(long long split) {
  return split >= 4 && std::has_single_bit(static_cast<unsigned long long>(split));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

constexpr std::string_view kColumns[] = {"name", "upstream_mbps", "downstream_mbps", "max_split", "ratified"};

double parse_capacity(std::string_view field, std::size_t line, std::size_t column) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
    throw CatalogParseError(line, column, std::string(kColumns[column - 1]) + " is not a number: '" +
                                              std::string(field) + "'");
  }
  if (!(value > 0.0)) {
    throw CatalogParseError(line, column, std::string(kColumns[column - 1]) + " must be positive");
  }
  return value;
}

long long parse_integer(std::string_view field, std::size_t line, std::size_t column) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw CatalogParseError(line, column, std::string(kColumns[column - 1]) + " is not an integer: '" +
                                              std::string(field) + "'");
  }
  return value;
}

}  // namespace

void PonTechnology::validate() const {
  if (name.empty()) throw InvalidArgument("technology name is empty");
  if (name.find_first_of(",#\n\r") != std::string::npos) {
    throw InvalidArgument("technology name '" + name + "' contains a reserved character");
  }
  if (!(upstream_mbps > 0.0) || !std::isfinite(upstream_mbps)) {
    throw InvalidArgument(name + ": upstream capacity must be positive");
  }
  if (!(downstream_mbps > 0.0) || !std::isfinite(downstream_mbps)) {
    throw InvalidArgument(name + ": downstream capacity must be positive");
  }
  if (!is_power_of_two_split(max_standard_split)) {
    throw InvalidArgument(name + ": max split must be a power of two >= 4, got " +
                          std::to_string(max_standard_split));
  }
}

Catalog::Catalog(std::vector<PonTechnology> technologies) : technologies_(std::move(technologies)) {
  if (technologies_.empty()) throw InvalidArgument("catalog is empty");
  std::unordered_set<std::string> seen;
  for (const auto& tech : technologies_) {
    tech.validate();
    if (!seen.insert(tech.name).second) throw InvalidArgument("duplicate technology name '" + tech.name + "'");
  }
}

const PonTechnology* Catalog::find(std::string_view name) const noexcept {
  for (const auto& tech : technologies_) {
    if (tech.name == name) return &tech;
  }
  return nullptr;
}

const PonTechnology& Catalog::at(std::string_view name) const {
  if (const auto* tech = find(name)) return *tech;
  throw UnknownTechnology(fmt::format("unknown technology '{}'; known: {}", name, fmt::join(names(), ", ")));
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(technologies_.size());
  for (const auto& tech : technologies_) out.push_back(tech.name);
  return out;
}

Catalog Catalog::merged_with(const Catalog& overrides) const {
  std::vector<PonTechnology> merged = technologies_;
  for (const auto& tech : overrides.technologies()) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const PonTechnology& t) { return t.name == tech.name; });
    if (it != merged.end()) {
      *it = tech;
    } else {
      merged.push_back(tech);
    }
  }
  return Catalog(std::move(merged));
}

Catalog builtin_catalog() {
  return Catalog({
      {"GPON", 1'250.0, 2'488.0, 128, 2003},
      {"XG-PON", 2'500.0, 10'000.0, 256, 2012},
      {"XGS-PON", 10'000.0, 10'000.0, 256, 2016},
      {"10G-EPON", 10'000.0, 10'000.0, 256, 2009},
      {"25G-PON", 25'000.0, 25'000.0, 256, 2020},
      // Four 10G wavelengths upstream.
      {"NG-PON2", 40'000.0, 40'000.0, 256, 2014},
      {"100G-EPON", 100'000.0, 100'000.0, 256, 2020},
  });
}

Catalog load_catalog(std::string_view text) {
  std::vector<PonTechnology> techs;
  std::unordered_set<std::string> seen;
  bool have_header = false;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.remove_prefix(3);
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    if (!have_header) {
      for (std::size_t c = 0; c < std::size(kColumns); ++c) {
        if (c >= fields.size() || fields[c] != kColumns[c]) {
          throw CatalogParseError(line_no, c + 1, "missing header column '" + std::string(kColumns[c]) +
                                                      "'; expected header: " + std::string(kCatalogHeader));
        }
      }
      if (fields.size() > std::size(kColumns)) {
        throw CatalogParseError(line_no, std::size(kColumns) + 1, "unexpected extra header column");
      }
      have_header = true;
      continue;
    }

    if (fields.size() != std::size(kColumns)) {
      const std::size_t column = std::min(fields.size(), std::size(kColumns)) + 1;
      throw CatalogParseError(line_no, column, fmt::format("expected {} fields, found {}", std::size(kColumns),
                                                           fields.size()));
    }

    PonTechnology tech;
    tech.name = std::string(fields[0]);
    if (tech.name.empty()) throw CatalogParseError(line_no, 1, "name is empty");
    if (!seen.insert(tech.name).second) {
      throw CatalogParseError(line_no, 1, "duplicate technology name '" + tech.name + "'");
    }
    tech.upstream_mbps = parse_capacity(fields[1], line_no, 2);
    tech.downstream_mbps = parse_capacity(fields[2], line_no, 3);
    const long long split = parse_integer(fields[3], line_no, 4);
    if (!is_power_of_two_split(split) || split > (1LL << 30)) {
      throw CatalogParseError(line_no, 4, "max_split must be a power of two >= 4, got " + std::string(fields[3]));
    }
    tech.max_standard_split = static_cast<int>(split);
    const long long ratified = parse_integer(fields[4], line_no, 5);
    if (ratified < 0 || ratified > 9999) throw CatalogParseError(line_no, 5, "ratified is not a year");
    tech.ratified = static_cast<int>(ratified);
    techs.push_back(std::move(tech));
  }

  if (!have_header) throw CatalogParseError(line_no == 0 ? 1 : line_no, 1, "catalog has no header line");
  if (techs.empty()) throw CatalogParseError(line_no, 1, "catalog lists no technologies");
  return Catalog(std::move(techs));
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_catalog(buffer.str());
}

std::string serialize_catalog(const Catalog& catalog) {
  std::string out(kCatalogHeader);
  out += '\n';
  for (const auto& tech : catalog.technologies()) {
    out += fmt::format("{},{},{},{},{}\n", tech.name, tech.upstream_mbps, tech.downstream_mbps,
                       tech.max_standard_split, tech.ratified);
  }
  return out;
}

}  // namespace ponplan
