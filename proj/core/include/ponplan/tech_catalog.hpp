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
#include <string_view>
#include <vector>

namespace ponplan {

// One PON standard. Capacities are shared across the whole tree.
struct PonTechnology {
  std::string name;
  double upstream_mbps = 0.0;
  double downstream_mbps = 0.0;
  int max_standard_split = 0;
  int ratified = 0;

  // Throws InvalidArgument on empty name, non-positive capacity or a split
  // that is not a power of two >= 4.
  void validate() const;

  friend bool operator==(const PonTechnology&, const PonTechnology&) = default;
};

// Nonempty, ordered, uniquely named set of technologies.
class Catalog {
 public:
  explicit Catalog(std::vector<PonTechnology> technologies);

  std::span<const PonTechnology> technologies() const noexcept { return technologies_; }
  std::size_t size() const noexcept { return technologies_.size(); }

  const PonTechnology* find(std::string_view name) const noexcept;
  // Throws UnknownTechnology naming every known technology.
  const PonTechnology& at(std::string_view name) const;
  std::vector<std::string> names() const;

  // Entries of `overrides` replace same-named entries in place; new names
  // are appended in their original order.
  Catalog merged_with(const Catalog& overrides) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<PonTechnology> technologies_;
};

inline constexpr std::string_view kCatalogHeader = "name,upstream_mbps,downstream_mbps,max_split,ratified";

Catalog builtin_catalog();

// Parses catalog CSV: the exact header line, then one technology per line.
// Blank lines and lines starting with '#' are skipped. Throws
// CatalogParseError with the offending line and column.
Catalog load_catalog(std::string_view text);

// Reads and parses a catalog file.
Catalog load_catalog_file(const std::string& path);

std::string serialize_catalog(const Catalog& catalog);

}  // namespace ponplan
