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

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ponplan::cli {

// A cell is empty, an integer, a real, text or a flag.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

// Column-named rows shared by the table, CSV and JSON renderers, so the
// three formats always carry the same values. The first column is always
// schema_version.
struct Record {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  explicit Record(std::vector<std::string> data_columns);
  // Prepends the schema version to `cells`.
  void add(std::vector<Cell> cells);
};

// Aligned text; reals at 3 significant figures. The schema column is omitted.
void write_table(std::ostream& out, const Record& record);
// Reals at full round-trip precision.
void write_csv(std::ostream& out, const Record& record);
// {"schema_version": N, "<key>": [{column: value, ...}, ...]}
std::string to_json(const std::vector<std::pair<std::string, const Record*>>& sections);

}  // namespace ponplan::cli
