/*
 * Copyright 2026 The bsenergy Authors
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
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bsenergy::report {

/// Tool version embedded in every artifact.
std::string_view tool_version();

struct Provenance {
  std::string config_hash;
  std::uint64_t seed = 0;
  std::string version;
  /// Compact JSON of the resolved config; written as a second comment line
  /// when non-empty.
  std::string resolved_config;
};

/// Fixed "%.12g" formatting.
std::string format_number(double x);

using Cell = std::variant<double, long long, std::string>;

/// Cell helper accepting optionals (rendered as an empty field).
Cell optional_cell(const std::optional<double>& x);

/// A CSV table: comma-separated, '.' decimals, header row, LF endings.
class Table {
 public:
  Table(std::string name, std::vector<std::string> columns);

  void add_row(std::vector<Cell> cells);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t size() const { return rows_.size(); }

  /// Header plus rows, without provenance.
  std::string body() const;
  /// "# bsenergy <version> config=<hash> seed=<seed>" line, the optional
  /// "# config <json>" line, then body().
  void write_csv(std::ostream& os, const Provenance& provenance) const;
  /// Array of row objects keyed by column name.
  nlohmann::json to_json() const;

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

nlohmann::json provenance_json(const Provenance& provenance,
                               const nlohmann::json& resolved_config);

}  // namespace bsenergy::report
