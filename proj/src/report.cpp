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

#include "bsenergy/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#ifndef BSENERGY_VERSION
#define BSENERGY_VERSION "0.0.0"
#endif

namespace bsenergy::report {

std::string_view tool_version() { return BSENERGY_VERSION; }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Cell optional_cell(const std::optional<double>& x) {
  return x ? Cell(*x) : Cell(std::string());
}

Table::Table(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("table needs columns");
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size()) {
    throw std::invalid_argument("table " + name_ + ": row has " +
                                std::to_string(cells.size()) + " cells, expected " +
                                std::to_string(columns_.size()));
  }
  rows_.push_back(std::move(cells));
}

namespace {

std::string render(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    return std::isfinite(*d) ? nlohmann::json(*d) : nlohmann::json(nullptr);
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  const auto& s = std::get<std::string>(c);
  return s.empty() ? nlohmann::json(nullptr) : nlohmann::json(s);
}

}  // namespace

std::string Table::body() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    os << (i ? "," : "") << columns_[i];
  }
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << render(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

void Table::write_csv(std::ostream& os, const Provenance& provenance) const {
  os << "# bsenergy " << provenance.version << " config=" << provenance.config_hash
     << " seed=" << provenance.seed << '\n';
  if (!provenance.resolved_config.empty()) {
    os << "# config " << provenance.resolved_config << '\n';
  }
  os << body();
}

nlohmann::json Table::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

nlohmann::json provenance_json(const Provenance& provenance,
                               const nlohmann::json& resolved_config) {
  return {{"tool", "bsenergy"},
          {"version", provenance.version},
          {"config_hash", provenance.config_hash},
          {"seed", provenance.seed},
          {"config", resolved_config}};
}

}  // namespace bsenergy::report
