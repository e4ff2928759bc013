/* Copyright 2026 The latscat Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "latscat/error.hpp"
#include "latscat/harness.hpp"

namespace latscat {

void FigureTable::add_column(std::string name, std::vector<double> values) {
  names.push_back(std::move(name));
  columns.push_back(std::move(values));
}

const std::vector<double>& FigureTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return columns[i];
  }
  throw std::out_of_range("no column named " + name);
}

void FigureTable::validate() const {
  if (names.size() != columns.size()) {
    throw Error(ErrorKind::InvalidConfig, "table " + figure_id + ": name/column count mismatch");
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows()) {
      throw Error(ErrorKind::InvalidConfig,
                  "table " + figure_id + ": column " + names[c] + " has a different length");
    }
    for (double v : columns[c]) {
      if (!std::isfinite(v)) {
        throw Error(ErrorKind::InvalidConfig,
                    "table " + figure_id + ": non-finite value in column " + names[c]);
      }
    }
  }
}

namespace {

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  out += buf;
}

}  // namespace

std::string to_csv(const FigureTable& table) {
  table.validate();
  std::string out;
  out += "# ";
  out += kVersion;
  out += " figure=" + table.figure_id + "\n";
  if (table.metadata.contains("config")) {
    out += "# config=" + table.metadata["config"].dump() + "\n";
  }
  for (std::size_t c = 0; c < table.names.size(); ++c) {
    if (c) out += ',';
    out += table.names[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out += ',';
      append_number(out, table.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const FigureTable& table) {
  table.validate();
  nlohmann::json j;
  j["version"] = kVersion;
  j["figure_id"] = table.figure_id;
  j["metadata"] = table.metadata;
  nlohmann::json cols = nlohmann::json::object();
  for (std::size_t c = 0; c < table.names.size(); ++c) cols[table.names[c]] = table.columns[c];
  j["columns"] = std::move(cols);
  j["column_order"] = table.names;
  return j;
}

std::vector<std::filesystem::path> write_table(const FigureTable& table,
                                               const std::filesystem::path& dir,
                                               OutputFormat format) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& ext, const std::string& body) {
    auto path = dir / (table.figure_id + ext);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorKind::Io, "cannot open " + path.string());
    os << body;
    if (!os) throw Error(ErrorKind::Io, "write failed for " + path.string());
    written.push_back(path);
  };
  if (format == OutputFormat::Csv || format == OutputFormat::Both) emit(".csv", to_csv(table));
  if (format == OutputFormat::Json || format == OutputFormat::Both) {
    emit(".json", to_json(table).dump(1) + "\n");
  }
  return written;
}

}  // namespace latscat
