// Copyright 2026 The gsmve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// "m,mean,std" tables, one row per sequence length.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gsmve/metrics.hpp"

namespace gsmve {

struct CsvRow {
  std::size_t m = 0;
  double mean = 0.0;
  double std = 0.0;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

struct CsvSeries {
  std::vector<CsvRow> rows;

  friend bool operator==(const CsvSeries&, const CsvSeries&) = default;
};

// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

CsvSeries to_csv_series(std::span<const MvePoint> points);

std::string csv_text(const CsvSeries& series);
// Throws ParseError for a wrong header, malformed rows, or unsorted m.
CsvSeries parse_csv(const std::string& text);

// Writes to a temporary sibling and renames, so a failed write leaves no
// partial file behind.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace gsmve
