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

#include "gsmve/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace gsmve {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

CsvSeries to_csv_series(std::span<const MvePoint> points) {
  CsvSeries s;
  for (const auto& p : points) s.rows.push_back({p.m, p.mean, p.std});
  return s;
}

std::string csv_text(const CsvSeries& series) {
  std::string out = "m,mean,std\n";
  for (const auto& r : series.rows)
    out += std::to_string(r.m) + "," + format_double(r.mean) + "," + format_double(r.std) + "\n";
  return out;
}

CsvSeries parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "m,mean,std") throw ParseError("line 1", "header must be 'm,mean,std'");
  CsvSeries s;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
      throw ParseError(where, "expected three columns");
    CsvRow row;
    const char* b = line.data();
    const char* e = b + line.size();
    auto r1 = std::from_chars(b, b + c1, row.m);
    auto r2 = std::from_chars(b + c1 + 1, b + c2, row.mean);
    auto r3 = std::from_chars(b + c2 + 1, e, row.std);
    if (r1.ec != std::errc() || r1.ptr != b + c1 || r2.ec != std::errc() || r2.ptr != b + c2 ||
        r3.ec != std::errc() || r3.ptr != e)
      throw ParseError(where, "malformed number");
    if (!s.rows.empty() && row.m <= s.rows.back().m) throw ParseError(where, "rows must be sorted by m");
    s.rows.push_back(row);
  }
  return s;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot write " + path.string() + ": " + ec.message());
  }
}

}  // namespace gsmve
