// Copyright 2026 The covphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/format.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string_view>

#include "json.hpp"

namespace covphase::cli {
namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  return format_number(std::get<double>(cell));
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  (void)ec;  // 64 bytes always suffice for 12 significant digits
  std::string out(buf, end);
  if (out == "-0") out = "0";
  return out;
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_text(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string& key = table.columns[c];
      if (const auto* i = std::get_if<long long>(&row[c])) {
        obj[key] = *i;
        continue;
      }
      const double v = std::get<double>(row[c]);
      const std::string text = format_number(v);
      if (!std::isfinite(v)) {
        obj[key] = text;
      } else {
        double rounded = 0.0;
        std::from_chars(text.data(), text.data() + text.size(), rounded);
        obj[key] = rounded;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

}  // namespace covphase::cli
