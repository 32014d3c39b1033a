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

#pragma once

#include <string>
#include <variant>
#include <vector>

namespace covphase::cli {

/// 12 significant digits, locale-independent, "inf"/"-inf"/"nan" literals.
std::string format_number(double value);

using Cell = std::variant<long long, double>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header row plus one line per row, LF endings.
std::string render_csv(const Table& table);

/// Array of objects keyed by column name. Doubles carry exactly the digits
/// render_csv prints; non-finite values become the strings "inf"/"-inf"/"nan".
std::string render_json(const Table& table);

}  // namespace covphase::cli
