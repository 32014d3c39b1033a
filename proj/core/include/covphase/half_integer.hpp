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

#include <compare>
#include <string>

namespace covphase {

// Spin and magnetic labels stored as twice their value so that 1/2, 3/2, ...
// are exact.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_int(int value) { return from_twice(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// True when `a - b` is an integer, i.e. both labels have the same parity.
  static constexpr bool same_parity(HalfInteger a, HalfInteger b) {
    return ((a.twice_ - b.twice_) % 2) == 0;
  }

  constexpr HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInteger operator-() const { return from_twice(-twice_); }
  constexpr HalfInteger& operator+=(HalfInteger o) {
    twice_ += o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  /// "3/2", "-1/2", "2".
  std::string to_string() const;

 private:
  int twice_ = 0;
};

inline constexpr HalfInteger kHalf = HalfInteger::from_twice(1);
inline constexpr HalfInteger kOne = HalfInteger::from_twice(2);

}  // namespace covphase
