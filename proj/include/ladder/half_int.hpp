// Copyright 2026 The ladder Authors
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

#include <charconv>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ladder/errors.hpp"

namespace ladder {

/*
 * An exact exponent x with 2x an integer.
 *
 * Stored as the doubled value, so every operation the engine needs
 * (sums, differences, comparisons, integrality tests) is plain integer
 * arithmetic.  There is no floating point anywhere in the library.
 */
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) noexcept {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt integer(std::int64_t n) noexcept { return from_twice(2 * n); }

  /// Parses "3", "-2", "3/2", "-1/2".
  static HalfInt parse(std::string_view text);

  constexpr std::int64_t twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// Smallest integer not smaller than the value.
  constexpr std::int64_t ceil() const noexcept {
    return twice_ >= 0 ? (twice_ + 1) / 2 : -((-twice_) / 2);
  }
  constexpr std::int64_t floor() const noexcept {
    return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2);
  }

  /// The integer value; throws unless is_integer().
  std::int64_t as_integer() const {
    if (!is_integer()) throw invalid_input("HalfInt " + to_string() + " is not an integer");
    return twice_ / 2;
  }

  std::string to_string() const;

  constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) noexcept {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) noexcept {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return a -= b; }
  friend constexpr HalfInt operator+(HalfInt a, std::int64_t n) noexcept { return a += integer(n); }
  friend constexpr HalfInt operator-(HalfInt a, std::int64_t n) noexcept { return a -= integer(n); }

  friend constexpr bool operator==(HalfInt, HalfInt) noexcept = default;
  friend constexpr auto operator<=>(HalfInt, HalfInt) noexcept = default;

 private:
  std::int64_t twice_ = 0;
};

/// True iff a - b is an integer (a and b lie on a common Z-lattice).
constexpr bool same_lattice(HalfInt a, HalfInt b) noexcept { return (a - b).is_integer(); }

inline std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

inline HalfInt HalfInt::parse(std::string_view text) {
  auto fail = [&] { return invalid_input("cannot parse exponent '" + std::string(text) + "'"); };
  auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) throw fail();
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return integer(read(text));
  const std::int64_t num = read(text.substr(0, slash));
  const std::int64_t den = read(text.substr(slash + 1));
  if (den == 1) return integer(num);
  if (den != 2) throw fail();
  return from_twice(num);
}

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

}  // namespace ladder
