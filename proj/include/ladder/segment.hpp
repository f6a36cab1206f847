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

#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ladder/errors.hpp"
#include "ladder/half_int.hpp"

namespace ladder {

/*
 * The line {nu^x rho : x real} of a cuspidal representation rho of a
 * general linear group.
 *
 * Identity is the pair (name, dual).  A selfdual line is its own
 * contragredient; a non-selfdual line maps to the line with the same
 * name and the dual marker toggled, so rho and rho~ supports never mix.
 */
struct CuspidalLine {
  std::string name;
  bool selfdual = true;
  bool dual = false;

  static CuspidalLine make_selfdual(std::string name) { return {std::move(name), true, false}; }
  static CuspidalLine make_generic(std::string name) { return {std::move(name), false, false}; }

  CuspidalLine contragredient() const {
    if (selfdual) return *this;
    return {name, false, !dual};
  }

  friend bool operator==(const CuspidalLine& a, const CuspidalLine& b) {
    return a.name == b.name && a.dual == b.dual;
  }
  friend std::strong_ordering operator<=>(const CuspidalLine& a, const CuspidalLine& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.dual <=> b.dual;
  }
};

/// The cuspidal representation sigma_c of the classical group, with the
/// reducibility point alpha of nu^x rho x| sigma_c when rho is selfdual.
struct ClassicalBase {
  std::string name;
  std::optional<HalfInt> alpha;

  friend bool operator==(const ClassicalBase&, const ClassicalBase&) = default;
};

/*
 * A segment [nu^x rho, nu^y rho], labelling delta([nu^x rho, nu^y rho]).
 *
 * y - x is an integer >= -1.  When y = x - 1 the segment is empty and
 * stands for the trivial representation 1; all empty segments compare
 * equal to one another regardless of x and line.
 */
class Segment {
 public:
  Segment(CuspidalLine line, HalfInt x, HalfInt y) : line_(std::move(line)), x_(x), y_(y) {
    if (!same_lattice(x, y))
      throw invalid_input("segment [" + x.to_string() + ", " + y.to_string() +
                          "]: endpoints differ by a non-integer");
    if (y < x - 1)
      throw invalid_input("segment [" + x.to_string() + ", " + y.to_string() +
                          "]: y - x must be >= -1");
  }

  const CuspidalLine& line() const noexcept { return line_; }
  HalfInt x() const noexcept { return x_; }
  HalfInt y() const noexcept { return y_; }
  bool empty() const noexcept { return y_ == x_ - 1; }
  /// Number of cuspidal representations in the segment.
  std::int64_t length() const noexcept { return (y_ - x_).twice() / 2 + 1; }

  friend bool operator==(const Segment& a, const Segment& b) { return (a <=> b) == 0; }

  // Canonical order: empties first, then ascending e-value, x, y, line.
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
    if (a.empty() || b.empty()) return b.empty() <=> a.empty();
    const auto ea = a.x_.twice() + a.y_.twice();
    const auto eb = b.x_.twice() + b.y_.twice();
    if (auto c = ea <=> eb; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    if (auto c = a.y_ <=> b.y_; c != 0) return c;
    return a.line_ <=> b.line_;
  }

 private:
  CuspidalLine line_;
  HalfInt x_;
  HalfInt y_;
};

/// A point nu^x rho of a cuspidal support.
using SupportPoint = std::pair<CuspidalLine, HalfInt>;

/// e(delta([x, y])) = (x + y) / 2.
inline HalfInt e_value(const Segment& s) {
  if (s.empty()) throw invalid_input("empty segment has no e-value");
  // x and y share a lattice, so the doubled endpoints have equal parity.
  return HalfInt::from_twice((s.x().twice() + s.y().twice()) / 2);
}

/// [x, y] on rho  ->  [-y, -x] on rho~.
inline Segment contragredient_segment(const Segment& s) {
  return Segment(s.line().contragredient(), -s.y(), -s.x());
}

inline std::vector<SupportPoint> segment_support(const Segment& s) {
  std::vector<SupportPoint> out;
  for (HalfInt v = s.x(); v <= s.y(); v = v + 1) out.emplace_back(s.line(), v);
  return out;
}

/// True iff alpha is one of x, x+1, ..., y.
inline bool lattice_member(HalfInt alpha, const Segment& s) {
  return same_lattice(alpha, s.x()) && s.x() <= alpha && alpha <= s.y();
}

}  // namespace ladder
