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

/*
 * Exhaustive small-instance verification.
 *
 * Every check recomputes its expectations from public operations only
 * (expected_length, tempered_subquotient, reducibility_test, supports,
 * the determinantal expansion) and never looks inside decompose.  The
 * decomposer under test is a parameter so that faulty implementations
 * can be fed through the same harness.
 */

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ladder/json.hpp"

namespace ladder {

struct CheckReport {
  std::string check;
  json subject;  // enough to rerun the check standalone
  bool pass = true;
  std::string detail;
  json counterexample = nullptr;
};

inline void to_json(json& j, const CheckReport& r) {
  j = json{{"check", r.check},
           {"subject", r.subject},
           {"pass", r.pass},
           {"detail", r.detail},
           {"counterexample", r.counterexample}};
}

/// Bounds of an exhaustive instance grid.
struct GridSpec {
  int max_t = 3;
  HalfInt max_exponent = HalfInt::from_twice(9);
  std::vector<std::optional<HalfInt>> alpha_choices;
  std::vector<bool> selfdual_choices;

  /// t <= 3, 2b <= 9, alpha in {none, 0, 1/2, 1, 3/2, 2}, both kinds of rho.
  static GridSpec standard() {
    GridSpec g;
    g.alpha_choices = {std::nullopt,           HalfInt::from_twice(0), HalfInt::from_twice(1),
                       HalfInt::from_twice(2), HalfInt::from_twice(3), HalfInt::from_twice(4)};
    g.selfdual_choices = {true, false};
    return g;
  }
};

/// Bounds for enumerating ladders.
struct LadderBounds {
  HalfInt min_start;
  HalfInt max_start;
  HalfInt max_end;
  int max_k = 3;
  int max_length = 1 << 20;  // number of points in a segment
};

/*
 * All ladders within `bounds` on `line`, over both the integral and the
 * half-integral lattice, ordered by lattice, then k, then lexicographically.
 */
inline std::vector<LadderData> enumerate_ladders(const CuspidalLine& line, const LadderBounds& bounds) {
  std::vector<LadderData> out;
  for (int parity : {1, 0}) {
    HalfInt first = bounds.min_start;
    if (((first.twice() % 2) + 2) % 2 != parity) first = first + HalfInt::from_twice(1);
    std::vector<SegmentBounds> cur;
    auto rec = [&](auto&& self, int k) -> void {
      if (static_cast<int>(cur.size()) == k) {
        out.emplace_back(line, cur);
        return;
      }
      HalfInt x = cur.empty() ? first : cur.back().x + 1;
      for (; x <= bounds.max_start; x = x + 1) {
        HalfInt y = x;
        if (!cur.empty() && y <= cur.back().y) y = cur.back().y + 1;
        for (; y <= bounds.max_end && (y - x).twice() / 2 + 1 <= bounds.max_length; y = y + 1) {
          cur.push_back({x, y});
          self(self, k);
          cur.pop_back();
        }
      }
    };
    for (int k = 1; k <= bounds.max_k; ++k) rec(rec, k);
  }
  return out;
}

/// Every valid instance of the grid, in a fixed order.
inline std::vector<Instance> enumerate_instances(const GridSpec& grid) {
  std::vector<Instance> out;
  for (bool selfdual : grid.selfdual_choices) {
    const CuspidalLine line{"rho", selfdual, false};
    const auto ladders = enumerate_ladders(
        line, {HalfInt::from_twice(1), grid.max_exponent, grid.max_exponent, grid.max_t});
    for (const auto& alpha : grid.alpha_choices) {
      // alpha exists exactly for selfdual rho.
      if (alpha.has_value() != selfdual) continue;
      for (const auto& l : ladders) out.emplace_back(l, ClassicalBase{"sigma_c", alpha});
    }
  }
  return out;
}

/// Ladders for the Jacquet-module oracle: k <= 3, at most 3 points per segment,
/// starts in {1/2, 1, ..., 7/2}.
inline std::vector<LadderData> oracle_ladders(int max_k = 3) {
  const auto line = CuspidalLine::make_selfdual("rho");
  return enumerate_ladders(line, {HalfInt::from_twice(1), HalfInt::from_twice(7),
                                  HalfInt::from_twice(11), max_k, 3});
}

/// Segments with at most 2 points, starts in [-2, 2], on a selfdual and a generic line.
inline std::vector<MultiSegment> multiplicativity_window() {
  std::vector<MultiSegment> out;
  for (const auto& line : {CuspidalLine::make_selfdual("rho"), CuspidalLine::make_generic("chi")})
    for (HalfInt x = HalfInt::integer(-2); x <= HalfInt::integer(2); x = x + HalfInt::from_twice(1))
      for (int len = 1; len <= 2; ++len) out.push_back(MultiSegment{Segment(line, x, x + (len - 1))});
  return out;
}

namespace detail {

/// x < 0 is folded onto the contragredient line at -x.
inline std::vector<SupportPoint> absolute_support(std::vector<SupportPoint> pts) {
  for (auto& [line, x] : pts)
    if (x < HalfInt{}) {
      line = line.contragredient();
      x = -x;
    }
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline json diff_json(const GLPairVirtual& lhs, const GLPairVirtual& rhs) {
  return json{{"lhs_minus_rhs", lhs - rhs}};
}

}  // namespace detail

/// Ladder Jacquet module against m* of the determinantal expansion, both in the standard basis.
inline CheckReport check_mstar_oracle(const LadderData& l) {
  CheckReport r;
  r.check = "mstar_oracle";
  r.subject = l;
  const GLPairVirtual via_ladder = ladder_pair_to_standard(mstar_ladder(l), l.line());
  const GLPairVirtual via_standard = mstar_standard(ladder_to_standard(l));
  r.pass = via_ladder == via_standard;
  r.detail = std::to_string(via_ladder.size()) + " standard terms";
  if (!r.pass) r.counterexample = detail::diff_json(via_ladder, via_standard);
  return r;
}

inline CheckReport check_Mstar_multiplicative(const MultiSegment& a, const MultiSegment& b) {
  CheckReport r;
  r.check = "Mstar_multiplicative";
  r.subject = json{{"a", a}, {"b", b}};
  const GLPairVirtual whole = Mstar(a * b);
  const GLPairVirtual split = Mstar(a) * Mstar(b);
  r.pass = whole == split;
  r.detail = std::to_string(whole.size()) + " terms";
  if (!r.pass) r.counterexample = detail::diff_json(whole, split);
  return r;
}

using DecomposeFn = std::function<Decomposition(const Instance&)>;

/*
 * Runs the decomposer and checks: length m + 1, multiplicity one,
 * support conservation, the tempered dichotomy, Langlands validity and
 * the irreducible branch.
 */
inline CheckReport check_decomposition(const Instance& inst, const DecomposeFn& run = decompose) {
  CheckReport r;
  r.check = "decomposition";
  r.subject = inst;
  std::vector<std::string> failures;
  Decomposition dec{};
  try {
    dec = run(inst);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("decompose threw: ") + e.what();
    r.counterexample = json{{"instance", inst}};
    return r;
  }

  const int expected = expected_length(inst);
  if (dec.length() != expected)
    failures.push_back("length " + std::to_string(dec.length()) + " != m+1 = " + std::to_string(expected));

  for (std::size_t i = 0; i < dec.constituents.size(); ++i) {
    if (dec.constituents[i].multiplicity != 1) failures.push_back("multiplicity != 1");
    for (std::size_t j = i + 1; j < dec.constituents.size(); ++j)
      if (dec.constituents[i].label == dec.constituents[j].label)
        failures.push_back("constituent repeated");
  }

  std::vector<SupportPoint> inst_pts = support(inst.ladder().label());
  inst_pts = detail::absolute_support(inst_pts);
  for (const auto& c : dec.constituents) {
    const auto sup = constituent_support(c.label);
    if (sup.base != inst.base().name) failures.push_back("classical base changed");
    if (detail::absolute_support(sup.points) != inst_pts) failures.push_back("support not conserved");
    HalfInt prev = HalfInt::integer(-(1 << 30));
    for (const auto& s : c.label.negatives) {
      const HalfInt e = e_value(s);
      if (!(e < HalfInt{}) || e < prev) failures.push_back("Langlands data not negative ascending");
      prev = e;
    }
    if (c.label.is_tempered() && !c.label.strongly_positive())
      failures.push_back("bare cuspidal constituent");
  }

  const auto tempered = tempered_subquotient(inst);
  std::vector<const ConstituentLabel*> found;
  for (const auto& c : dec.constituents)
    if (c.label.is_tempered()) found.push_back(&c.label);
  if (tempered.has_value() != !found.empty()) failures.push_back("tempered dichotomy violated");
  if (found.size() > 1) failures.push_back("more than one tempered constituent");
  if (tempered && found.size() == 1 && !(*found.front()->strongly_positive() == *tempered))
    failures.push_back("tempered constituent differs from the predicted label");

  const bool reducible = reducibility_test(inst);
  if (reducible == (dec.constituents.size() == 1)) failures.push_back("reducibility criterion violated");
  if (!reducible) {
    const ConstituentLabel full(contragredient(inst.ladder().label()), inst.base());
    if (dec.constituents.size() != 1 || !(dec.constituents.front().label == full))
      failures.push_back("irreducible branch is not the full contragredient datum");
  }

  r.pass = failures.empty();
  r.detail = "length " + std::to_string(dec.length());
  if (!r.pass) {
    std::sort(failures.begin(), failures.end());
    failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
    r.counterexample = json{{"instance", inst}, {"decomposition", dec}, {"failures", failures}};
  }
  return r;
}

struct VerifyOptions {
  GridSpec grid = GridSpec::standard();
  DecomposeFn decomposer = decompose;
};

/// All three suites, in a fixed order.
inline std::vector<CheckReport> run_verify(const VerifyOptions& opts) {
  std::vector<CheckReport> out;
  for (const auto& l : oracle_ladders(std::min(3, opts.grid.max_t))) out.push_back(check_mstar_oracle(l));
  const auto window = multiplicativity_window();
  for (const auto& a : window)
    for (const auto& b : window) out.push_back(check_Mstar_multiplicative(a, b));
  for (const auto& inst : enumerate_instances(opts.grid))
    out.push_back(check_decomposition(inst, opts.decomposer));
  return out;
}

}  // namespace ladder
