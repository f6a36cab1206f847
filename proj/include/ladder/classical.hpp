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

#include <utility>
#include <variant>
#include <vector>

#include "ladder/gl_ring.hpp"

namespace ladder {

/*
 * Canonical label of a strongly positive representation: the unique
 * irreducible subrepresentation of
 *
 *   delta([alpha-r+1, x_1]) x ... x delta([alpha, x_r]) x| sigma_c,   r = ceil(alpha),
 *
 * with -1/2 <= x_1 < ... < x_r and x_i - alpha integral.  Slot i is kept
 * even when empty (x_i = alpha - r + i - 1), so equality is syntactic.
 */
struct SPLabel {
  ClassicalBase base;
  std::vector<Segment> padded;

  /// The nonempty slots.
  std::vector<Segment> listed() const {
    std::vector<Segment> out;
    for (const auto& s : padded)
      if (!s.empty()) out.push_back(s);
    return out;
  }

  friend bool operator==(const SPLabel&, const SPLabel&) = default;
};

/// Pads `listed` to the full r-slot form and validates the strong positivity constraints.
inline SPLabel sp_normalize(const std::vector<Segment>& listed, const ClassicalBase& base) {
  if (!base.alpha) throw invalid_input("strongly positive label needs a reducibility point");
  const HalfInt alpha = *base.alpha;
  if (alpha <= HalfInt{}) throw invalid_input("strongly positive label needs alpha > 0");
  auto not_sp = [](const std::string& why) {
    return invalid_input("not strongly positive: " + why);
  };
  if (listed.empty()) throw not_sp("no segments listed");

  const auto r = static_cast<std::size_t>(alpha.ceil());
  const CuspidalLine& line = listed.front().line();
  if (!line.selfdual) throw not_sp("cuspidal line is not selfdual");
  if (listed.size() > r)
    throw not_sp(std::to_string(listed.size()) + " segments exceed r = " + std::to_string(r));

  // The listed segments fill the top slots, starting at alpha-n+1, ..., alpha.
  const std::size_t first_slot = r - listed.size();
  std::vector<Segment> padded;
  const HalfInt base_start = alpha - static_cast<std::int64_t>(r);
  for (std::size_t i = 0; i < first_slot; ++i) {
    const HalfInt start = base_start + static_cast<std::int64_t>(i + 1);
    padded.emplace_back(line, start, start - 1);
  }
  for (std::size_t j = 0; j < listed.size(); ++j) {
    const Segment& s = listed[j];
    const HalfInt start = base_start + static_cast<std::int64_t>(first_slot + j + 1);
    if (s.line() != line) throw not_sp("segments on different lines");
    if (s.empty()) throw not_sp("listed segment is empty");
    if (s.x() != start)
      throw not_sp("segment [" + s.x().to_string() + ", " + s.y().to_string() +
                   "] must start at " + start.to_string());
    padded.push_back(s);
  }

  for (std::size_t i = 0; i < padded.size(); ++i) {
    const HalfInt end = padded[i].y();
    if (!same_lattice(end, alpha)) throw not_sp("end " + end.to_string() + " off the alpha lattice");
    if (end < HalfInt::from_twice(-1)) throw not_sp("end below -1/2");
    if (i > 0 && !(padded[i - 1].y() < end)) throw not_sp("ends must be strictly increasing");
  }
  return SPLabel{base, std::move(padded)};
}

/*
 * An irreducible constituent of pi_L x| sigma_c in Langlands form
 * L(delta_1, ..., delta_l; tau), with e(delta_1) <= ... <= e(delta_l) < 0
 * and tau either strongly positive or sigma_c itself.
 */
struct ConstituentLabel {
  MultiSegment negatives;
  std::variant<SPLabel, ClassicalBase> tempered;

  ConstituentLabel(MultiSegment negs, std::variant<SPLabel, ClassicalBase> tau)
      : negatives(std::move(negs)), tempered(std::move(tau)) {
    for (const auto& s : negatives)
      if (!(e_value(s) < HalfInt{}))
        throw invalid_input("Langlands data requires e(delta) < 0");
  }

  bool is_tempered() const noexcept { return negatives.is_unit(); }
  const SPLabel* strongly_positive() const noexcept { return std::get_if<SPLabel>(&tempered); }
  const ClassicalBase& base() const noexcept {
    if (auto* sp = strongly_positive()) return sp->base;
    return std::get<ClassicalBase>(tempered);
  }

  friend bool operator==(const ConstituentLabel&, const ConstituentLabel&) = default;
};

using CutPair = std::pair<CutTuple, CutTuple>;

/// Pairs (c, d) in Lad x Lad with c_i <= d_i, lexicographic in (c, d).
inline std::vector<CutPair> lad_prime_enumerate(const LadderData& l) {
  const auto lad = lad_enumerate(l);
  std::vector<CutPair> out;
  for (const auto& c : lad)
    for (const auto& d : lad) {
      bool ok = true;
      for (std::size_t i = 0; i < c.size() && ok; ++i) ok = c[i] <= d[i];
      if (ok) out.emplace_back(c, d);
    }
  return out;
}

/*
 * One term of mu*(pi_L x| sigma_c):
 *
 *   L([-c_t, -x_t], ..., [-c_1, -x_1])~ x L([d_1+1, y_1], ..., [d_t+1, y_t])
 *     (x)  L([c_1+1, d_1], ..., [c_t+1, d_t]) x| sigma_c
 */
struct MuStarTerm {
  MultiSegment gl_negative;  // on the contragredient line
  MultiSegment gl_positive;
  MultiSegment middle;
  ClassicalBase base;
  CutTuple c;
  CutTuple d;
};

inline std::vector<MuStarTerm> mu_star_induced(const LadderData& l, const ClassicalBase& base) {
  std::vector<MuStarTerm> out;
  const CuspidalLine dual = l.line().contragredient();
  for (auto& [c, d] : lad_prime_enumerate(l)) {
    std::vector<Segment> neg, pos, mid;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const auto [x, y] = l.pairs()[i];
      neg.emplace_back(dual, -c[i], -x);
      pos.emplace_back(l.line(), d[i] + 1, y);
      mid.emplace_back(l.line(), c[i] + 1, d[i]);
    }
    out.push_back(MuStarTerm{MultiSegment(std::move(neg)), MultiSegment(std::move(pos)),
                             MultiSegment(std::move(mid)), base, c, d});
  }
  return out;
}

}  // namespace ladder
