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

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "ladder/multisegment.hpp"
#include "ladder/virtual.hpp"

namespace ladder {

/// One segment [x, y] of a ladder, as a pair of exponents.
struct SegmentBounds {
  HalfInt x;
  HalfInt y;
  friend bool operator==(const SegmentBounds&, const SegmentBounds&) = default;
};

/*
 * A ladder L(delta([x_1, y_1]), ..., delta([x_k, y_k])) on one line:
 * x_1 < ... < x_k, y_1 < ... < y_k, x_i <= y_i, and every endpoint on
 * the lattice x_1 + Z.
 *
 * k = 0 is accepted and denotes the unit; it shows up as a tensor factor
 * of the Jacquet module.
 */
class LadderData {
 public:
  LadderData(CuspidalLine line, std::vector<SegmentBounds> pairs)
      : line_(std::move(line)), pairs_(std::move(pairs)) {
    validate();
  }

  /// Rebuilds a ladder from its Langlands label; every segment must lie on `line`.
  static LadderData from_label(const CuspidalLine& line, const MultiSegment& label) {
    std::vector<SegmentBounds> pairs;
    for (const auto& s : label) {
      if (s.line() != line) throw invalid_input("ladder label mixes cuspidal lines");
      pairs.push_back({s.x(), s.y()});
    }
    std::sort(pairs.begin(), pairs.end(), [](auto& a, auto& b) { return a.x < b.x; });
    return LadderData(line, std::move(pairs));
  }

  const CuspidalLine& line() const noexcept { return line_; }
  const std::vector<SegmentBounds>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  Segment segment(std::size_t i) const { return Segment(line_, pairs_[i].x, pairs_[i].y); }
  MultiSegment label() const {
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < size(); ++i) segs.push_back(segment(i));
    return MultiSegment(std::move(segs));
  }

  friend bool operator==(const LadderData&, const LadderData&) = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto [x, y] = pairs_[i];
      const std::string where = "ladder segment " + std::to_string(i + 1) + " [" + x.to_string() +
                                ", " + y.to_string() + "]: ";
      if (!same_lattice(x, y)) throw invalid_input(where + "y - x is not an integer");
      if (y < x) throw invalid_input(where + "requires x <= y");
      if (!same_lattice(x, pairs_[0].x))
        throw invalid_input(where + "not on the lattice of the first segment");
      if (i > 0 && !(pairs_[i - 1].x < x))
        throw invalid_input(where + "starts must be strictly increasing");
      if (i > 0 && !(pairs_[i - 1].y < y))
        throw invalid_input(where + "ends must be strictly increasing");
    }
  }

  CuspidalLine line_;
  std::vector<SegmentBounds> pairs_;
};

/// ((x_1,y_1),...,(x_k,y_k)) -> ((-y_k,-x_k),...,(-y_1,-x_1)) on the contragredient line.
inline LadderData ladder_contragredient(const LadderData& l) {
  std::vector<SegmentBounds> out;
  for (auto it = l.pairs().rbegin(); it != l.pairs().rend(); ++it) out.push_back({-it->y, -it->x});
  return LadderData(l.line().contragredient(), std::move(out));
}

/// A cut tuple (c_1, ..., c_k).
using CutTuple = std::vector<HalfInt>;

/*
 * All (c_1, ..., c_k) with c_1 < ... < c_k, x_i - 1 <= c_i <= y_i and
 * c_i - x_i integral, in lexicographic order.
 */
inline std::vector<CutTuple> lad_enumerate(const LadderData& l) {
  std::vector<CutTuple> out;
  CutTuple cur(l.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == l.size()) {
      out.push_back(cur);
      return;
    }
    const auto [x, y] = l.pairs()[i];
    for (HalfInt c = x - 1; c <= y; c = c + 1) {
      if (i > 0 && !(cur[i - 1] < c)) continue;
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// m*(delta([x, y])) = sum_{c = x-1}^{y} delta([c+1, y]) (x) delta([x, c]).
inline GLPairVirtual mstar_segment(const Segment& s) {
  if (s.empty()) return GLPairVirtual::unit();
  GLPairVirtual out;
  for (HalfInt c = s.x() - 1; c <= s.y(); c = c + 1)
    out.add(MultiSegment{Segment(s.line(), c + 1, s.y())},
            MultiSegment{Segment(s.line(), s.x(), c)}, 1);
  return out;
}

/// m* on a standard label, by multiplicativity.
inline GLPairVirtual mstar_standard(const MultiSegment& m) {
  GLPairVirtual out = GLPairVirtual::unit();
  for (const auto& s : m) out = out * mstar_segment(s);
  return out;
}

inline GLPairVirtual mstar_standard(const GLVirtual& v) {
  GLPairVirtual out;
  for (const auto& [label, coeff] : v) {
    for (const auto& [t, c] : mstar_standard(label)) out.add(t.left, t.right, coeff * c);
  }
  return out;
}

/*
 * M* = (m (x) 1) o (~ (x) m*) o s o m*, applied to each standard label
 * as a whole (not segment by segment) and extended linearly.
 */
inline GLPairVirtual Mstar(const GLVirtual& v) {
  GLPairVirtual out;
  for (const auto& [label, coeff] : v) {
    for (const auto& [outer, c1] : mstar_standard(label)) {
      // s swaps the factors; ~ hits the new left factor, m* the new right.
      const MultiSegment flipped = contragredient(outer.right);
      for (const auto& [inner, c2] : mstar_standard(outer.left))
        out.add(flipped * inner.left, inner.right, coeff * c1 * c2);
    }
  }
  return out;
}

inline GLPairVirtual Mstar(const MultiSegment& m) { return Mstar(GLVirtual(m)); }

/*
 * Jacquet module of a ladder:
 *
 *   m*(L) = sum_{c in Lad(L)} L([c_1+1, y_1], ..., [c_k+1, y_k]) (x) L([x_1, c_1], ..., [x_k, c_k])
 *
 * Both factors are again ladders (empty segments dropped).  The result
 * is kept in the ladder basis.
 */
inline GLPairVirtual mstar_ladder(const LadderData& l) {
  GLPairVirtual out(Basis::ladder);
  for (const auto& c : lad_enumerate(l)) {
    std::vector<Segment> left, right;
    for (std::size_t i = 0; i < l.size(); ++i) {
      left.emplace_back(l.line(), c[i] + 1, l.pairs()[i].y);
      right.emplace_back(l.line(), l.pairs()[i].x, c[i]);
    }
    out.add(MultiSegment(std::move(left)), MultiSegment(std::move(right)), 1);
  }
  return out;
}

/*
 * Determinantal expansion of a ladder in the standard basis:
 *
 *   L = sum_{w in S_k} sgn(w) prod_i delta([x_i, y_{w(i)}])
 *
 * where delta([x, x-1]) = 1 and terms with y_{w(i)} < x_i - 1 vanish.
 */
inline GLVirtual ladder_to_standard(const LadderData& l) {
  const std::size_t k = l.size();
  std::vector<std::size_t> w(k);
  std::iota(w.begin(), w.end(), 0);
  GLVirtual out;
  do {
    std::vector<Segment> segs;
    bool vanishes = false;
    for (std::size_t i = 0; i < k && !vanishes; ++i) {
      const HalfInt x = l.pairs()[i].x;
      const HalfInt y = l.pairs()[w[i]].y;
      if (y < x - 1) vanishes = true;
      else segs.emplace_back(l.line(), x, y);
    }
    if (vanishes) continue;
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inversions += w[i] > w[j];
    out.add(MultiSegment(std::move(segs)), inversions % 2 ? -1 : 1);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Pushes both factors of a ladder-basis value into the standard basis.
inline GLPairVirtual ladder_pair_to_standard(const GLPairVirtual& v, const CuspidalLine& line) {
  if (v.basis() != Basis::ladder) throw invalid_input("expected a ladder-basis value");
  GLPairVirtual out;
  for (const auto& [t, coeff] : v) {
    const GLVirtual left = ladder_to_standard(LadderData::from_label(line, t.left));
    const GLVirtual right = ladder_to_standard(LadderData::from_label(line, t.right));
    for (const auto& [ll, lc] : left)
      for (const auto& [rl, rc] : right) out.add(ll, rl, coeff * lc * rc);
  }
  return out;
}

}  // namespace ladder
