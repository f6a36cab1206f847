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
#include <compare>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "ladder/segment.hpp"

namespace ladder {

/*
 * A finite multiset of nonempty segments in canonical order.
 *
 * Used both as a standard-basis label delta_1 x ... x delta_l of R(GL)
 * and as Langlands data L(delta_1, ..., delta_l); the canonical order
 * (ascending e, then x, then y) is exactly the Langlands ordering.
 * Empty segments are dropped on construction, so the empty multiset
 * is the unit 1.
 */
class MultiSegment {
 public:
  MultiSegment() = default;
  MultiSegment(std::initializer_list<Segment> segs) : MultiSegment(std::vector<Segment>(segs)) {}
  explicit MultiSegment(std::vector<Segment> segs) {
    std::erase_if(segs, [](const Segment& s) { return s.empty(); });
    std::sort(segs.begin(), segs.end());
    segs_ = std::move(segs);
  }

  const std::vector<Segment>& segments() const noexcept { return segs_; }
  bool is_unit() const noexcept { return segs_.empty(); }
  std::size_t size() const noexcept { return segs_.size(); }
  auto begin() const noexcept { return segs_.begin(); }
  auto end() const noexcept { return segs_.end(); }

  /// Product in the standard basis is concatenation.
  friend MultiSegment operator*(const MultiSegment& a, const MultiSegment& b) {
    MultiSegment out;
    out.segs_.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.segs_));
    return out;
  }

  friend bool operator==(const MultiSegment&, const MultiSegment&) = default;
  friend std::strong_ordering operator<=>(const MultiSegment& a, const MultiSegment& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::vector<Segment> segs_;
};

inline MultiSegment contragredient(const MultiSegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m) out.push_back(contragredient_segment(s));
  return MultiSegment(std::move(out));
}

/// Multiset union of the segment supports, sorted.
inline std::vector<SupportPoint> support(const MultiSegment& m) {
  std::vector<SupportPoint> out;
  for (const auto& s : m) {
    auto part = segment_support(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ladder
