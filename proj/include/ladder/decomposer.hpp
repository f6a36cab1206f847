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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ladder/classical.hpp"

namespace ladder {

/*
 * pi_L x| sigma_c with pi_L = L(delta([a_1, b_1]), ..., delta([a_t, b_t])),
 * 1/2 <= a_1 < ... < a_t, b_1 < ... < b_t, a_i <= b_i.
 *
 * A selfdual rho always comes with its reducibility point alpha >= 0;
 * a non-selfdual rho never has one.
 */
class Instance {
 public:
  Instance(LadderData ladder, ClassicalBase base) : ladder_(std::move(ladder)), base_(std::move(base)) {
    if (ladder_.size() == 0) throw invalid_input("instance needs at least one segment");
    if (ladder_.pairs().front().x < HalfInt::from_twice(1))
      throw invalid_input("instance requires a_1 >= 1/2");
    const bool selfdual = ladder_.line().selfdual;
    if (base_.alpha && !selfdual)
      throw invalid_input("alpha given but rho is not selfdual");
    if (!base_.alpha && selfdual) throw invalid_input("selfdual rho requires alpha");
    if (base_.alpha && *base_.alpha < HalfInt{}) throw invalid_input("alpha must be >= 0");
  }

  const LadderData& ladder() const noexcept { return ladder_; }
  const ClassicalBase& base() const noexcept { return base_; }
  int t() const noexcept { return static_cast<int>(ladder_.size()); }
  /// 1-based accessors matching a_i, b_i.
  HalfInt a(int i) const { return ladder_.pairs().at(static_cast<std::size_t>(i - 1)).x; }
  HalfInt b(int i) const { return ladder_.pairs().at(static_cast<std::size_t>(i - 1)).y; }
  Segment segment(int i) const { return ladder_.segment(static_cast<std::size_t>(i - 1)); }

  /// alpha, when present and strictly positive.
  std::optional<HalfInt> positive_alpha() const {
    if (base_.alpha && HalfInt{} < *base_.alpha) return base_.alpha;
    return std::nullopt;
  }

 private:
  LadderData ladder_;
  ClassicalBase base_;
};

enum class CaseTag { irreducible, case_i, case_ii };

inline const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::irreducible: return "irreducible";
    case CaseTag::case_i: return "case_i";
    case CaseTag::case_ii: return "case_ii";
  }
  return "?";
}

/// How a constituent arose.
enum class Role {
  tempered,  // the strongly positive subrepresentation sigma_t
  pi_k,      // pi_k for some k
  langlands  // L(delta([-b_t,-a_t]), ..., delta([-b_1,-a_1]); sigma_c)
};

inline const char* to_string(Role r) {
  switch (r) {
    case Role::tempered: return "tempered";
    case Role::pi_k: return "pi_k";
    case Role::langlands: return "langlands";
  }
  return "?";
}

struct Constituent {
  Role role;
  int k = 0;  // set for Role::pi_k
  ConstituentLabel label;
  int multiplicity = 1;
};

struct Decomposition {
  CaseTag tag;
  std::vector<Constituent> constituents;
  int expected_length;

  int length() const {
    int n = 0;
    for (const auto& c : constituents) n += c.multiplicity;
    return n;
  }
};

inline bool reducibility_test(const Instance& inst) {
  const auto alpha = inst.positive_alpha();
  if (!alpha) return false;
  for (int i = 1; i <= inst.t(); ++i)
    if (lattice_member(*alpha, inst.segment(i))) return true;
  return false;
}

/// m + 1, m = number of i with alpha in {a_i, a_i + 1, ..., b_i}.
inline int expected_length(const Instance& inst) {
  const auto alpha = inst.positive_alpha();
  int m = 0;
  if (alpha)
    for (int i = 1; i <= inst.t(); ++i) m += lattice_member(*alpha, inst.segment(i));
  return m + 1;
}

/// a_i = alpha - t + i for every i.
inline bool starts_at_alpha_staircase(const Instance& inst) {
  const auto alpha = inst.positive_alpha();
  if (!alpha) return false;
  for (int i = 1; i <= inst.t(); ++i)
    if (inst.a(i) != *alpha - inst.t() + i) return false;
  return true;
}

/// The unique tempered constituent, when one exists.
inline std::optional<SPLabel> tempered_subquotient(const Instance& inst) {
  if (!starts_at_alpha_staircase(inst)) return std::nullopt;
  std::vector<Segment> listed;
  for (int i = 1; i <= inst.t(); ++i) listed.push_back(inst.segment(i));
  return sp_normalize(listed, inst.base());
}

/// (i_m, i_M): the minimal and maximal i with alpha in [a_i, b_i].
inline std::optional<std::pair<int, int>> index_range(const Instance& inst) {
  if (!inst.base().alpha) throw invalid_input("index range needs a reducibility point");
  const auto alpha = inst.positive_alpha();
  if (!alpha) return std::nullopt;
  std::optional<std::pair<int, int>> out;
  for (int i = 1; i <= inst.t(); ++i) {
    if (!lattice_member(*alpha, inst.segment(i))) continue;
    if (!out) out.emplace(i, i);
    out->second = i;
  }
  return out;
}

namespace detail {
inline void require_in_range(const Instance& inst, int k) {
  const auto range = index_range(inst);
  if (!range || k < range->first || k > range->second)
    throw invalid_input("index k = " + std::to_string(k) + " outside [i_m, i_M]");
}
}  // namespace detail

/// Minimal k_m in {1, ..., t} with alpha - k + k_m <= b_{k_m}.
inline int index_km(const Instance& inst, int k) {
  detail::require_in_range(inst, k);
  const HalfInt alpha = *inst.base().alpha;
  for (int i = 1; i <= inst.t(); ++i)
    if (alpha - k + i <= inst.b(i)) return i;
  throw consistency_error("k_m does not exist although k is in [i_m, i_M]");
}

/// sigma_k: strongly positive with segments [alpha - k + i, b_i], i = k_m..k.
inline SPLabel build_sigma_k(const Instance& inst, int k) {
  const int km = index_km(inst, k);
  const HalfInt alpha = *inst.base().alpha;
  std::vector<Segment> listed;
  for (int i = km; i <= k; ++i) listed.emplace_back(inst.ladder().line(), alpha - k + i, inst.b(i));
  return sp_normalize(listed, inst.base());
}

/*
 * pi_k = L(delta([-b_t, -a_t]), ..., delta([-b_{k+1}, -a_{k+1}]),
 *          delta([-alpha+1, -a_k]), ..., delta([-alpha+k-k_m+1, -a_{k_m}]),
 *          delta([-b_{k_m-1}, -a_{k_m-1}]), ..., delta([-b_1, -a_1]); sigma_k)
 *
 * Empty when k = t and a_i = alpha - t + i for all i: then every middle
 * segment degenerates and pi_t would be sigma_t itself.
 */
inline std::optional<ConstituentLabel> build_pi_k(const Instance& inst, int k) {
  const int km = index_km(inst, k);
  if (k == inst.t() && starts_at_alpha_staircase(inst)) return std::nullopt;
  const HalfInt alpha = *inst.base().alpha;
  const CuspidalLine dual = inst.ladder().line().contragredient();
  std::vector<Segment> negs;
  for (int i = 1; i <= inst.t(); ++i) {
    if (i >= km && i <= k)
      negs.emplace_back(dual, -alpha + k - i + 1, -inst.a(i));
    else
      negs.emplace_back(dual, -inst.b(i), -inst.a(i));
  }
  MultiSegment negatives(std::move(negs));
  for (const auto& s : negatives)
    if (!(e_value(s) < HalfInt{}))
      throw consistency_error("pi_" + std::to_string(k) + " has a segment with e >= 0");
  return ConstituentLabel(std::move(negatives), build_sigma_k(inst, k));
}

/// L(delta([-b_t, -a_t]), ..., delta([-b_1, -a_1]); sigma_c).
inline ConstituentLabel langlands_constituent(const Instance& inst) {
  const LadderData dual = ladder_contragredient(inst.ladder());
  return ConstituentLabel(dual.label(), inst.base());
}

/*
 * Semisimplification of pi_L x| sigma_c.
 *
 * Irreducible unless alpha > 0 lies on some [a_i, b_i].  Otherwise:
 *   (i)  a_i = alpha - t + i for all i:  sigma_t + L(...; sigma_c) + sum_{k in [i_m, t-1]} pi_k
 *   (ii) else:                           L(...; sigma_c) + sum_{k in [i_m, i_M]} pi_k
 * Constituents are ordered tempered first, then by k, then L(...; sigma_c).
 */
inline Decomposition decompose(const Instance& inst) {
  Decomposition out{CaseTag::irreducible, {}, expected_length(inst)};
  if (reducibility_test(inst)) {
    const auto [im, iM] = *index_range(inst);
    int last = iM;
    if (auto sp = tempered_subquotient(inst)) {
      out.tag = CaseTag::case_i;
      out.constituents.push_back({Role::tempered, 0, ConstituentLabel(MultiSegment{}, *sp)});
      last = inst.t() - 1;
    } else {
      out.tag = CaseTag::case_ii;
    }
    for (int k = im; k <= last; ++k) {
      auto pk = build_pi_k(inst, k);
      if (!pk) throw consistency_error("pi_" + std::to_string(k) + " undefined inside the sum");
      out.constituents.push_back({Role::pi_k, k, std::move(*pk)});
    }
  }
  out.constituents.push_back({Role::langlands, 0, langlands_constituent(inst)});

  if (out.length() != out.expected_length)
    throw consistency_error("decomposition has length " + std::to_string(out.length()) +
                            ", expected " + std::to_string(out.expected_length));
  for (std::size_t i = 0; i < out.constituents.size(); ++i)
    for (std::size_t j = i + 1; j < out.constituents.size(); ++j)
      if (out.constituents[i].label == out.constituents[j].label)
        throw consistency_error("constituent repeated in the decomposition");
  return out;
}

/// Cuspidal support of a constituent: the GL points plus the classical base.
struct ConstituentSupport {
  std::vector<SupportPoint> points;  // sorted
  std::string base;

  friend bool operator==(const ConstituentSupport&, const ConstituentSupport&) = default;
};

inline ConstituentSupport constituent_support(const ConstituentLabel& c) {
  std::vector<Segment> segs(c.negatives.begin(), c.negatives.end());
  if (const auto* sp = c.strongly_positive()) {
    auto listed = sp->listed();
    segs.insert(segs.end(), listed.begin(), listed.end());
  }
  return {support(MultiSegment(std::move(segs))), c.base().name};
}

}  // namespace ladder
