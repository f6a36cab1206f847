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
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "ladder/multisegment.hpp"

namespace ladder {

/// Sparse integer combination of labels.  Zero coefficients are never stored.
template <class Label>
class Virtual {
 public:
  using map_type = std::map<Label, std::int64_t>;

  Virtual() = default;
  explicit Virtual(const Label& label, std::int64_t coeff = 1) { add(label, coeff); }

  void add(const Label& label, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  std::int64_t coefficient(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
  }

  const map_type& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// Sum of all coefficients.
  std::int64_t mass() const noexcept {
    std::int64_t m = 0;
    for (const auto& [_, c] : terms_) m += c;
    return m;
  }

  Virtual& operator+=(const Virtual& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  Virtual& operator-=(const Virtual& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  friend Virtual operator+(Virtual a, const Virtual& b) { return a += b; }
  friend Virtual operator-(Virtual a, const Virtual& b) { return a -= b; }
  friend Virtual operator*(std::int64_t k, const Virtual& v) {
    Virtual out;
    for (const auto& [l, c] : v.terms_) out.add(l, k * c);
    return out;
  }

  friend bool operator==(const Virtual&, const Virtual&) = default;

 private:
  map_type terms_;
};

/// An element of R(GL) in the standard (multisegment) basis.
using GLVirtual = Virtual<MultiSegment>;

inline GLVirtual operator*(const GLVirtual& a, const GLVirtual& b) {
  GLVirtual out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) out.add(la * lb, ca * cb);
  return out;
}

/// left (x) right.
struct TensorLabel {
  MultiSegment left;
  MultiSegment right;

  friend bool operator==(const TensorLabel&, const TensorLabel&) = default;
  friend std::strong_ordering operator<=>(const TensorLabel& a, const TensorLabel& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.right <=> b.right;
  }
};

/// How the labels of a GLPairVirtual are to be read.
enum class Basis {
  standard,  // products of delta's
  ladder,    // irreducible ladder representations L(delta_1, ..., delta_k)
};

inline const char* to_string(Basis b) { return b == Basis::standard ? "standard" : "ladder"; }

/*
 * An element of R(GL) (x) R(GL).
 *
 * Every value carries the basis its labels live in; combining values
 * from different bases is rejected, so the two output forms never mix.
 */
class GLPairVirtual {
 public:
  explicit GLPairVirtual(Basis basis = Basis::standard) : basis_(basis) {}

  Basis basis() const noexcept { return basis_; }
  const Virtual<TensorLabel>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }
  std::int64_t mass() const noexcept { return terms_.mass(); }
  std::int64_t coefficient(const MultiSegment& l, const MultiSegment& r) const {
    return terms_.coefficient({l, r});
  }

  void add(const MultiSegment& left, const MultiSegment& right, std::int64_t coeff) {
    terms_.add({left, right}, coeff);
  }

  GLPairVirtual& operator+=(const GLPairVirtual& o) {
    require_same_basis(o);
    terms_ += o.terms_;
    return *this;
  }
  GLPairVirtual& operator-=(const GLPairVirtual& o) {
    require_same_basis(o);
    terms_ -= o.terms_;
    return *this;
  }
  friend GLPairVirtual operator+(GLPairVirtual a, const GLPairVirtual& b) { return a += b; }
  friend GLPairVirtual operator-(GLPairVirtual a, const GLPairVirtual& b) { return a -= b; }

  /// (a (x) b)(c (x) d) = ac (x) bd; defined in the standard basis only.
  friend GLPairVirtual operator*(const GLPairVirtual& a, const GLPairVirtual& b) {
    if (a.basis_ != Basis::standard || b.basis_ != Basis::standard)
      throw invalid_input("tensor product is only defined in the standard basis");
    GLPairVirtual out;
    for (const auto& [la, ca] : a)
      for (const auto& [lb, cb] : b) out.add(la.left * lb.left, la.right * lb.right, ca * cb);
    return out;
  }

  friend bool operator==(const GLPairVirtual&, const GLPairVirtual&) = default;

  /// 1 (x) 1.
  static GLPairVirtual unit() {
    GLPairVirtual v;
    v.add({}, {}, 1);
    return v;
  }

 private:
  void require_same_basis(const GLPairVirtual& o) const {
    if (basis_ != o.basis_)
      throw invalid_input(std::string("cannot combine ") + to_string(basis_) + " and " +
                          to_string(o.basis_) + " basis values");
  }

  Basis basis_;
  Virtual<TensorLabel> terms_;
};

}  // namespace ladder
