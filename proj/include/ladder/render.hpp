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

// Human-readable rendering in the usual notation, e.g.
//   L(delta([nu^{-5/2}rho, nu^{-3/2}rho]), delta([nu^{-1/2}rho, nu^{-1/2}rho]); sigma_1)

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ladder/decomposer.hpp"

namespace ladder {

class Renderer {
 public:
  explicit Renderer(bool unicode = false) : unicode_(unicode) {}

  std::string line(const CuspidalLine& l) const {
    std::string name = greek(l.name);
    if (l.dual) name += unicode_ ? "̃" : "~";
    return name;
  }

  std::string point(const CuspidalLine& l, HalfInt x) const {
    return std::string(unicode_ ? "ν" : "nu") + "^{" + x.to_string() + "}" + line(l);
  }

  std::string segment(const Segment& s) const {
    if (s.empty()) return "1";
    return delta() + "([" + point(s.line(), s.x()) + ", " + point(s.line(), s.y()) + "])";
  }

  /// Comma separated segments, or "" for the unit.
  std::string segments(const std::vector<Segment>& segs) const {
    std::string out;
    for (const auto& s : segs) {
      if (!out.empty()) out += ", ";
      out += segment(s);
    }
    return out;
  }

  /// L(delta_1, ..., delta_l), or 1.
  std::string langlands(const MultiSegment& m) const {
    if (m.is_unit()) return "1";
    return "L(" + segments(m.segments()) + ")";
  }

  std::string sp(const SPLabel& label) const {
    return "SP(" + segments(label.listed()) + "; " + greek(label.base.name) + ")";
  }

  /// `tau_name` names the tempered part when it is strongly positive.
  std::string constituent(const ConstituentLabel& c, const std::string& tau_name) const {
    const std::string tau = c.strongly_positive() ? tau_name : greek(c.base().name);
    if (c.is_tempered() && c.strongly_positive()) return sp(*c.strongly_positive());
    if (c.is_tempered()) return tau;
    return "L(" + segments(c.negatives.segments()) + "; " + tau + ")";
  }

  std::string decomposition(const Decomposition& d, int t) const {
    std::ostringstream os;
    os << "case: " << to_string(d.tag) << "\n";
    os << "length: " << d.length() << " (expected " << d.expected_length << ")\n";
    for (const auto& c : d.constituents) {
      switch (c.role) {
        case Role::tempered:
          os << "  " << sigma(t) << " = " << constituent(c.label, "") << "\n";
          break;
        case Role::pi_k:
          os << "  " << (unicode_ ? "π_" : "pi_") << c.k << " = "
             << constituent(c.label, sigma(c.k)) << "\n";
          os << "      where " << sigma(c.k) << " = " << sp(*c.label.strongly_positive()) << "\n";
          break;
        case Role::langlands:
          os << "  " << constituent(c.label, "") << "\n";
          break;
      }
    }
    return os.str();
  }

  std::string mu_star_term(const MuStarTerm& term) const {
    std::ostringstream os;
    os << "(c; d) = (" << tuple(term.c) << "; " << tuple(term.d) << "): "
       << langlands(term.gl_negative) << times() << langlands(term.gl_positive) << tensor()
       << langlands(term.middle) << rtimes() << greek(term.base.name);
    return os.str();
  }

  std::string pair_virtual(const GLPairVirtual& v) const {
    std::ostringstream os;
    os << "basis: " << to_string(v.basis()) << "\n";
    for (const auto& [t, coeff] : v) {
      os << "  " << (coeff == 1 ? std::string() : std::to_string(coeff) + " * ");
      if (v.basis() == Basis::ladder)
        os << langlands(t.left) << tensor() << langlands(t.right);
      else
        os << product(t.left) << tensor() << product(t.right);
      os << "\n";
    }
    return os.str();
  }

 private:
  std::string delta() const { return unicode_ ? "δ" : "delta"; }
  std::string times() const { return unicode_ ? " × " : " x "; }
  std::string tensor() const { return unicode_ ? " ⊗ " : " (x) "; }
  std::string rtimes() const { return unicode_ ? " ⋊ " : " x| "; }
  std::string sigma(int k) const { return (unicode_ ? "σ_" : "sigma_") + std::to_string(k); }

  std::string product(const MultiSegment& m) const {
    if (m.is_unit()) return "1";
    std::string out;
    for (const auto& s : m) {
      if (!out.empty()) out += times();
      out += segment(s);
    }
    return out;
  }

  static std::string tuple(const CutTuple& c) {
    std::string out;
    for (const auto& v : c) out += (out.empty() ? "" : ", ") + v.to_string();
    return out;
  }

  std::string greek(const std::string& name) const {
    if (!unicode_) return name;
    if (name == "rho") return "ρ";
    if (name.rfind("sigma", 0) == 0) return "σ" + name.substr(5);
    return name;
  }

  bool unicode_;
};

}  // namespace ladder
