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

// JSON encodings.  Object keys are emitted in sorted order (nlohmann's
// default std::map storage) and every collection is canonically sorted,
// so dumps are byte-stable.

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ladder/decomposer.hpp"

namespace ladder {

using json = nlohmann::json;

inline void to_json(json& j, const HalfInt& h) { j = json{{"twice", h.twice()}}; }

inline void to_json(json& j, const Segment& s) {
  j = json{{"line", s.line().name}, {"dual", s.line().dual}, {"x", s.x()}, {"y", s.y()}};
}

inline void to_json(json& j, const MultiSegment& m) {
  j = json::array();
  for (const auto& s : m) j.push_back(s);
}

inline void to_json(json& j, const LadderData& l) {
  json pairs = json::array();
  for (const auto& p : l.pairs()) pairs.push_back({{"x", p.x}, {"y", p.y}});
  j = json{{"line", l.line().name},
           {"dual", l.line().dual},
           {"selfdual", l.line().selfdual},
           {"pairs", pairs}};
}

inline void to_json(json& j, const GLVirtual& v) {
  j = json::array();
  for (const auto& [label, coeff] : v) j.push_back({{"label", label}, {"coeff", coeff}});
}

inline void to_json(json& j, const GLPairVirtual& v) {
  json terms = json::array();
  for (const auto& [t, coeff] : v)
    terms.push_back({{"label", {{"left", t.left}, {"right", t.right}}}, {"coeff", coeff}});
  j = json{{"basis", to_string(v.basis())}, {"terms", terms}};
}

inline void to_json(json& j, const ClassicalBase& b) {
  j = json{{"name", b.name}, {"alpha", b.alpha ? json(*b.alpha) : json(nullptr)}};
}

inline void to_json(json& j, const SPLabel& sp) {
  json padded = json::array();
  for (const auto& s : sp.padded) padded.push_back(s);
  j = json{{"base", sp.base}, {"padded", padded}};
}

inline void to_json(json& j, const ConstituentLabel& c) {
  json padded = nullptr;
  if (const auto* sp = c.strongly_positive()) {
    padded = json::array();
    for (const auto& s : sp->padded) padded.push_back(s);
  }
  j = json{{"base", c.base()}, {"negatives", c.negatives}, {"strongly_positive", padded}};
}

inline void to_json(json& j, const Constituent& c) {
  j = json{{"role", to_string(c.role)}, {"multiplicity", c.multiplicity}, {"label", c.label}};
  if (c.role == Role::pi_k) j["k"] = c.k;
}

inline void to_json(json& j, const Decomposition& d) {
  j = json{{"case", to_string(d.tag)},
           {"constituents", d.constituents},
           {"length", d.length()},
           {"expected_length", d.expected_length}};
}

inline void to_json(json& j, const MuStarTerm& t) {
  j = json{{"c", t.c},           {"d", t.d},           {"gl_negative", t.gl_negative},
           {"gl_positive", t.gl_positive}, {"middle", t.middle}, {"base", t.base}};
}

/// The instance-file form.
inline void to_json(json& j, const Instance& inst) {
  json segs = json::array();
  for (int i = 1; i <= inst.t(); ++i) segs.push_back({{"a", inst.a(i)}, {"b", inst.b(i)}});
  j = json{{"rho", {{"name", inst.ladder().line().name}, {"selfdual", inst.ladder().line().selfdual}}},
           {"sigma", {{"name", inst.base().name}}},
           {"alpha", inst.base().alpha ? json(*inst.base().alpha) : json(nullptr)},
           {"segments", segs}};
}

/// Canonical text form: two-space indent, trailing newline.
inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw invalid_input(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw invalid_input(path + "." + key + ": missing");
  return *it;
}

inline HalfInt parse_half_int(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("twice") || !j["twice"].is_number_integer())
    throw invalid_input(path + ": expected {\"twice\": <integer>}");
  return HalfInt::from_twice(j["twice"].get<std::int64_t>());
}

inline std::string parse_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw invalid_input(path + ": expected a string");
  return j.get<std::string>();
}

}  // namespace detail

/*
 * Reads an instance file:
 *
 *   {"rho": {"name": "rho", "selfdual": true},
 *    "sigma": {"name": "sigma_c"},
 *    "alpha": {"twice": 3} | null | absent,
 *    "segments": [{"a": {"twice": 1}, "b": {"twice": 3}}, ...]}
 *
 * Diagnostics name the offending field.
 */
inline Instance parse_instance(const json& j) {
  using detail::field;
  const json& rho = field(j, "rho", "$");
  const std::string rho_name = detail::parse_string(field(rho, "name", "$.rho"), "$.rho.name");
  const json& sd = field(rho, "selfdual", "$.rho");
  if (!sd.is_boolean()) throw invalid_input("$.rho.selfdual: expected a boolean");
  const json& sigma = field(j, "sigma", "$");
  const std::string sigma_name =
      detail::parse_string(field(sigma, "name", "$.sigma"), "$.sigma.name");

  std::optional<HalfInt> alpha;
  if (j.contains("alpha") && !j["alpha"].is_null()) {
    alpha = detail::parse_half_int(j["alpha"], "$.alpha");
    if (!sd.get<bool>()) throw invalid_input("$.alpha: present but $.rho.selfdual is false");
    if (*alpha < HalfInt{}) throw invalid_input("$.alpha: must be >= 0");
  } else if (sd.get<bool>()) {
    throw invalid_input("$.alpha: required when $.rho.selfdual is true");
  }

  const json& segs = field(j, "segments", "$");
  if (!segs.is_array() || segs.empty())
    throw invalid_input("$.segments: expected a nonempty array");
  std::vector<SegmentBounds> pairs;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string path = "$.segments[" + std::to_string(i) + "]";
    pairs.push_back({detail::parse_half_int(field(segs[i], "a", path), path + ".a"),
                     detail::parse_half_int(field(segs[i], "b", path), path + ".b")});
  }

  CuspidalLine line{rho_name, sd.get<bool>(), false};
  try {
    return Instance(LadderData(line, std::move(pairs)), ClassicalBase{sigma_name, alpha});
  } catch (const invalid_input& e) {
    throw invalid_input(std::string("$.segments: ") + e.what());
  }
}

inline Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("malformed JSON: ") + e.what());
  }
  return parse_instance(j);
}

}  // namespace ladder
