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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "ladder/oracle.hpp"
#include "ladder/render.hpp"

namespace ladder::cli {

/// Process exit statuses.
enum Exit : int { ok = 0, invalid = 2, inconsistent = 3 };

namespace detail {

inline bool debug_enabled() {
  const char* v = std::getenv("LADDER_LOG");
  return v && std::string(v) == "debug";
}

inline void debug(const std::string& msg) {
  if (debug_enabled()) std::cerr << "[debug] " << msg << "\n";
}

inline std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

inline void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw invalid_input("cannot write " + out_path);
  out << text;
}

}  // namespace detail

/// Entry point of the `ladder` tool.  `decomposer` is swappable for fault-injection tests.
inline int run(int argc, char** argv, const DecomposeFn& decomposer = decompose) {
  CLI::App app{"Composition series of ladder x| cuspidal induced representations"};
  app.require_subcommand(1);

  std::string path, format = "json", out_path;
  bool unicode = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", path, "Instance file (JSON), or - for stdin")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
    sub->add_flag("--unicode", unicode, "Use Greek letters in text output");
  };

  auto* dec_cmd = app.add_subcommand("decompose", "Semisimplification of pi_L x| sigma_c");
  add_common(dec_cmd);
  auto* mustar_cmd = app.add_subcommand("mustar", "Terms of mu*(pi_L x| sigma_c), one per (c, d)");
  add_common(mustar_cmd);
  auto* mstar_cmd = app.add_subcommand("mstar", "Jacquet module m*(pi_L) of the ladder");
  add_common(mstar_cmd);
  std::string basis = "ladder";
  mstar_cmd->add_option("--basis", basis, "Basis of the output")
      ->check(CLI::IsMember({"ladder", "standard"}));
  auto* reduce_cmd = app.add_subcommand("reduce-test", "Reducibility and length of pi_L x| sigma_c");
  add_common(reduce_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the exhaustive oracle suites");
  int max_t = 3;
  std::string max_exponent = "9/2";
  bool all_reports = false;
  verify_cmd->add_option("--max-t", max_t, "Largest number of ladder segments")->check(CLI::Range(1, 6));
  verify_cmd->add_option("--max-exponent", max_exponent, "Largest exponent b_i, e.g. 9/2");
  verify_cmd->add_option("--out", out_path, "Write JSON-lines reports to this file");
  verify_cmd->add_flag("--all", all_reports, "Report passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::invalid;
  }

  try {
    if (verify_cmd->parsed()) {
      VerifyOptions opts;
      opts.grid.max_t = max_t;
      opts.grid.max_exponent = HalfInt::parse(max_exponent);
      opts.decomposer = decomposer;
      const auto reports = run_verify(opts);
      std::ostringstream lines;
      std::size_t failed = 0;
      std::map<std::string, std::pair<std::size_t, std::size_t>> per_check;
      for (const auto& r : reports) {
        auto& [pass, fail] = per_check[r.check];
        (r.pass ? pass : fail) += 1;
        failed += !r.pass;
        if (all_reports || !r.pass) lines << json(r).dump() << "\n";
      }
      detail::write_output(out_path, lines.str());
      for (const auto& [name, counts] : per_check)
        std::cerr << name << ": " << counts.first << " passed, " << counts.second << " failed\n";
      std::cerr << "verify: " << reports.size() - failed << " passed, " << failed << " failed\n";
      return failed == 0 ? Exit::ok : Exit::inconsistent;
    }

    const Instance inst = parse_instance(detail::read_input(path));
    detail::debug("instance: t = " + std::to_string(inst.t()));
    const Renderer render(unicode);
    std::string text;

    if (dec_cmd->parsed()) {
      const Decomposition d = decomposer(inst);
      text = format == "json" ? dump_canonical(d) : render.decomposition(d, inst.t());
    } else if (mustar_cmd->parsed()) {
      const auto terms = mu_star_induced(inst.ladder(), inst.base());
      if (format == "json") {
        text = dump_canonical(json{{"count", terms.size()}, {"terms", terms}});
      } else {
        for (const auto& t : terms) text += render.mu_star_term(t) + "\n";
        text += "count: " + std::to_string(terms.size()) + "\n";
      }
    } else if (mstar_cmd->parsed()) {
      GLPairVirtual v = mstar_ladder(inst.ladder());
      if (basis == "standard") v = ladder_pair_to_standard(v, inst.ladder().line());
      text = format == "json" ? dump_canonical(v) : render.pair_virtual(v);
    } else if (reduce_cmd->parsed()) {
      const bool reducible = reducibility_test(inst);
      json range = nullptr;
      if (inst.positive_alpha())
        if (auto r = index_range(inst)) range = {r->first, r->second};
      if (format == "json") {
        text = dump_canonical(json{{"reducible", reducible},
                                   {"expected_length", expected_length(inst)},
                                   {"index_range", range}});
      } else {
        text = std::string(reducible ? "reducible" : "irreducible") +
               ", length " + std::to_string(expected_length(inst)) + "\n";
      }
    }
    detail::write_output(out_path, text);
    return Exit::ok;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return Exit::inconsistent;
  } catch (const invalid_input& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return Exit::invalid;
  }
}

}  // namespace ladder::cli
