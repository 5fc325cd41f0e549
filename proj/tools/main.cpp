/*
 * Copyright 2026 The lattile Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Everything goes through the public C interface;
// exit codes: 0 success, 1 negative verdict (not a tiling / not Cartesian /
// unsupported), 2 file or parse problem, 3 missing witness (internal),
// 4 budget exhausted or partial results, 5 internal error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lattile/lattile.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoWitness = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

int exit_code_for(lattile_status s) {
  switch (s) {
    case LATTILE_OK:
      return 0;
    case LATTILE_ERR_PARSE:
    case LATTILE_ERR_ZERO_MODULUS:
    case LATTILE_ERR_DIMENSION:
    case LATTILE_ERR_SINGULAR:
    case LATTILE_ERR_IO:
      return kExitParse;
    case LATTILE_ERR_NOT_TILING:
    case LATTILE_ERR_NOT_CARTESIAN:
    case LATTILE_ERR_BAD_DIMENSION:
    case LATTILE_ERR_BAD_PERIOD:
    case LATTILE_ERR_UNSUPPORTED_DIMENSION:
      return kExitFalse;
    case LATTILE_ERR_WITNESS_NOT_FOUND:
      return kExitNoWitness;
    case LATTILE_ERR_TORUS_TOO_LARGE:
    case LATTILE_ERR_BUDGET_EXCEEDED:
      return kExitBudget;
    default:
      return kExitInternal;
  }
}

int report_failure(lattile_status s) {
  std::cerr << "error: " << lattile_last_error() << "\n";
  return exit_code_for(s);
}

struct TilingDeleter {
  void operator()(lattile_tiling* t) const { lattile_tiling_free(t); }
};
struct ReportDeleter {
  void operator()(lattile_report* r) const { lattile_report_free(r); }
};
struct SearchDeleter {
  void operator()(lattile_search_result* r) const { lattile_search_result_free(r); }
};
using TilingPtr = std::unique_ptr<lattile_tiling, TilingDeleter>;
using ReportPtr = std::unique_ptr<lattile_report, ReportDeleter>;
using SearchPtr = std::unique_ptr<lattile_search_result, SearchDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lattile_string_free(s);
  return out;
}

// nullptr on failure with the exit code stored in *code.
TilingPtr load_tiling(const std::string& path, int* code) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    *code = kExitParse;
    return nullptr;
  }
  std::ostringstream text;
  text << in.rdbuf();
  lattile_tiling* t = nullptr;
  std::string contents = text.str();
  if (lattile_status s = lattile_tiling_parse(contents.c_str(), &t);
      s != LATTILE_OK) {
    *code = report_failure(s);
    return nullptr;
  }
  return TilingPtr(t);
}

void print_translate_pairs(const lattile_tiling* t) {
  size_t pairs = lattile_tiling_translate_pair_count(t);
  if (pairs == 0) {
    std::cout << "no translate pairs\n";
    return;
  }
  for (size_t i = 0; i < pairs; ++i) {
    size_t a = 0, b = 0;
    lattile_tiling_translate_pair(t, i, &a, &b);
    std::cout << "translate pair: tiles " << a << " and " << b << "\n";
  }
}

int print_report(const char* label, const lattile_report* r) {
  if (lattile_report_is_tiling(r)) {
    std::cout << label << ": tiling\n";
    return 0;
  }
  std::cout << label << ": not a tiling\n";
  if (lattile_report_has_gap(r)) {
    char* gap = nullptr;
    if (lattile_report_gap(r, &gap) == LATTILE_OK)
      std::cout << "  gap at " << take_string(gap) << "\n";
  }
  if (lattile_report_has_overlap(r)) {
    char* point = nullptr;
    size_t a = 0, b = 0;
    if (lattile_report_overlap(r, &point, &a, &b) == LATTILE_OK)
      std::cout << "  overlap at " << take_string(point) << " between tiles "
                << a << " and " << b << "\n";
  }
  return 1;
}

int run_verify(const std::string& file, const std::string& method,
               int64_t torus_budget) {
  int code = 0;
  TilingPtr t = load_tiling(file, &code);
  if (!t) return code;

  std::cout << "tiles: " << lattile_tiling_tile_count(t.get()) << "\n";
  char* period = nullptr;
  if (lattile_status s = lattile_tiling_period(t.get(), &period); s != LATTILE_OK)
    return report_failure(s);
  std::cout << "period: " << take_string(period) << "\n";

  ReportPtr torus, fourier;
  if (method == "torus" || method == "both") {
    lattile_report* r = nullptr;
    if (lattile_status s = lattile_verify_torus(t.get(), torus_budget, &r);
        s != LATTILE_OK)
      return report_failure(s);
    torus.reset(r);
  }
  if (method == "fourier" || method == "both") {
    lattile_report* r = nullptr;
    if (lattile_status s = lattile_verify_fourier(t.get(), &r); s != LATTILE_OK)
      return report_failure(s);
    fourier.reset(r);
  }

  const lattile_report* primary = torus ? torus.get() : fourier.get();
  char* density = nullptr;
  if (lattile_status s = lattile_report_density(primary, &density); s != LATTILE_OK)
    return report_failure(s);
  std::cout << "density = " << take_string(density) << "\n";

  int verdict = 0;
  if (torus) verdict = print_report("torus", torus.get());
  if (fourier) verdict = print_report("fourier", fourier.get());
  print_translate_pairs(t.get());

  if (torus && fourier &&
      lattile_report_is_tiling(torus.get()) != lattile_report_is_tiling(fourier.get())) {
    std::cerr << "internal error: verifiers disagree\n";
    return kExitInternal;
  }
  if (torus) verdict = lattile_report_is_tiling(torus.get()) ? 0 : 1;
  std::cout << "verdict: " << (verdict == 0 ? "tiling" : "not a tiling") << "\n";
  return verdict;
}

int run_witness(const std::string& file, int64_t torus_budget) {
  int code = 0;
  TilingPtr t = load_tiling(file, &code);
  if (!t) return code;

  size_t max_tile = 0, partner = 0;
  char* probe = nullptr;
  if (lattile_status s =
          lattile_witness(t.get(), torus_budget, &max_tile, &partner, &probe);
      s != LATTILE_OK)
    return report_failure(s);

  char* a = nullptr;
  char* b = nullptr;
  char* lat = nullptr;
  lattile_tiling_tile_text(t.get(), max_tile, &a);
  lattile_tiling_tile_text(t.get(), partner, &b);
  lattile_tiling_tile_lattice_text(t.get(), max_tile, &lat);
  std::cout << "max-index tile " << max_tile << ": " << take_string(a) << "\n";
  std::cout << "partner tile " << partner << ": " << take_string(b) << "\n";
  std::cout << "shared lattice: " << take_string(lat) << "\n";
  std::cout << "probe: " << take_string(probe) << "\n";
  return 0;
}

int run_search(const lattile_search_config& cfg, const std::string& out_dir) {
  lattile_search_result* raw = nullptr;
  if (lattile_status s = lattile_search(&cfg, &raw); s != LATTILE_OK)
    return report_failure(s);
  SearchPtr result(raw);

  size_t count = lattile_search_solution_count(result.get());
  std::cout << "solutions: " << count << "\n";
  std::cout << "nodes explored: " << lattile_search_nodes(result.get()) << "\n";
  bool exhausted = lattile_search_exhausted(result.get()) != 0;
  std::cout << "exhausted: " << (exhausted ? "yes" : "no") << "\n";

  if (count > 0) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create " << out_dir << ": " << ec.message()
                << "\n";
      return kExitParse;
    }
  }
  for (size_t i = 0; i < count; ++i) {
    lattile_tiling* sol = nullptr;
    if (lattile_status s = lattile_search_solution(result.get(), i, &sol);
        s != LATTILE_OK)
      return report_failure(s);
    TilingPtr guard(sol);
    char* text = nullptr;
    if (lattile_status s = lattile_tiling_render_text(sol, &text); s != LATTILE_OK)
      return report_failure(s);
    char name[48];
    std::snprintf(name, sizeof name, "solution-%03zu.tiling", i + 1);
    std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << take_string(text);
    if (!out) {
      std::cerr << "error: cannot write " << path.string() << "\n";
      return kExitParse;
    }
    std::cout << "wrote " << path.string() << "\n";
  }
  return exhausted ? 0 : kExitBudget;
}

int run_render(const std::string& file, const std::string& out_path,
               const std::vector<int64_t>& window, const std::string& slice,
               int scale) {
  int code = 0;
  TilingPtr t = load_tiling(file, &code);
  if (!t) return code;

  lattile_render_options opt{};
  opt.x0 = window[0];
  opt.x1 = window[1];
  opt.y0 = window[2];
  opt.y1 = window[3];
  opt.scale = scale;
  if (!slice.empty()) {
    // "x=3" / "y=-1" / "z=0"
    if (slice.size() < 3 || slice[1] != '=' ||
        (slice[0] != 'x' && slice[0] != 'y' && slice[0] != 'z')) {
      std::cerr << "error: --slice expects x=<int>, y=<int> or z=<int>\n";
      return kExitParse;
    }
    opt.has_slice = 1;
    opt.slice_axis = slice[0] - 'x';
    try {
      opt.slice_value = std::stoll(slice.substr(2));
    } catch (const std::exception&) {
      std::cerr << "error: bad slice value in '" << slice << "'\n";
      return kExitParse;
    }
  }

  std::string payload;
  if (out_path.size() >= 4 && out_path.rfind(".ppm") == out_path.size() - 4) {
    unsigned char* bytes = nullptr;
    size_t len = 0;
    if (lattile_status s = lattile_render_ppm(t.get(), &opt, &bytes, &len);
        s != LATTILE_OK)
      return report_failure(s);
    payload.assign(reinterpret_cast<char*>(bytes), len);
    lattile_bytes_free(bytes);
  } else if (out_path.size() >= 4 &&
             out_path.rfind(".svg") == out_path.size() - 4) {
    char* text = nullptr;
    if (lattile_status s = lattile_render_svg(t.get(), &opt, &text);
        s != LATTILE_OK)
      return report_failure(s);
    payload = take_string(text);
  } else {
    std::cerr << "error: output must end in .ppm or .svg\n";
    return kExitParse;
  }

  std::ofstream out(out_path, std::ios::binary);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitParse;
  }
  std::cout << "wrote " << out_path << " (" << (opt.x1 - opt.x0) * scale << "x"
            << (opt.y1 - opt.y0) * scale << ")\n";
  return 0;
}

int run_example(int dim) {
  lattile_tiling* t = nullptr;
  if (lattile_status s = lattile_tiling_counterexample(dim, &t); s != LATTILE_OK)
    return report_failure(s);
  TilingPtr guard(t);
  char* text = nullptr;
  if (lattile_status s = lattile_tiling_render_text(t, &text); s != LATTILE_OK)
    return report_failure(s);
  std::cout << take_string(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of coset tilings of Z^d"};
  app.require_subcommand(1);

  std::string file, method = "both", out_dir = "solutions", out_path, slice;
  std::vector<int64_t> window;
  int scale = 8;
  int dim = 3;
  int64_t torus_budget = 0;  // 0 = library default

  lattile_search_config cfg{};
  cfg.dim = 1;
  cfg.period = 2;
  cfg.max_index = 2;

  auto* verify = app.add_subcommand("verify", "check whether a coset family tiles Z^d");
  verify->add_option("file", file, "tiling document")->required();
  verify->add_option("--method", method, "torus, fourier or both")
      ->check(CLI::IsMember({"torus", "fourier", "both"}))
      ->capture_default_str();
  verify->add_option("--torus-budget", torus_budget, "max torus cells")
      ->envname("LATTILE_TORUS_BUDGET");

  auto* witness = app.add_subcommand(
      "witness", "extract a translate pair from a Cartesian tiling");
  witness->add_option("file", file, "tiling document")->required();
  witness->add_option("--torus-budget", torus_budget, "max torus cells")
      ->envname("LATTILE_TORUS_BUDGET");

  auto* search = app.add_subcommand(
      "search", "enumerate tilings of a torus by exact cover");
  search->add_option("--dim", cfg.dim, "dimension")->required();
  search->add_option("--period", cfg.period, "torus period")->required();
  search->add_option("--max-index", cfg.max_index, "max lattice index")->required();
  search->add_option("--max-tiles", cfg.max_tiles, "tile count cap (0 = none)");
  search->add_flag("--distinct", cfg.require_distinct_lattices,
                   "require pairwise-distinct lattices");
  search->add_flag("--symmetry", cfg.symmetry_reduction,
                   "deduplicate solutions under coordinate symmetry");
  search->add_option("--budget", cfg.node_budget, "node budget")
      ->envname("LATTILE_NODE_BUDGET");
  search->add_option("--candidate-budget", cfg.candidate_budget,
                     "candidate coset cap")
      ->envname("LATTILE_CANDIDATE_BUDGET");
  search->add_option("--torus-budget", cfg.torus_budget, "max torus cells")
      ->envname("LATTILE_TORUS_BUDGET");
  search->add_option("--out", out_dir, "directory for solution files")
      ->capture_default_str();

  auto* render = app.add_subcommand("render", "draw a 2-D window of a tiling");
  render->add_option("file", file, "tiling document")->required();
  render->add_option("--out", out_path, "image path (.ppm or .svg)")->required();
  render
      ->add_option("--window", window,
                   "x0,x1,y0,y1 half-open integer bounds")
      ->delimiter(',')
      ->expected(4)
      ->required();
  render->add_option("--slice", slice, "fix one coordinate, e.g. z=0");
  render->add_option("--scale", scale, "pixels per lattice point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* example = app.add_subcommand(
      "example", "print the built-in distinct-lattice tiling");
  example->add_option("--dim", dim, "dimension (>= 3)")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (verify->parsed()) return run_verify(file, method, torus_budget);
  if (witness->parsed()) return run_witness(file, torus_budget);
  if (search->parsed()) return run_search(cfg, out_dir);
  if (render->parsed()) return run_render(file, out_path, window, slice, scale);
  if (example->parsed()) return run_example(dim);
  return kExitInternal;
}
