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

// Exercises the shared library strictly through its C header: no internal
// headers, no C++ symbols from the core.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lattile/lattile.h>

#include <string>

namespace {

struct TilingHandle {
  lattile_tiling* p = nullptr;
  ~TilingHandle() { lattile_tiling_free(p); }
};

struct ReportHandle {
  lattile_report* p = nullptr;
  ~ReportHandle() { lattile_report_free(p); }
};

struct ResultHandle {
  lattile_search_result* p = nullptr;
  ~ResultHandle() { lattile_search_result_free(p); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  lattile_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("parse and render round-trip") {
  TilingHandle t;
  REQUIRE_EQ(lattile_tiling_parse("(0) + 2Z\n(1) + 2Z\n", &t.p), LATTILE_OK);
  CHECK_EQ(lattile_tiling_dim(t.p), 1);
  CHECK_EQ(lattile_tiling_tile_count(t.p), 2);
  CHECK_EQ(lattile_tiling_all_cartesian(t.p), 1);

  char* text = nullptr;
  REQUIRE_EQ(lattile_tiling_render_text(t.p, &text), LATTILE_OK);
  CHECK_EQ(take(text), "(0) + 2Z\n(1) + 2Z\n");

  char* period = nullptr;
  REQUIRE_EQ(lattile_tiling_period(t.p, &period), LATTILE_OK);
  CHECK_EQ(take(period), "2");

  char* tile = nullptr;
  REQUIRE_EQ(lattile_tiling_tile_text(t.p, 1, &tile), LATTILE_OK);
  CHECK_EQ(take(tile), "(1) + 2Z");
  char* lat = nullptr;
  REQUIRE_EQ(lattile_tiling_tile_lattice_text(t.p, 0, &lat), LATTILE_OK);
  CHECK_EQ(take(lat), "2Z");
  CHECK_EQ(lattile_tiling_tile_text(t.p, 9, &tile), LATTILE_ERR_DIMENSION);
}

TEST_CASE("parse failures set a status and a message") {
  lattile_tiling* t = reinterpret_cast<lattile_tiling*>(0x1);
  CHECK_EQ(lattile_tiling_parse("(0,1) * 2Z x 2Z", &t), LATTILE_ERR_PARSE);
  CHECK(std::string(lattile_last_error()).find("1:") != std::string::npos);

  CHECK_EQ(lattile_tiling_parse("(0) + 0Z", &t), LATTILE_ERR_ZERO_MODULUS);
  CHECK_EQ(lattile_tiling_parse("(0) + 2Z\n(0,0) + 2Z x Z\n", &t),
           LATTILE_ERR_DIMENSION);
  CHECK_EQ(lattile_tiling_parse(nullptr, &t), LATTILE_ERR_NULL_ARGUMENT);
  CHECK_EQ(lattile_tiling_parse("Z", nullptr), LATTILE_ERR_NULL_ARGUMENT);
}

TEST_CASE("built-in counterexample and verification reports") {
  TilingHandle t;
  REQUIRE_EQ(lattile_tiling_counterexample(3, &t.p), LATTILE_OK);
  CHECK_EQ(lattile_tiling_dim(t.p), 3);
  CHECK_EQ(lattile_tiling_tile_count(t.p), 4);
  CHECK_EQ(lattile_tiling_all_cartesian(t.p), 0);
  CHECK_EQ(lattile_tiling_translate_pair_count(t.p), 0);

  ReportHandle torus;
  REQUIRE_EQ(lattile_verify_torus(t.p, 0, &torus.p), LATTILE_OK);
  CHECK_EQ(lattile_report_is_tiling(torus.p), 1);
  CHECK_EQ(lattile_report_distinct_lattices(torus.p), 1);
  CHECK_EQ(lattile_report_trivial(torus.p), 0);
  CHECK_EQ(lattile_report_has_gap(torus.p), 0);
  CHECK_EQ(lattile_report_has_overlap(torus.p), 0);
  char* density = nullptr;
  REQUIRE_EQ(lattile_report_density(torus.p, &density), LATTILE_OK);
  CHECK_EQ(take(density), "1");

  ReportHandle fourier;
  REQUIRE_EQ(lattile_verify_fourier(t.p, &fourier.p), LATTILE_OK);
  CHECK_EQ(lattile_report_is_tiling(fourier.p), 1);

  lattile_tiling* bad = nullptr;
  CHECK_EQ(lattile_tiling_counterexample(2, &bad), LATTILE_ERR_BAD_DIMENSION);
  CHECK_EQ(lattile_tiling_counterexample(-3, &bad), LATTILE_ERR_BAD_DIMENSION);
}

TEST_CASE("gap and overlap reporting through the C surface") {
  TilingHandle t;
  REQUIRE_EQ(lattile_tiling_parse("(0) + 2Z\n(0) + 3Z\n", &t.p), LATTILE_OK);
  ReportHandle r;
  REQUIRE_EQ(lattile_verify_torus(t.p, 0, &r.p), LATTILE_OK);
  CHECK_EQ(lattile_report_is_tiling(r.p), 0);
  char* density = nullptr;
  REQUIRE_EQ(lattile_report_density(r.p, &density), LATTILE_OK);
  CHECK_EQ(take(density), "5/6");

  REQUIRE_EQ(lattile_report_has_gap(r.p), 1);
  char* gap = nullptr;
  REQUIRE_EQ(lattile_report_gap(r.p, &gap), LATTILE_OK);
  CHECK_EQ(take(gap), "(1)");

  REQUIRE_EQ(lattile_report_has_overlap(r.p), 1);
  char* point = nullptr;
  size_t a = 99, b = 99;
  REQUIRE_EQ(lattile_report_overlap(r.p, &point, &a, &b), LATTILE_OK);
  CHECK_EQ(take(point), "(0)");
  CHECK_EQ(a, 0);
  CHECK_EQ(b, 1);

  // Accessors guard their preconditions.
  TilingHandle good;
  REQUIRE_EQ(lattile_tiling_parse("(0) + 2Z\n(1) + 2Z\n", &good.p), LATTILE_OK);
  ReportHandle clean;
  REQUIRE_EQ(lattile_verify_torus(good.p, 0, &clean.p), LATTILE_OK);
  char* none = nullptr;
  CHECK(lattile_report_gap(clean.p, &none) != LATTILE_OK);
}

TEST_CASE("witness extraction") {
  TilingHandle t;
  REQUIRE_EQ(lattile_tiling_parse("0 + 2Z\n1 + 4Z\n3 + 4Z\n", &t.p), LATTILE_OK);
  size_t m = 0, j = 0;
  char* probe = nullptr;
  REQUIRE_EQ(lattile_witness(t.p, 0, &m, &j, &probe), LATTILE_OK);
  CHECK_EQ(m, 1);
  CHECK_EQ(j, 2);
  CHECK_EQ(take(probe), "(1/4)");

  size_t pa = 0, pb = 0;
  REQUIRE_EQ(lattile_tiling_translate_pair_count(t.p), 1);
  REQUIRE_EQ(lattile_tiling_translate_pair(t.p, 0, &pa, &pb), LATTILE_OK);
  CHECK_EQ(pa, 1);
  CHECK_EQ(pb, 2);

  TilingHandle cube;
  REQUIRE_EQ(lattile_tiling_counterexample(3, &cube.p), LATTILE_OK);
  CHECK_EQ(lattile_witness(cube.p, 0, &m, &j, &probe),
           LATTILE_ERR_NOT_CARTESIAN);

  TilingHandle nontiling;
  REQUIRE_EQ(lattile_tiling_parse("(0) + 2Z\n(0) + 3Z\n", &nontiling.p),
             LATTILE_OK);
  CHECK_EQ(lattile_witness(nontiling.p, 0, &m, &j, &probe),
           LATTILE_ERR_NOT_TILING);
}

TEST_CASE("random generator is deterministic through the C surface") {
  TilingHandle a, b;
  REQUIRE_EQ(lattile_tiling_random_cartesian(2, 12, 5, &a.p), LATTILE_OK);
  REQUIRE_EQ(lattile_tiling_random_cartesian(2, 12, 5, &b.p), LATTILE_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  REQUIRE_EQ(lattile_tiling_render_text(a.p, &ta), LATTILE_OK);
  REQUIRE_EQ(lattile_tiling_render_text(b.p, &tb), LATTILE_OK);
  CHECK_EQ(take(ta), take(tb));
  ReportHandle r;
  REQUIRE_EQ(lattile_verify_torus(a.p, 0, &r.p), LATTILE_OK);
  CHECK_EQ(lattile_report_is_tiling(r.p), 1);
}

TEST_CASE("search through the C surface") {
  lattile_search_config cfg = {};
  cfg.dim = 1;
  cfg.period = 2;
  cfg.max_index = 2;
  ResultHandle r;
  REQUIRE_EQ(lattile_search(&cfg, &r.p), LATTILE_OK);
  CHECK_EQ(lattile_search_exhausted(r.p), 1);
  CHECK(lattile_search_nodes(r.p) > 0);
  REQUIRE_EQ(lattile_search_solution_count(r.p), 1);

  TilingHandle sol;
  REQUIRE_EQ(lattile_search_solution(r.p, 0, &sol.p), LATTILE_OK);
  char* text = nullptr;
  REQUIRE_EQ(lattile_tiling_render_text(sol.p, &text), LATTILE_OK);
  CHECK_EQ(take(text), "(0) + 2Z\n(1) + 2Z\n");
  lattile_tiling* none = nullptr;
  CHECK(lattile_search_solution(r.p, 5, &none) != LATTILE_OK);

  lattile_search_config big = {};
  big.dim = 3;
  big.period = 12;
  big.max_index = 4;
  big.torus_budget = 100;
  lattile_search_result* out = nullptr;
  CHECK_EQ(lattile_search(&big, &out), LATTILE_ERR_TORUS_TOO_LARGE);
  CHECK_EQ(lattile_search(nullptr, &out), LATTILE_ERR_NULL_ARGUMENT);
}

TEST_CASE("rendering through the C surface") {
  TilingHandle t;
  REQUIRE_EQ(lattile_tiling_parse("(0,0) + 2Z x Z\n(1,0) + 2Z x Z\n", &t.p),
             LATTILE_OK);
  lattile_render_options opt = {};
  opt.x0 = 0;
  opt.x1 = 4;
  opt.y0 = 0;
  opt.y1 = 2;
  opt.scale = 2;

  unsigned char* bytes = nullptr;
  size_t len = 0;
  REQUIRE_EQ(lattile_render_ppm(t.p, &opt, &bytes, &len), LATTILE_OK);
  REQUIRE(bytes != nullptr);
  CHECK_EQ(len, 11 + 8 * 4 * 3);  // "P6\n8 4\n255\n" + pixels
  CHECK_EQ(std::string(reinterpret_cast<char*>(bytes), 3), "P6\n");
  lattile_bytes_free(bytes);

  char* svg = nullptr;
  REQUIRE_EQ(lattile_render_svg(t.p, &opt, &svg), LATTILE_OK);
  std::string doc = take(svg);
  CHECK(doc.find("<svg") == 0);

  // 1-D instances cannot be drawn.
  TilingHandle line;
  REQUIRE_EQ(lattile_tiling_parse("(0) + 2Z\n(1) + 2Z\n", &line.p), LATTILE_OK);
  CHECK_EQ(lattile_render_ppm(line.p, &opt, &bytes, &len),
           LATTILE_ERR_UNSUPPORTED_DIMENSION);
}

TEST_CASE("null handling and freeing") {
  CHECK_EQ(lattile_tiling_dim(nullptr), 0);
  CHECK_EQ(lattile_tiling_tile_count(nullptr), 0);
  CHECK_EQ(lattile_tiling_translate_pair_count(nullptr), 0);
  lattile_tiling_free(nullptr);
  lattile_report_free(nullptr);
  lattile_search_result_free(nullptr);
  lattile_string_free(nullptr);
  lattile_bytes_free(nullptr);
}
