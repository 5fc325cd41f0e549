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

// Drives the installed command-line binary as a subprocess. The binary path
// comes from LATTILE_CLI and the sample documents from LATTILE_DATA.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string output;  // stdout and stderr interleaved
};

std::string cli() {
  const char* p = std::getenv("LATTILE_CLI");
  REQUIRE_MESSAGE(p != nullptr, "LATTILE_CLI must point at the binary");
  return p;
}

std::string data_dir() {
  const char* p = std::getenv("LATTILE_DATA");
  REQUIRE_MESSAGE(p != nullptr, "LATTILE_DATA must point at the samples");
  return p;
}

Outcome run_shell(const std::string& cmd) {
  Outcome out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.output.append(buf, n);
  int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome run(const std::string& args) {
  return run_shell(cli() + " " + args + " 2>&1");
}

const fs::path& scratch() {
  static fs::path dir = [] {
    std::string tpl = (fs::temp_directory_path() / "lattile_cli_XXXXXX").string();
    char* made = mkdtemp(tpl.data());
    REQUIRE(made != nullptr);
    return fs::path(made);
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("verify accepts the bundled 3-D instance") {
  Outcome r = run("verify " + data_dir() + "/counterexample3.tiling");
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.output, "tiles: 4"));
  CHECK(contains(r.output, "period: 2"));
  CHECK(contains(r.output, "density = 1"));
  CHECK(contains(r.output, "torus: tiling"));
  CHECK(contains(r.output, "fourier: tiling"));
  CHECK(contains(r.output, "no translate pairs"));
  CHECK(contains(r.output, "verdict: tiling"));

  // Byte-identical stdout on identical input.
  Outcome again = run("verify " + data_dir() + "/counterexample3.tiling");
  CHECK_EQ(again.output, r.output);
  CHECK_EQ(again.code, 0);
}

TEST_CASE("verify rejects the overlapping pair with a witness point") {
  Outcome r = run("verify " + data_dir() + "/overlap.tiling");
  CHECK_EQ(r.code, 1);
  CHECK(contains(r.output, "density = 5/6"));
  CHECK(contains(r.output, "not a tiling"));
  CHECK(contains(r.output, "overlap at (0) between tiles 0 and 1"));
  CHECK(contains(r.output, "gap at (1)"));
  CHECK(contains(r.output, "verdict: not a tiling"));
}

TEST_CASE("verify method selection") {
  std::string file = data_dir() + "/translate-pair.tiling";
  CHECK_EQ(run("verify --method torus " + file).code, 0);
  CHECK_EQ(run("verify --method fourier " + file).code, 0);
  Outcome r = run("verify --method fourier " + file);
  CHECK(contains(r.output, "fourier: tiling"));
  CHECK_FALSE(contains(r.output, "torus:"));
  CHECK(contains(r.output, "translate pair: tiles 1 and 2"));
}

TEST_CASE("parse and file errors exit 2") {
  CHECK_EQ(run("verify /nonexistent/missing.tiling").code, 2);

  fs::path bad = write_file("bad.tiling", "# intro\n(0,1) * 2Z x 2Z\n");
  Outcome r = run("verify " + bad.string());
  CHECK_EQ(r.code, 2);
  CHECK(contains(r.output, "error:"));
  CHECK(contains(r.output, "2:"));  // line number of the bad line

  fs::path zero = write_file("zero.tiling", "(0) + 0Z\n");
  CHECK_EQ(run("verify " + zero.string()).code, 2);
}

TEST_CASE("witness prints the translate pair and probe") {
  Outcome r = run("witness " + data_dir() + "/translate-pair.tiling");
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.output, "max-index tile 1: (1) + 4Z"));
  CHECK(contains(r.output, "partner tile 2: (3) + 4Z"));
  CHECK(contains(r.output, "shared lattice: 4Z"));
  CHECK(contains(r.output, "probe: (1/4)"));
}

TEST_CASE("witness rejects non-Cartesian and trivial inputs") {
  CHECK_EQ(run("witness " + data_dir() + "/counterexample3.tiling").code, 1);
  fs::path trivial = write_file("trivial.tiling", "Z\n");
  CHECK_EQ(run("witness " + trivial.string()).code, 1);
  CHECK_EQ(run("witness " + data_dir() + "/overlap.tiling").code, 1);
}

TEST_CASE("search writes solution documents that verify") {
  fs::path out = scratch() / "sols";
  Outcome r = run("search --dim 1 --period 2 --max-index 2 --out " +
                  out.string());
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.output, "solutions: 1"));
  CHECK(contains(r.output, "exhausted: yes"));
  CHECK(contains(r.output, "nodes explored:"));
  fs::path sol = out / "solution-001.tiling";
  CHECK(contains(r.output, sol.string()));
  REQUIRE(fs::exists(sol));
  CHECK_EQ(run("verify " + sol.string()).code, 0);
}

TEST_CASE("exhaustive fruitless search reports zero solutions") {
  Outcome r = run("search --dim 1 --period 12 --max-index 12 --distinct");
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.output, "solutions: 0"));
  CHECK(contains(r.output, "exhausted: yes"));
}

TEST_CASE("search rediscovers a 3-D exotic tiling") {
  fs::path out = scratch() / "exotic";
  Outcome r = run(
      "search --dim 3 --period 2 --max-index 8 --max-tiles 4 --distinct "
      "--symmetry --out " + out.string());
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.output, "exhausted: yes"));
  REQUIRE(fs::exists(out / "solution-001.tiling"));
  CHECK_EQ(run("verify " + (out / "solution-001.tiling").string()).code, 0);
}

TEST_CASE("node budget exhaustion exits 4 and says so") {
  Outcome r = run("search --dim 3 --period 2 --max-index 8 --budget 2");
  CHECK_EQ(r.code, 4);
  CHECK(contains(r.output, "exhausted: no"));
}

TEST_CASE("environment variable overrides the torus budget") {
  fs::path big = write_file("big.tiling", "(0,0,0) + 101Z x 101Z x 101Z\n");
  CHECK_EQ(run("verify " + big.string()).code, 1);  // single tile, not a tiling
  Outcome limited = run_shell("LATTILE_TORUS_BUDGET=1000 " + cli() + " verify " +
                              big.string() + " 2>&1");
  CHECK_EQ(limited.code, 4);
}

TEST_CASE("render writes deterministic images") {
  fs::path img = scratch() / "slice.ppm";
  std::string base = "render " + data_dir() +
                     "/counterexample3.tiling --slice z=0 --window -4,4,-4,4 "
                     "--scale 2 --out ";
  Outcome r = run(base + img.string());
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.output, "wrote"));
  CHECK(contains(r.output, "(16x16)"));
  std::string first = slurp(img);
  CHECK_EQ(first.rfind("P6\n", 0), 0);

  fs::path img2 = scratch() / "slice2.ppm";
  CHECK_EQ(run(base + img2.string()).code, 0);
  CHECK_EQ(slurp(img2), first);

  fs::path svg = scratch() / "slice.svg";
  CHECK_EQ(run(base + svg.string()).code, 0);
  CHECK_EQ(slurp(svg).rfind("<svg", 0), 0);

  // 3-D without slice is rejected.
  Outcome no_slice = run("render " + data_dir() +
                         "/counterexample3.tiling --window 0,2,0,2 --out " +
                         (scratch() / "x.ppm").string());
  CHECK_EQ(no_slice.code, 1);
}

TEST_CASE("example subcommand emits a parseable document") {
  fs::path doc = scratch() / "example.tiling";
  Outcome r = run("example --dim 3 > " + doc.string());
  CHECK_EQ(r.code, 0);
  std::string text = slurp(doc);
  CHECK(contains(text, "lattice[(1,1,1); (0,2,0); (0,0,2)]"));
  CHECK_EQ(run("verify " + doc.string()).code, 0);
}
