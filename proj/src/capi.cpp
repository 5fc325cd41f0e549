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

#include "lattile/lattile.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "errors.hpp"
#include "fourier.hpp"
#include "render.hpp"
#include "search.hpp"
#include "textio.hpp"
#include "tiling.hpp"

struct lattile_tiling {
  lattile::TilingInstance inst;
};

struct lattile_report {
  lattile::CoverageReport rep;
};

struct lattile_search_result {
  lattile::SearchResult res;
};

namespace {

thread_local std::string t_last_error;

lattile_status fail(lattile_status code, const char* msg) {
  t_last_error = msg;
  return code;
}

lattile_status null_argument() {
  return fail(LATTILE_ERR_NULL_ARGUMENT, "null argument");
}

// Runs the body and funnels every library exception into a status code.
template <typename F>
lattile_status guarded(F&& body) {
  using namespace lattile;
  try {
    body();
    return LATTILE_OK;
  } catch (const ZeroModulus& e) {
    return fail(LATTILE_ERR_ZERO_MODULUS, e.what());
  } catch (const ParseError& e) {
    return fail(LATTILE_ERR_PARSE, e.what());
  } catch (const DimensionMismatch& e) {
    return fail(LATTILE_ERR_DIMENSION, e.what());
  } catch (const SingularBasis& e) {
    return fail(LATTILE_ERR_SINGULAR, e.what());
  } catch (const BadDimension& e) {
    return fail(LATTILE_ERR_BAD_DIMENSION, e.what());
  } catch (const BadPeriod& e) {
    return fail(LATTILE_ERR_BAD_PERIOD, e.what());
  } catch (const NotATiling& e) {
    return fail(LATTILE_ERR_NOT_TILING, e.what());
  } catch (const NotCartesian& e) {
    return fail(LATTILE_ERR_NOT_CARTESIAN, e.what());
  } catch (const WitnessNotFound& e) {
    return fail(LATTILE_ERR_WITNESS_NOT_FOUND, e.what());
  } catch (const TorusTooLarge& e) {
    return fail(LATTILE_ERR_TORUS_TOO_LARGE, e.what());
  } catch (const BudgetExceeded& e) {
    return fail(LATTILE_ERR_BUDGET_EXCEEDED, e.what());
  } catch (const UnsupportedDimension& e) {
    return fail(LATTILE_ERR_UNSUPPORTED_DIMENSION, e.what());
  } catch (const IoError& e) {
    return fail(LATTILE_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(LATTILE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LATTILE_ERR_INTERNAL, "unknown error");
  }
}

char* c_copy(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

size_t positive_dim(int dim) {
  if (dim < 1) throw lattile::BadDimension("dimension must be positive");
  return static_cast<size_t>(dim);
}

lattile::RenderOptions to_options(const lattile_render_options* opt) {
  lattile::RenderOptions o;
  o.x0 = opt->x0;
  o.x1 = opt->x1;
  o.y0 = opt->y0;
  o.y1 = opt->y1;
  o.scale = opt->scale;
  if (opt->has_slice) {
    if (opt->slice_axis < 0)
      throw lattile::UnsupportedDimension("slice axis out of range");
    o.slice = {static_cast<size_t>(opt->slice_axis), opt->slice_value};
  }
  return o;
}

}  // namespace

extern "C" {

const char* lattile_last_error(void) { return t_last_error.c_str(); }

void lattile_string_free(char* s) { std::free(s); }
void lattile_bytes_free(unsigned char* p) { std::free(p); }

/* ---- tiling instances -------------------------------------------------- */

lattile_status lattile_tiling_parse(const char* text, lattile_tiling** out) {
  if (!text || !out) return null_argument();
  return guarded([&] {
    *out = new lattile_tiling{lattile::parse_tiling(text)};
  });
}

lattile_status lattile_tiling_counterexample(int dim, lattile_tiling** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new lattile_tiling{lattile::counterexample_tiling(positive_dim(dim))};
  });
}

lattile_status lattile_tiling_random_cartesian(int dim, long max_index,
                                               uint64_t seed,
                                               lattile_tiling** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new lattile_tiling{
        lattile::random_cartesian_tiling(positive_dim(dim), max_index, seed)};
  });
}

void lattile_tiling_free(lattile_tiling* t) { delete t; }

int lattile_tiling_dim(const lattile_tiling* t) {
  return t ? static_cast<int>(t->inst.dim()) : 0;
}

size_t lattile_tiling_tile_count(const lattile_tiling* t) {
  return t ? t->inst.tiles().size() : 0;
}

int lattile_tiling_all_cartesian(const lattile_tiling* t) {
  return t && t->inst.all_cartesian() ? 1 : 0;
}

lattile_status lattile_tiling_period(const lattile_tiling* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = c_copy(lattile::to_string(t->inst.period())); });
}

lattile_status lattile_tiling_render_text(const lattile_tiling* t, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] { *out = c_copy(lattile::render_tiling(t->inst)); });
}

lattile_status lattile_tiling_tile_text(const lattile_tiling* t, size_t i,
                                        char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    if (i >= t->inst.tiles().size())
      throw lattile::DimensionMismatch("tile index out of range");
    *out = c_copy(lattile::render_coset(t->inst.tiles()[i]));
  });
}

lattile_status lattile_tiling_tile_lattice_text(const lattile_tiling* t,
                                                size_t i, char** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    if (i >= t->inst.tiles().size())
      throw lattile::DimensionMismatch("tile index out of range");
    *out = c_copy(lattile::render_lattice(t->inst.tiles()[i].lattice()));
  });
}

size_t lattile_tiling_translate_pair_count(const lattile_tiling* t) {
  return t ? t->inst.translate_pairs().size() : 0;
}

lattile_status lattile_tiling_translate_pair(const lattile_tiling* t,
                                             size_t pair, size_t* tile_a,
                                             size_t* tile_b) {
  if (!t || !tile_a || !tile_b) return null_argument();
  return guarded([&] {
    auto pairs = t->inst.translate_pairs();
    if (pair >= pairs.size()) throw lattile::DimensionMismatch("pair index out of range");
    *tile_a = pairs[pair].first;
    *tile_b = pairs[pair].second;
  });
}

/* ---- verification ------------------------------------------------------ */

lattile_status lattile_verify_torus(const lattile_tiling* t,
                                    int64_t torus_budget,
                                    lattile_report** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    int64_t budget = torus_budget > 0 ? torus_budget : lattile::kDefaultTorusBudget;
    *out = new lattile_report{lattile::verify_tiling_torus(t->inst, budget)};
  });
}

lattile_status lattile_verify_fourier(const lattile_tiling* t,
                                      lattile_report** out) {
  if (!t || !out) return null_argument();
  return guarded([&] {
    *out = new lattile_report{lattile::verify_tiling_fourier(t->inst)};
  });
}

void lattile_report_free(lattile_report* r) { delete r; }

int lattile_report_is_tiling(const lattile_report* r) {
  return r && r->rep.is_tiling ? 1 : 0;
}

int lattile_report_distinct_lattices(const lattile_report* r) {
  return r && r->rep.distinct_lattices ? 1 : 0;
}

int lattile_report_trivial(const lattile_report* r) {
  return r && r->rep.trivial ? 1 : 0;
}

int lattile_report_has_gap(const lattile_report* r) {
  return r && r->rep.first_gap ? 1 : 0;
}

int lattile_report_has_overlap(const lattile_report* r) {
  return r && r->rep.first_overlap ? 1 : 0;
}

lattile_status lattile_report_density(const lattile_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] { *out = c_copy(lattile::to_string(r->rep.density)); });
}

lattile_status lattile_report_gap(const lattile_report* r, char** out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    if (!r->rep.first_gap) throw lattile::Error("report has no gap");
    *out = c_copy(lattile::to_string(*r->rep.first_gap));
  });
}

lattile_status lattile_report_overlap(const lattile_report* r, char** point,
                                      size_t* tile_a, size_t* tile_b) {
  if (!r || !point || !tile_a || !tile_b) return null_argument();
  return guarded([&] {
    if (!r->rep.first_overlap) throw lattile::Error("report has no overlap");
    *point = c_copy(lattile::to_string(r->rep.first_overlap->point));
    *tile_a = r->rep.first_overlap->tile_a;
    *tile_b = r->rep.first_overlap->tile_b;
  });
}

/* ---- translate-pair witness -------------------------------------------- */

lattile_status lattile_witness(const lattile_tiling* t, int64_t torus_budget,
                               size_t* max_tile, size_t* partner,
                               char** probe) {
  if (!t || !max_tile || !partner || !probe) return null_argument();
  return guarded([&] {
    int64_t budget = torus_budget > 0 ? torus_budget : lattile::kDefaultTorusBudget;
    lattile::TranslateWitness w = lattile::mirsky_newman_witness(t->inst, budget);
    *max_tile = w.max_tile;
    *partner = w.partner;
    *probe = c_copy(lattile::to_string(w.probe));
  });
}

/* ---- exact-cover search ------------------------------------------------ */

lattile_status lattile_search(const lattile_search_config* cfg,
                              lattile_search_result** out) {
  if (!cfg || !out) return null_argument();
  return guarded([&] {
    lattile::SearchConfig c;
    c.dim = positive_dim(cfg->dim);
    c.period = cfg->period;
    c.max_index = cfg->max_index;
    c.max_tiles = cfg->max_tiles;
    c.require_distinct_lattices = cfg->require_distinct_lattices != 0;
    c.symmetry_reduction = cfg->symmetry_reduction != 0;
    if (cfg->node_budget) c.node_budget = cfg->node_budget;
    if (cfg->candidate_budget) c.candidate_budget = cfg->candidate_budget;
    if (cfg->torus_budget) c.torus_budget = cfg->torus_budget;
    *out = new lattile_search_result{lattile::search_exotic_tilings(c)};
  });
}

void lattile_search_result_free(lattile_search_result* r) { delete r; }

size_t lattile_search_solution_count(const lattile_search_result* r) {
  return r ? r->res.tilings.size() : 0;
}

uint64_t lattile_search_nodes(const lattile_search_result* r) {
  return r ? r->res.nodes_explored : 0;
}

int lattile_search_exhausted(const lattile_search_result* r) {
  return r && r->res.exhausted ? 1 : 0;
}

lattile_status lattile_search_solution(const lattile_search_result* r,
                                       size_t i, lattile_tiling** out) {
  if (!r || !out) return null_argument();
  return guarded([&] {
    if (i >= r->res.tilings.size())
      throw lattile::DimensionMismatch("solution index out of range");
    *out = new lattile_tiling{r->res.tilings[i]};
  });
}

/* ---- rendering ---------------------------------------------------------- */

lattile_status lattile_render_ppm(const lattile_tiling* t,
                                  const lattile_render_options* opt,
                                  unsigned char** bytes, size_t* len) {
  if (!t || !opt || !bytes || !len) return null_argument();
  return guarded([&] {
    std::string img = lattile::render_ppm(t->inst, to_options(opt));
    unsigned char* p = static_cast<unsigned char*>(std::malloc(img.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, img.data(), img.size());
    p[img.size()] = 0;
    *bytes = p;
    *len = img.size();
  });
}

lattile_status lattile_render_svg(const lattile_tiling* t,
                                  const lattile_render_options* opt,
                                  char** out) {
  if (!t || !opt || !out) return null_argument();
  return guarded([&] {
    *out = c_copy(lattile::render_svg(t->inst, to_options(opt)));
  });
}

} /* extern "C" */
