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

/*
 * C interface to the lattile library: exact verification of coset tilings
 * of Z^d, translate-pair extraction, exact-cover search, and rendering.
 *
 * Conventions:
 *   - Functions return LATTILE_OK on success; on failure they return a
 *     status code and leave a message in lattile_last_error() (per thread).
 *   - Objects come back through out-parameters as opaque handles owned by
 *     the caller; release them with the matching *_free function.
 *   - Strings and byte buffers returned through out-parameters are
 *     malloc'd copies; release them with lattile_string_free /
 *     lattile_bytes_free.
 *   - Passing NULL where an argument is required yields
 *     LATTILE_ERR_NULL_ARGUMENT; freeing NULL is a no-op.
 */

#ifndef LATTILE_LATTILE_H_
#define LATTILE_LATTILE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lattile_status {
  LATTILE_OK = 0,
  LATTILE_ERR_PARSE = 1,
  LATTILE_ERR_ZERO_MODULUS = 2,
  LATTILE_ERR_DIMENSION = 3,
  LATTILE_ERR_SINGULAR = 4,
  LATTILE_ERR_BAD_DIMENSION = 5,
  LATTILE_ERR_BAD_PERIOD = 6,
  LATTILE_ERR_NOT_TILING = 7,
  LATTILE_ERR_NOT_CARTESIAN = 8,
  LATTILE_ERR_WITNESS_NOT_FOUND = 9,
  LATTILE_ERR_TORUS_TOO_LARGE = 10,
  LATTILE_ERR_BUDGET_EXCEEDED = 11,
  LATTILE_ERR_UNSUPPORTED_DIMENSION = 12,
  LATTILE_ERR_IO = 13,
  LATTILE_ERR_NULL_ARGUMENT = 14,
  LATTILE_ERR_INTERNAL = 15
} lattile_status;

/* Message for the most recent failing call on this thread ("" if none).
 * The pointer stays valid until the next failing call on the thread. */
const char* lattile_last_error(void);

void lattile_string_free(char* s);
void lattile_bytes_free(unsigned char* p);

/* ---- tiling instances -------------------------------------------------- */

typedef struct lattile_tiling lattile_tiling;

/* Text format: one coset per line, e.g. "(0,1,0) + 2Z x 2Z x Z" or
 * "(0,0,0) + lattice[(2,0,0); (0,2,0); (1,1,1)]"; '#' starts a comment. */
lattile_status lattile_tiling_parse(const char* text, lattile_tiling** out);

/* The built-in four-coset tiling of Z^dim (dim >= 3) by cosets of four
 * pairwise-distinct lattices. */
lattile_status lattile_tiling_counterexample(int dim, lattile_tiling** out);

/* Seeded random tiling by Cartesian cosets (recursive axis splitting). */
lattile_status lattile_tiling_random_cartesian(int dim, long max_index,
                                               uint64_t seed,
                                               lattile_tiling** out);

void lattile_tiling_free(lattile_tiling* t);

int lattile_tiling_dim(const lattile_tiling* t);         /* 0 on NULL */
size_t lattile_tiling_tile_count(const lattile_tiling* t);
int lattile_tiling_all_cartesian(const lattile_tiling* t);

/* Common torus period (lcm of tile exponents) as a decimal string. */
lattile_status lattile_tiling_period(const lattile_tiling* t, char** out);

/* Canonical text of the whole document / of one coset / of one lattice. */
lattile_status lattile_tiling_render_text(const lattile_tiling* t, char** out);
lattile_status lattile_tiling_tile_text(const lattile_tiling* t, size_t i,
                                        char** out);
lattile_status lattile_tiling_tile_lattice_text(const lattile_tiling* t,
                                                size_t i, char** out);

/* Pairs of tiles sharing a lattice. */
size_t lattile_tiling_translate_pair_count(const lattile_tiling* t);
lattile_status lattile_tiling_translate_pair(const lattile_tiling* t,
                                             size_t pair, size_t* tile_a,
                                             size_t* tile_b);

/* ---- verification ------------------------------------------------------ */

typedef struct lattile_report lattile_report;

/* Exact cover check on the torus (Z/period)^d; torus_budget limits the cell
 * count, 0 means the built-in default of 10^7. */
lattile_status lattile_verify_torus(const lattile_tiling* t,
                                    int64_t torus_budget,
                                    lattile_report** out);

/* Independent check in frequency space (exact coefficient sums). */
lattile_status lattile_verify_fourier(const lattile_tiling* t,
                                      lattile_report** out);

void lattile_report_free(lattile_report* r);

int lattile_report_is_tiling(const lattile_report* r);
int lattile_report_distinct_lattices(const lattile_report* r);
int lattile_report_trivial(const lattile_report* r);
int lattile_report_has_gap(const lattile_report* r);
int lattile_report_has_overlap(const lattile_report* r);

/* Exact density as "p/q". */
lattile_status lattile_report_density(const lattile_report* r, char** out);

/* First uncovered point, e.g. "(1,0)". Fails unless has_gap. */
lattile_status lattile_report_gap(const lattile_report* r, char** out);

/* First doubly covered point and the two lowest tiles containing it.
 * Fails unless has_overlap. */
lattile_status lattile_report_overlap(const lattile_report* r, char** point,
                                      size_t* tile_a, size_t* tile_b);

/* ---- translate-pair witness -------------------------------------------- */

/* For an all-Cartesian tiling with at least two tiles: the maximal-index
 * tile, a partner with the identical lattice, and the probe frequency that
 * exposed it (as text, e.g. "(1/4)"). */
lattile_status lattile_witness(const lattile_tiling* t, int64_t torus_budget,
                               size_t* max_tile, size_t* partner,
                               char** probe);

/* ---- exact-cover search ------------------------------------------------ */

typedef struct lattile_search_result lattile_search_result;

typedef struct lattile_search_config {
  int dim;
  int64_t period;      /* search torus is (Z/period)^dim */
  long max_index;      /* bound on candidate lattice indices */
  size_t max_tiles;    /* 0 = unbounded */
  int require_distinct_lattices;
  int symmetry_reduction;
  uint64_t node_budget;    /* 0 = default */
  size_t candidate_budget; /* 0 = default */
  int64_t torus_budget;    /* 0 = default */
} lattile_search_config;

lattile_status lattile_search(const lattile_search_config* cfg,
                              lattile_search_result** out);

void lattile_search_result_free(lattile_search_result* r);

size_t lattile_search_solution_count(const lattile_search_result* r);
uint64_t lattile_search_nodes(const lattile_search_result* r);
int lattile_search_exhausted(const lattile_search_result* r);

/* i-th solution as a fresh tiling handle. */
lattile_status lattile_search_solution(const lattile_search_result* r,
                                       size_t i, lattile_tiling** out);

/* ---- rendering ---------------------------------------------------------- */

typedef struct lattile_render_options {
  int64_t x0, x1, y0, y1; /* half-open window */
  int scale;              /* pixels per lattice point, >= 1 */
  int has_slice;          /* required when dim == 3 */
  int slice_axis;
  int64_t slice_value;
} lattile_render_options;

/* Binary portable pixmap (P6); byte-exact for identical inputs. */
lattile_status lattile_render_ppm(const lattile_tiling* t,
                                  const lattile_render_options* opt,
                                  unsigned char** bytes, size_t* len);

/* Scalable vector graphics document. */
lattile_status lattile_render_svg(const lattile_tiling* t,
                                  const lattile_render_options* opt,
                                  char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATTILE_LATTILE_H_ */
