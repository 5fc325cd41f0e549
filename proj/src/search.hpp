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

#pragma once

#include <cstdint>
#include <vector>

#include "tiling.hpp"

namespace lattile {

struct SearchConfig {
  size_t dim = 1;
  int64_t period = 2;        // search torus is (Z/period)^dim
  long max_index = 2;        // bound on candidate lattice indices
  size_t max_tiles = 0;      // 0 = unbounded
  bool require_distinct_lattices = false;
  bool symmetry_reduction = false;  // dedup under coordinate perms + translations
  uint64_t node_budget = 5'000'000;
  size_t candidate_budget = 100'000;
  int64_t torus_budget = kDefaultTorusBudget;
};

struct SearchResult {
  std::vector<TilingInstance> tilings;  // canonical, sorted, deduplicated
  uint64_t nodes_explored = 0;          // tile placements attempted
  bool exhausted = false;  // full space covered (vs node budget hit)
};

// Every coset v + L with period * Z^d inside L and index at most max_index:
// lattices run over Hermite forms with pivots dividing the period (filtered
// by actual containment of period * e_i), reps over the canonical box.
// Order is deterministic: lattices ascending, then reps in odometer order.
std::vector<Coset> enumerate_candidate_cosets(const SearchConfig& cfg);

// Exact-cover backtracking over the torus: branch on the uncovered cell with
// the fewest admissible candidates. Covers with fewer than two tiles are
// discarded (a lone Z^d is not an interesting tiling). Solutions are
// canonicalized, deduplicated, and re-verified before being returned.
SearchResult search_exotic_tilings(const SearchConfig& cfg);

// Same search against a caller-supplied candidate pool (e.g. only Cartesian
// lattices). Candidates must respect cfg.period and cfg.dim.
SearchResult search_with_candidates(const SearchConfig& cfg,
                                    const std::vector<Coset>& candidates);

// Sorts tiles by (index, lattice, rep); with use_symmetry also minimizes
// over coordinate permutations and torus translations, returning the
// lexicographically least representative of the orbit.
TilingInstance canonicalize_solution(const TilingInstance& t, bool use_symmetry);

}  // namespace lattile
