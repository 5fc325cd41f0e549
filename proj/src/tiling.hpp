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
#include <optional>
#include <utility>
#include <vector>

#include "coset.hpp"

namespace lattile {

inline constexpr int64_t kDefaultTorusBudget = 10'000'000;

// An ordered finite family of cosets in one dimension, together with the
// common torus period (lcm of the tile exponents), so that exact cover of
// (Z/period)^d is equivalent to exact cover of Z^d.
class TilingInstance {
 public:
  explicit TilingInstance(std::vector<Coset> tiles);

  size_t dim() const { return dim_; }
  const std::vector<Coset>& tiles() const { return tiles_; }
  const Int& period() const { return period_; }

  bool all_cartesian() const;

  // Pairs (i, j), i < j, of tiles sharing a lattice.
  std::vector<std::pair<size_t, size_t>> translate_pairs() const;

  bool operator==(const TilingInstance& o) const { return tiles_ == o.tiles_; }

 private:
  size_t dim_;
  std::vector<Coset> tiles_;
  Int period_;
};

struct CoverageReport {
  bool is_tiling = false;
  Rat density;
  std::optional<IntVec> first_gap;
  struct Overlap {
    IntVec point;
    size_t tile_a;
    size_t tile_b;
  };
  std::optional<Overlap> first_overlap;
  bool distinct_lattices = false;
  bool trivial = false;  // single-tile family
};

// Exact cover check by enumerating every point of (Z/period)^d. Gap and
// overlap witnesses are the lexicographically first such points.
CoverageReport verify_tiling_torus(const TilingInstance& t,
                                   int64_t torus_budget = kDefaultTorusBudget);

// Exact cover check in frequency space: over the union of the tiles' dual
// sets, the coefficient sums must be 1 at zero and vanish elsewhere.
CoverageReport verify_tiling_fourier(const TilingInstance& t);

// The built-in four-coset tiling of Z^3 (extended by trivial axes for
// d > 3) whose lattices are pairwise distinct; one tile is not Cartesian.
TilingInstance counterexample_tiling(size_t dim);

// Seeded generator: recursively splits tiles of an initially trivial family
// along one axis into p translates (p prime). Always yields a valid tiling;
// splits are chosen so the verification torus stays within torus_cap cells.
TilingInstance random_cartesian_tiling(size_t dim, long max_index, uint64_t seed,
                                       int64_t torus_cap = 100'000);

// Flat cell indices (x_0 * P^{d-1} + ... + x_{d-1}) of the coset's residue
// classes on the torus [0, period)^d. Requires period * Z^d inside the
// lattice. Linear in the number of covered cells.
std::vector<int64_t> coset_torus_cells(const Coset& c, int64_t period);

}  // namespace lattile
