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

#include "cyclotomic.hpp"
#include "tiling.hpp"

namespace lattile {

// Frequencies are rational vectors with entries in [0, 1), identified with
// characters x |-> e(k.x) on Z^d.
using DualVector = RatVec;

// True iff k pairs integrally with every lattice vector.
bool is_dual_vector(const Lattice& lat, const DualVector& k);

// All index-many characters that are trivial on the lattice, entries in
// [0, 1), sorted lexicographically.
std::vector<DualVector> dual_set(const Lattice& lat);

// Fourier coefficient of the coset's indicator function at frequency k:
// (1/index) * e(-k.rep) when k is dual to the lattice, zero otherwise.
CyclotomicSum coset_coefficient(const Coset& c, const DualVector& k);

// The same coefficient by direct summation of the indicator against the
// character over the full torus (Z/period)^d, normalized by period^d.
// Requires period * Z^d inside the lattice and period * k integral.
CyclotomicSum coefficient_by_averaging(const Coset& c, const DualVector& k,
                                       int64_t period);

// Certificate that two tiles of a tiling are translates: the tile of
// maximal index (lowest position on ties), a partner tile with the same
// lattice, and the probe frequency whose coefficient exposed the partner.
struct TranslateWitness {
  size_t max_tile;
  size_t partner;
  DualVector probe;
};

// For a verified tiling with at least two tiles, locate a translate pair by
// probing the coefficient sum at a frequency dual only to lattices of
// maximal index. Throws NotATiling / WitnessNotFound.
TranslateWitness mirsky_newman_witness(const TilingInstance& t,
                                       int64_t torus_budget = kDefaultTorusBudget);

}  // namespace lattile
