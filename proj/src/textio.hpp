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

#include <string>
#include <vector>

#include "tiling.hpp"

namespace lattile {

// One coset per line, '#' starts a comment. A line is
//     (v1,...,vd) + a1Z x a2Z x ... x adZ
// or  (v1,...,vd) + lattice[(r11,...,r1d); ...; (rd1,...,rdd)]
// The "(v) +" prefix is optional (zero vector); in one dimension the rep may
// be a bare integer, and a modulus of 1 may be written as plain "Z".
struct TilingDocument {
  size_t dim = 0;
  std::vector<Coset> entries;
};

TilingDocument parse_document(const std::string& text);

// parse + wrap; throws ParseError on an empty document.
TilingInstance parse_tiling(const std::string& text);

// Canonical text: reps always parenthesized, Cartesian lattices in product
// form with "Z" for modulus 1, others as explicit Hermite rows. Parsing the
// result reproduces the instance exactly.
std::string render_lattice(const Lattice& lat);
std::string render_coset(const Coset& c);
std::string render_tiling(const TilingInstance& t);

}  // namespace lattile
