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

#include "matrix.hpp"
#include "numeric.hpp"

namespace lattile {

// A full-rank sublattice of Z^d identified by its canonical basis: rows are
// generators, upper triangular, positive diagonal, entries above each pivot
// reduced into [0, pivot). Canonical form makes lattice equality a plain
// comparison. Immutable once built.
class Lattice {
 public:
  // Canonicalizes an arbitrary generator matrix. The matrix may have more
  // rows than columns (a spanning set); it must span a full-rank lattice.
  static Lattice from_generators(const IntMatrix& basis);

  // diag(a_1, ..., a_d); every a_i must be positive.
  static Lattice cartesian(const IntVec& moduli);

  static Lattice standard(size_t dim);  // Z^d

  size_t dim() const { return dim_; }
  const IntMatrix& basis() const { return basis_; }
  const Int& index() const { return index_; }

  // s_1 | s_2 | ... | s_d with Z^d / L isomorphic to the direct sum of Z/s_i.
  const IntVec& smith_invariants() const { return smith_; }

  // Largest Smith invariant: the least e with e * Z^d contained in L.
  const Int& exponent() const { return smith_.back(); }

  bool contains(const IntVec& x) const;

  // Unique representative of x + L with rep[i] in [0, basis[i][i]).
  IntVec reduce(const IntVec& x) const;

  bool is_cartesian() const;
  IntVec moduli() const;  // diagonal; meaningful for Cartesian lattices

  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
  bool operator<(const Lattice& o) const;

  std::string to_string() const { return basis_.to_string(); }

 private:
  Lattice() = default;
  static Lattice from_canonical(IntMatrix basis);

  size_t dim_ = 0;
  IntMatrix basis_;
  Int index_;
  IntVec smith_;
};

Lattice lattice_intersection(const Lattice& a, const Lattice& b);

}  // namespace lattile
