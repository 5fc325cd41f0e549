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

#include "lattice.hpp"

#include "errors.hpp"

namespace lattile {

Lattice Lattice::from_canonical(IntMatrix basis) {
  Lattice l;
  l.dim_ = basis.cols();
  l.index_ = 1;
  for (size_t i = 0; i < l.dim_; ++i) l.index_ *= basis.at(i, i);
  SmithDecomposition snf = smith_normal_form(basis);
  l.smith_.resize(l.dim_);
  Int prod = 1;
  for (size_t i = 0; i < l.dim_; ++i) {
    l.smith_[i] = snf.s.at(i, i);
    prod *= l.smith_[i];
  }
  if (prod != l.index_) throw Error("Smith invariant product disagrees with index");
  l.basis_ = std::move(basis);
  return l;
}

Lattice Lattice::from_generators(const IntMatrix& basis) {
  if (basis.cols() == 0 || basis.rows() < basis.cols())
    throw DimensionMismatch("generator matrix needs at least d rows of length d");
  IntMatrix h = basis;
  size_t rank = hnf_rows(h);
  if (rank < h.cols()) throw SingularBasis("generators do not span a full-rank lattice");
  IntMatrix top(h.cols(), h.cols());
  for (size_t i = 0; i < h.cols(); ++i)
    for (size_t j = 0; j < h.cols(); ++j) top.at(i, j) = h.at(i, j);
  return from_canonical(std::move(top));
}

Lattice Lattice::cartesian(const IntVec& moduli) {
  if (moduli.empty()) throw DimensionMismatch("empty modulus list");
  for (const Int& a : moduli)
    if (a <= 0) throw SingularBasis("Cartesian modulus must be positive");
  return from_canonical(IntMatrix::diagonal(moduli));
}

Lattice Lattice::standard(size_t dim) {
  if (dim == 0) throw DimensionMismatch("dimension must be positive");
  return from_canonical(IntMatrix::identity(dim));
}

bool Lattice::contains(const IntVec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point dimension mismatch");
  // Solve c * B = x by column substitution; B upper triangular.
  IntVec c(dim_);
  for (size_t j = 0; j < dim_; ++j) {
    Int r = x[j];
    for (size_t i = 0; i < j; ++i) r -= c[i] * basis_.at(i, j);
    if (!exact_div(r, basis_.at(j, j), c[j])) return false;
  }
  return true;
}

IntVec Lattice::reduce(const IntVec& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point dimension mismatch");
  IntVec w = x;
  for (size_t i = 0; i < dim_; ++i) {
    Int q = floor_div(w[i], basis_.at(i, i));
    if (q == 0) continue;
    for (size_t j = i; j < dim_; ++j) w[j] -= q * basis_.at(i, j);
  }
  return w;
}

bool Lattice::is_cartesian() const {
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = i + 1; j < dim_; ++j)
      if (basis_.at(i, j) != 0) return false;
  return true;
}

IntVec Lattice::moduli() const {
  IntVec d(dim_);
  for (size_t i = 0; i < dim_; ++i) d[i] = basis_.at(i, i);
  return d;
}

bool Lattice::operator<(const Lattice& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) {
      int c = cmp(basis_.at(i, j), o.basis_.at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

namespace {

// Rows of m * B^{-T} for upper-triangular B; m must clear all denominators.
// These rows generate m times the dual lattice of B's row lattice.
IntMatrix scaled_inverse_transpose(const IntMatrix& b, const Int& m) {
  const size_t d = b.rows();
  // Solve B * X = m * I column by column (back substitution, exact).
  IntMatrix x(d, d);
  for (size_t col = 0; col < d; ++col) {
    std::vector<Rat> xc(d);
    for (size_t i = d; i-- > 0;) {
      Rat r = (i == col) ? Rat(m) : Rat(0);
      for (size_t j = i + 1; j < d; ++j) r -= Rat(b.at(i, j)) * xc[j];
      xc[i] = r / Rat(b.at(i, i));
      xc[i].canonicalize();
    }
    for (size_t i = 0; i < d; ++i) {
      if (xc[i].get_den() != 1)
        throw SingularBasis("scale does not clear dual denominators");
      // X^T row col gets entry (i, col) of X.
      x.at(col, i) = xc[i].get_num();
    }
  }
  return x;
}

}  // namespace

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("lattice dimensions differ");
  const size_t d = a.dim();
  const Int m = lcm(a.index(), b.index());

  // Intersection via duality: (A ∩ B)* = A* + B*. Stack the scaled duals,
  // canonicalize the sum, then dualize back with the same scale.
  IntMatrix stacked(2 * d, d);
  IntMatrix da = scaled_inverse_transpose(a.basis(), m);
  IntMatrix db = scaled_inverse_transpose(b.basis(), m);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      stacked.at(i, j) = da.at(i, j);
      stacked.at(d + i, j) = db.at(i, j);
    }
  size_t rank = hnf_rows(stacked);
  if (rank != d) throw SingularBasis("dual sum lost rank");
  IntMatrix h(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) h.at(i, j) = stacked.at(i, j);

  IntMatrix result = scaled_inverse_transpose(h, m);
  return Lattice::from_generators(result);
}

}  // namespace lattile
