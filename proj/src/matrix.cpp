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

#include "matrix.hpp"

#include <sstream>
#include <utility>

#include "errors.hpp"

namespace lattile {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows.size() ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged initializer for IntMatrix");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntVec IntMatrix::row(size_t i) const {
  IntVec r(cols_);
  for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

IntVec IntMatrix::apply_row(const IntVec& x) const {
  if (x.size() != rows_) throw DimensionMismatch("row vector length mismatch");
  IntVec out(cols_);
  for (size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < cols_; ++j) out[j] += x[i] * at(i, j);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    os << lattile::to_string(row(i));
  }
  os << ']';
  return os.str();
}

namespace {

void swap_rows(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void negate_row(IntMatrix& m, size_t i) {
  for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row_a -= q * row_b
void submul_row(IntMatrix& m, size_t a, size_t b, const Int& q) {
  if (q == 0) return;
  for (size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

size_t hnf_rows_impl(IntMatrix& m, IntMatrix* u) {
  const size_t nrows = m.rows();
  const size_t ncols = m.cols();
  size_t pivot_row = 0;
  for (size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
    size_t nz = pivot_row;
    while (nz < nrows && m.at(nz, col) == 0) ++nz;
    if (nz == nrows) continue;
    swap_rows(m, pivot_row, nz);
    if (u) swap_rows(*u, pivot_row, nz);

    // Euclidean elimination below the pivot.
    for (size_t i = pivot_row + 1; i < nrows; ++i) {
      while (m.at(i, col) != 0) {
        Int q = m.at(i, col) / m.at(pivot_row, col);  // truncated
        submul_row(m, i, pivot_row, q);
        if (u) submul_row(*u, i, pivot_row, q);
        if (m.at(i, col) != 0) {
          swap_rows(m, pivot_row, i);
          if (u) swap_rows(*u, pivot_row, i);
        }
      }
    }
    if (m.at(pivot_row, col) < 0) {
      negate_row(m, pivot_row);
      if (u) negate_row(*u, pivot_row);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(m.at(i, col), m.at(pivot_row, col));
      submul_row(m, i, pivot_row, q);
      if (u) submul_row(*u, i, pivot_row, q);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

size_t hnf_rows(IntMatrix& m) { return hnf_rows_impl(m, nullptr); }

size_t hnf_rows(IntMatrix& m, IntMatrix& u) {
  u = IntMatrix::identity(m.rows());
  return hnf_rows_impl(m, &u);
}

namespace {

void swap_cols(IntMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// col_a -= q * col_b
void submul_col(IntMatrix& m, size_t a, size_t b, const Int& q) {
  if (q == 0) return;
  for (size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition out;
  out.s = a;
  out.u = IntMatrix::identity(a.rows());
  out.v = IntMatrix::identity(a.cols());
  IntMatrix& s = out.s;
  const size_t n = std::min(a.rows(), a.cols());

  for (size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      size_t pi = 0, pj = 0;
      bool found = false;
      for (size_t i = t; i < s.rows(); ++i)
        for (size_t j = t; j < s.cols(); ++j) {
          if (s.at(i, j) == 0) continue;
          if (!found || cmp(abs(s.at(i, j)), abs(s.at(pi, pj))) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        return out;  // trailing block all zero
      }
      swap_rows(s, t, pi);
      swap_rows(out.u, t, pi);
      swap_cols(s, t, pj);
      swap_cols(out.v, t, pj);
      if (s.at(t, t) < 0) {
        negate_row(s, t);
        negate_row(out.u, t);
      }

      bool dirty = false;
      for (size_t i = t + 1; i < s.rows(); ++i) {
        Int q = s.at(i, t) / s.at(t, t);
        submul_row(s, i, t, q);
        submul_row(out.u, i, t, q);
        if (s.at(i, t) != 0) dirty = true;
      }
      for (size_t j = t + 1; j < s.cols(); ++j) {
        Int q = s.at(t, j) / s.at(t, t);
        submul_col(s, j, t, q);
        submul_col(out.v, j, t, q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and restart this step with a smaller pivot.
      bool divides = true;
      for (size_t i = t + 1; i < s.rows() && divides; ++i)
        for (size_t j = t + 1; j < s.cols() && divides; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            for (size_t jj = 0; jj < s.cols(); ++jj) s.at(t, jj) += s.at(i, jj);
            for (size_t jj = 0; jj < out.u.cols(); ++jj) out.u.at(t, jj) += out.u.at(i, jj);
            divides = false;
          }
        }
      if (divides) break;
    }
  }
  return out;
}

}  // namespace lattile
