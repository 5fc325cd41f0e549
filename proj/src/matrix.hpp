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

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "numeric.hpp"

namespace lattile {

// Dense integer matrix, row-major. Rows act as lattice generators throughout.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(size_t n);
  static IntMatrix diagonal(const IntVec& d);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Int& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(size_t i) const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  IntMatrix multiply(const IntMatrix& rhs) const;

  // x * M for a row vector x.
  IntVec apply_row(const IntVec& x) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Int> data_;
};

// Row-style Hermite normal form: unimodular row operations only, pivots
// positive, entries above each pivot reduced into [0, pivot). Zero rows sink
// to the bottom. Returns the number of nonzero rows (the rank).
size_t hnf_rows(IntMatrix& m);

// Same, tracking the transform: on return u * original == m.
size_t hnf_rows(IntMatrix& m, IntMatrix& u);

struct SmithDecomposition {
  IntMatrix s;  // diagonal, s(i,i) >= 0, each dividing the next
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform, u * a * v == s
};

// Smith normal form by elementary operations over Z.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace lattile
