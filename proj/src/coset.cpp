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

#include "coset.hpp"

#include <sstream>

#include "errors.hpp"

namespace lattile {

Coset::Coset(Lattice lattice, const IntVec& v) : lattice_(std::move(lattice)) {
  if (v.size() != lattice_.dim()) throw DimensionMismatch("representative dimension mismatch");
  rep_ = lattice_.reduce(v);
}

bool Coset::contains(const IntVec& x) const {
  if (x.size() != dim()) throw DimensionMismatch("point dimension mismatch");
  IntVec diff(x.size());
  for (size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - rep_[i];
  return lattice_.contains(diff);
}

bool Coset::operator<(const Coset& o) const {
  int c = cmp(lattice_.index(), o.lattice_.index());
  if (c != 0) return c < 0;
  if (lattice_ != o.lattice_) return lattice_ < o.lattice_;
  for (size_t i = 0; i < rep_.size() && i < o.rep_.size(); ++i) {
    c = cmp(rep_[i], o.rep_[i]);
    if (c != 0) return c < 0;
  }
  return rep_.size() < o.rep_.size();
}

std::string Coset::to_string() const {
  std::ostringstream os;
  os << lattile::to_string(rep_) << " + " << lattice_.to_string();
  return os.str();
}

std::optional<Coset> coset_intersection(const Coset& a, const Coset& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("coset dimensions differ");
  const size_t d = a.dim();
  Lattice meet = lattice_intersection(a.lattice(), b.lattice());

  // A common point solves c * B_a - c' * B_b = rep_b - rep_a over Z.
  IntMatrix stacked(2 * d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      stacked.at(i, j) = a.lattice().basis().at(i, j);
      stacked.at(d + i, j) = -b.lattice().basis().at(i, j);
    }
  IntMatrix u;
  size_t rank = hnf_rows(stacked, u);
  if (rank != d) throw SingularBasis("stacked coset system lost rank");

  // Solve y * H = t on the top block; integrality failure means disjoint.
  IntVec t(d);
  for (size_t j = 0; j < d; ++j) t[j] = b.rep()[j] - a.rep()[j];
  IntVec y(2 * d);
  for (size_t j = 0; j < d; ++j) {
    Int r = t[j];
    for (size_t i = 0; i < j; ++i) r -= y[i] * stacked.at(i, j);
    if (!exact_div(r, stacked.at(j, j), y[j])) return std::nullopt;
  }
  IntVec x = u.apply_row(y);  // x = y * U solves x * A = t
  IntVec point(d);
  for (size_t j = 0; j < d; ++j) {
    point[j] = a.rep()[j];
    for (size_t i = 0; i < d; ++i) point[j] += x[i] * a.lattice().basis().at(i, j);
  }
  Coset result(std::move(meet), point);
  if (!a.contains(result.rep()) || !b.contains(result.rep()))
    throw Error("coset intersection produced a point outside its inputs");
  return result;
}

bool is_translate_pair(const Coset& a, const Coset& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("coset dimensions differ");
  return a.lattice() == b.lattice();
}

}  // namespace lattile
