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

#include "tiling.hpp"

#include <random>
#include <set>
#include <string>

#include "errors.hpp"
#include "fourier.hpp"

namespace lattile {

TilingInstance::TilingInstance(std::vector<Coset> tiles)
    : tiles_(std::move(tiles)) {
  if (tiles_.empty()) throw BadDimension("a tiling instance needs at least one tile");
  dim_ = tiles_[0].dim();
  period_ = 1;
  for (const Coset& c : tiles_) {
    if (c.dim() != dim_)
      throw DimensionMismatch("tile " + c.to_string() + " has dimension " +
                              std::to_string(c.dim()) + ", expected " +
                              std::to_string(dim_));
    period_ = lcm(period_, c.lattice().exponent());
  }
  for (const Coset& c : tiles_) {
    for (size_t i = 0; i < dim_; ++i) {
      IntVec pe(dim_, 0);
      pe[i] = period_;
      if (!c.lattice().contains(pe))
        throw Error("period does not annihilate every tile quotient");
    }
  }
}

bool TilingInstance::all_cartesian() const {
  for (const Coset& c : tiles_)
    if (!c.lattice().is_cartesian()) return false;
  return true;
}

std::vector<std::pair<size_t, size_t>> TilingInstance::translate_pairs() const {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t i = 0; i < tiles_.size(); ++i)
    for (size_t j = i + 1; j < tiles_.size(); ++j)
      if (tiles_[i].lattice() == tiles_[j].lattice()) out.emplace_back(i, j);
  return out;
}

std::vector<int64_t> coset_torus_cells(const Coset& c, int64_t period) {
  const size_t d = c.dim();
  const IntMatrix& b = c.lattice().basis();
  if (period <= 0) throw BadPeriod("torus period must be positive");
  // Pivot divisibility is equivalent to period * Z^d lying inside the
  // lattice, which the caller guarantees by using the instance period.
  std::vector<int64_t> range(d);
  std::vector<std::vector<int64_t>> rows(d, std::vector<int64_t>(d));
  std::vector<int64_t> rep(d);
  for (size_t i = 0; i < d; ++i) {
    Int q;
    if (!exact_div(Int(period), b.at(i, i), q))
      throw BadPeriod("period " + std::to_string(period) +
                      " is not a multiple of pivot " + to_string(b.at(i, i)));
    range[i] = q.get_si();
    rep[i] = c.rep()[i].get_si();
    for (size_t j = 0; j < d; ++j) rows[i][j] = b.at(i, j).get_si();
  }
  Int count = 1;
  for (size_t i = 0; i < d; ++i) count *= range[i];
  std::vector<int64_t> cells;
  cells.reserve(count.get_ui());

  // q |-> (rep + q_0 row_0 + ... + q_{d-1} row_{d-1}) mod period is injective
  // on prod [0, range_i): at the first coordinate where two multi-indices
  // differ, the images differ by a nonzero multiple of the pivot smaller in
  // magnitude than the period.
  std::vector<int64_t> q(d, 0);
  bool more = true;
  while (more) {
    int64_t flat = 0;
    for (size_t j = 0; j < d; ++j) {
      int64_t x = rep[j];
      for (size_t i = 0; i <= j; ++i) x += q[i] * rows[i][j];
      flat = flat * period + x % period;
    }
    cells.push_back(flat);
    more = false;
    for (size_t pos = d; pos-- > 0;) {
      if (++q[pos] < range[pos]) {
        more = true;
        break;
      }
      q[pos] = 0;
    }
  }
  return cells;
}

namespace {

IntVec decode_point(int64_t flat, int64_t period, size_t d) {
  IntVec x(d);
  for (size_t pos = d; pos-- > 0;) {
    x[pos] = flat % period;
    flat /= period;
  }
  return x;
}

void fill_common(CoverageReport& r, const TilingInstance& t) {
  r.density = 0;
  for (const Coset& c : t.tiles()) r.density += Rat(1) / Rat(c.index());
  r.distinct_lattices = t.translate_pairs().empty();
  r.trivial = t.tiles().size() < 2;
}

}  // namespace

CoverageReport verify_tiling_torus(const TilingInstance& t, int64_t torus_budget) {
  CoverageReport r;
  fill_common(r, t);

  Int points = 1;
  for (size_t i = 0; i < t.dim(); ++i) {
    points *= t.period();
    if (points > torus_budget)
      throw TorusTooLarge("verification torus needs " +
                          to_string(t.period()) + "^" +
                          std::to_string(t.dim()) + " cells, budget is " +
                          std::to_string(torus_budget));
  }
  const int64_t period = t.period().get_si();
  const int64_t total = points.get_si();

  std::vector<uint8_t> cover(static_cast<size_t>(total), 0);
  for (const Coset& c : t.tiles()) {
    for (int64_t cell : coset_torus_cells(c, period)) {
      uint8_t& n = cover[static_cast<size_t>(cell)];
      if (n < 255) ++n;
    }
  }

  for (int64_t cell = 0; cell < total; ++cell) {
    uint8_t n = cover[static_cast<size_t>(cell)];
    if (n == 0 && !r.first_gap) {
      r.first_gap = decode_point(cell, period, t.dim());
    } else if (n >= 2 && !r.first_overlap) {
      IntVec x = decode_point(cell, period, t.dim());
      CoverageReport::Overlap ov{x, 0, 0};
      bool have_a = false;
      for (size_t j = 0; j < t.tiles().size(); ++j) {
        if (!t.tiles()[j].contains(x)) continue;
        if (!have_a) {
          ov.tile_a = j;
          have_a = true;
        } else {
          ov.tile_b = j;
          break;
        }
      }
      r.first_overlap = ov;
    }
    if (r.first_gap && r.first_overlap) break;
  }
  r.is_tiling = !r.first_gap && !r.first_overlap;
  return r;
}

CoverageReport verify_tiling_fourier(const TilingInstance& t) {
  CoverageReport r;
  fill_common(r, t);

  // The coefficient sum at k = 0 is the density, so a density away from 1
  // refutes the cover before any dual set is enumerated.
  bool ok = (r.density == 1);
  if (ok) {
    std::set<DualVector> frequencies;
    for (const Coset& c : t.tiles()) {
      for (DualVector& k : dual_set(c.lattice())) frequencies.insert(std::move(k));
    }
    const DualVector zero(t.dim(), Rat(0));
    for (const DualVector& k : frequencies) {
      CyclotomicSum sum;
      for (const Coset& c : t.tiles()) sum += coset_coefficient(c, k);
      ok = (k == zero) ? sum.equals(CyclotomicSum::one()) : sum.is_zero();
      if (!ok) break;
    }
  }
  r.is_tiling = ok;
  return r;
}

TilingInstance counterexample_tiling(size_t dim) {
  if (dim < 3) throw BadDimension("the distinct-lattice tiling needs dimension >= 3");
  auto pad_rep = [dim](long a, long b, long c) {
    IntVec v(dim, 0);
    v[0] = a;
    v[1] = b;
    v[2] = c;
    return v;
  };
  auto cart = [dim](long a, long b, long c) {
    IntVec m(dim, 1);
    m[0] = a;
    m[1] = b;
    m[2] = c;
    return Lattice::cartesian(m);
  };
  // Fourth lattice: x_1 = x_2 = x_3 mod 2, free on the remaining axes.
  IntMatrix gen(dim, dim);
  gen.at(0, 0) = 1;
  gen.at(0, 1) = 1;
  gen.at(0, 2) = 1;
  gen.at(1, 1) = 2;
  gen.at(2, 2) = 2;
  for (size_t i = 3; i < dim; ++i) gen.at(i, i) = 1;

  std::vector<Coset> tiles;
  tiles.emplace_back(cart(2, 2, 1), pad_rep(0, 1, 0));
  tiles.emplace_back(cart(1, 2, 2), pad_rep(0, 0, 1));
  tiles.emplace_back(cart(2, 1, 2), pad_rep(1, 0, 0));
  tiles.emplace_back(Lattice::from_generators(gen), pad_rep(0, 0, 0));
  return TilingInstance(std::move(tiles));
}

TilingInstance random_cartesian_tiling(size_t dim, long max_index, uint64_t seed,
                                       int64_t torus_cap) {
  if (dim < 1) throw BadDimension("dimension must be at least 1");
  if (max_index < 2) throw Error("splitting requires max_index >= 2");

  struct Block {
    IntVec moduli;
    IntVec rep;
  };
  std::vector<Block> work{{IntVec(dim, 1), IntVec(dim, 0)}};
  Int period = 1;
  std::mt19937_64 rng(seed);

  const uint64_t rounds = 1 + rng() % 12;
  for (uint64_t round = 0; round < rounds; ++round) {
    struct Split {
      size_t block;
      size_t axis;
      long prime;
      Int new_period;
    };
    std::vector<Split> splits;
    for (size_t bi = 0; bi < work.size(); ++bi) {
      Int index = 1;
      for (const Int& m : work[bi].moduli) index *= m;
      for (size_t axis = 0; axis < dim; ++axis) {
        for (long p : {2L, 3L, 5L}) {
          // Keep tile indices divisors of max_index; with a cap of 4 this
          // yields progressions with moduli in {2, 4} only.
          if (index * p > max_index || max_index % (index * p) != 0) continue;
          Int exponent = 1;
          for (size_t j = 0; j < dim; ++j) {
            Int m = work[bi].moduli[j];
            if (j == axis) m *= p;
            exponent = lcm(exponent, m);
          }
          Int np = lcm(period, exponent);
          Int cells = 1;
          for (size_t j = 0; j < dim; ++j) cells *= np;
          if (cells > torus_cap) continue;
          splits.push_back({bi, axis, p, np});
        }
      }
    }
    if (splits.empty()) break;
    Split pick = splits[rng() % splits.size()];
    Block old = work[pick.block];
    work.erase(work.begin() + static_cast<long>(pick.block));
    for (long j = 0; j < pick.prime; ++j) {
      Block sub = old;
      sub.rep[pick.axis] = old.rep[pick.axis] + j * old.moduli[pick.axis];
      sub.moduli[pick.axis] = old.moduli[pick.axis] * pick.prime;
      work.push_back(std::move(sub));
    }
    period = pick.new_period;
  }

  std::vector<Coset> tiles;
  tiles.reserve(work.size());
  for (const Block& b : work)
    tiles.emplace_back(Lattice::cartesian(b.moduli), b.rep);
  return TilingInstance(std::move(tiles));
}

}  // namespace lattile
