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

#include "fourier.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"
#include "matrix.hpp"

namespace lattile {

namespace {

void check_dim(const Lattice& lat, const DualVector& k) {
  if (k.size() != lat.dim()) {
    throw DimensionMismatch("frequency has " + std::to_string(k.size()) +
                            " components, lattice dimension is " +
                            std::to_string(lat.dim()));
  }
}

}  // namespace

bool is_dual_vector(const Lattice& lat, const DualVector& k) {
  check_dim(lat, k);
  const IntMatrix& b = lat.basis();
  for (size_t i = 0; i < lat.dim(); ++i) {
    Rat dot(0);
    for (size_t j = 0; j < lat.dim(); ++j) dot += k[j] * b.at(i, j);
    if (dot.get_den() != 1) return false;
  }
  return true;
}

std::vector<DualVector> dual_set(const Lattice& lat) {
  const size_t d = lat.dim();
  // With u * basis * v = diag(s_1, ..., s_d), the characters of the quotient
  // are indexed by t in prod [0, s_i); pulling each back through the column
  // transform gives the frequency k = v * (t_1/s_1, ..., t_d/s_d) mod 1.
  SmithDecomposition sd = smith_normal_form(lat.basis());
  std::vector<DualVector> out;
  IntVec t(d, 0);
  bool more = true;
  while (more) {
    DualVector k(d);
    for (size_t j = 0; j < d; ++j) {
      Rat kj(0);
      for (size_t i = 0; i < d; ++i) {
        if (t[i] == 0) continue;
        kj += make_rat(t[i] * sd.v.at(j, i), sd.s.at(i, i));
      }
      k[j] = frac(kj);
    }
    out.push_back(std::move(k));
    more = false;
    for (size_t pos = d; pos-- > 0;) {
      t[pos] += 1;
      if (t[pos] < sd.s.at(pos, pos)) {
        more = true;
        break;
      }
      t[pos] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  for (size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1] == out[i])
      throw Error("duplicate frequency in dual set; Smith transform is broken");
  }
  if (Int(out.size()) != lat.index())
    throw Error("dual set size disagrees with lattice index");
  return out;
}

CyclotomicSum coset_coefficient(const Coset& c, const DualVector& k) {
  check_dim(c.lattice(), k);
  if (!is_dual_vector(c.lattice(), k)) return CyclotomicSum::zero();
  Rat angle(0);
  for (size_t j = 0; j < k.size(); ++j) angle -= k[j] * c.rep()[j];
  return CyclotomicSum::term(Rat(1) / Rat(c.index()), frac(angle));
}

CyclotomicSum coefficient_by_averaging(const Coset& c, const DualVector& k,
                                       int64_t period) {
  const size_t d = c.dim();
  check_dim(c.lattice(), k);
  if (period <= 0) throw BadPeriod("averaging period must be positive");
  for (size_t i = 0; i < d; ++i) {
    IntVec pe(d, 0);
    pe[i] = period;
    if (!c.lattice().contains(pe))
      throw BadPeriod("period " + std::to_string(period) +
                      " does not collapse the lattice onto the torus");
  }
  for (size_t j = 0; j < d; ++j) {
    if (frac(k[j] * period) != 0)
      throw BadPeriod("character is not periodic modulo " +
                      std::to_string(period));
  }
  Int cells = 1;
  for (size_t i = 0; i < d; ++i) {
    cells *= period;
    if (cells > kDefaultTorusBudget)
      throw TorusTooLarge("averaging torus exceeds " +
                          to_string(Int(kDefaultTorusBudget)) + " cells");
  }
  CyclotomicSum sum;
  IntVec x(d, 0);
  bool more = true;
  while (more) {
    if (c.contains(x)) {
      Rat angle(0);
      for (size_t j = 0; j < d; ++j) angle -= k[j] * x[j];
      sum.add_term(Rat(1), frac(angle));
    }
    more = false;
    for (size_t pos = d; pos-- > 0;) {
      x[pos] += 1;
      if (x[pos] < period) {
        more = true;
        break;
      }
      x[pos] = 0;
    }
  }
  return sum.scaled(Rat(1) / Rat(cells));
}

TranslateWitness mirsky_newman_witness(const TilingInstance& t,
                                       int64_t torus_budget) {
  if (t.tiles().size() < 2)
    throw NotATiling("translate-pair extraction needs at least two tiles");
  for (const Coset& c : t.tiles()) {
    if (!c.lattice().is_cartesian())
      throw NotCartesian("tile " + c.to_string() +
                         " is not a product of arithmetic progressions");
  }
  CoverageReport report = verify_tiling_torus(t, torus_budget);
  if (!report.is_tiling) {
    std::string reason = "cosets do not tile";
    if (report.first_gap) reason += "; uncovered point " + to_string(*report.first_gap);
    if (report.first_overlap)
      reason += "; overlap at " + to_string(report.first_overlap->point);
    throw NotATiling(reason);
  }

  size_t m = 0;
  for (size_t i = 1; i < t.tiles().size(); ++i) {
    if (t.tiles()[i].index() > t.tiles()[m].index()) m = i;
  }
  const Coset& top = t.tiles()[m];
  IntVec moduli = top.lattice().moduli();
  DualVector probe(t.dim());
  for (size_t j = 0; j < t.dim(); ++j) probe[j] = frac(make_rat(1, moduli[j]));

  // The coefficients at the probe frequency sum to zero, and the probe is
  // dual only to lattices whose index matches the maximal one, so some other
  // tile must answer with a nonzero coefficient and an identical lattice.
  for (size_t j = 0; j < t.tiles().size(); ++j) {
    if (j == m) continue;
    if (coset_coefficient(t.tiles()[j], probe).empty()) continue;
    if (t.tiles()[j].lattice() != top.lattice())
      throw WitnessNotFound("probe answered by a different lattice: " +
                            t.tiles()[j].lattice().to_string());
    return TranslateWitness{m, j, probe};
  }
  throw WitnessNotFound("no tile shares the maximal lattice " +
                        top.lattice().to_string());
}

}  // namespace lattile
