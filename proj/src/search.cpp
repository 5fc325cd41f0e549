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

#include "search.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "errors.hpp"
#include "matrix.hpp"

namespace lattile {

namespace {

std::vector<int64_t> sorted_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    out.push_back(i);
    if (i != n / i) out.push_back(n / i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All full-rank lattices between period * Z^d and Z^d with index <= max_index,
// via their Hermite bases: pivots divide the period, the entries above a
// pivot stay below it, and period * e_i membership prunes the bases whose
// quotient exponent exceeds the period.
std::vector<Lattice> candidate_lattices(const SearchConfig& cfg) {
  const size_t d = cfg.dim;
  const std::vector<int64_t> divs = sorted_divisors(cfg.period);

  std::vector<Lattice> out;
  IntMatrix basis(d, d);
  std::vector<size_t> diag_pick(d, 0);

  auto emit_if_periodic = [&]() {
    Lattice lat = Lattice::from_generators(basis);
    for (size_t i = 0; i < d; ++i) {
      IntVec pe(d, 0);
      pe[i] = cfg.period;
      if (!lat.contains(pe)) return;
    }
    out.push_back(std::move(lat));
  };

  // Off-diagonal slots (i, j), i < j, in row-major order; entry range is
  // [0, basis[j][j]).
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) slots.emplace_back(i, j);

  auto fill_slots = [&](auto&& self, size_t s) -> void {
    if (s == slots.size()) {
      emit_if_periodic();
      return;
    }
    auto [i, j] = slots[s];
    for (Int e = 0; e < basis.at(j, j); ++e) {
      basis.at(i, j) = e;
      self(self, s + 1);
    }
    basis.at(i, j) = 0;
  };

  bool more = true;
  while (more) {
    Int index = 1;
    for (size_t i = 0; i < d; ++i) {
      basis.at(i, i) = divs[diag_pick[i]];
      index *= basis.at(i, i);
    }
    if (index <= cfg.max_index) fill_slots(fill_slots, 0);
    more = false;
    for (size_t pos = d; pos-- > 0;) {
      if (++diag_pick[pos] < divs.size()) {
        more = true;
        break;
      }
      diag_pick[pos] = 0;
    }
  }

  std::sort(out.begin(), out.end(), [](const Lattice& a, const Lattice& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    return a < b;
  });
  return out;
}

struct Bitset {
  std::vector<uint64_t> w;

  explicit Bitset(size_t bits) : w((bits + 63) / 64, 0) {}
  void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & o.w[i]) return true;
    return false;
  }
  void add(const Bitset& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  void remove(const Bitset& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
};

}  // namespace

std::vector<Coset> enumerate_candidate_cosets(const SearchConfig& cfg) {
  if (cfg.dim < 1) throw BadDimension("search dimension must be at least 1");
  if (cfg.period < 1) throw BadPeriod("search period must be positive");

  std::vector<Coset> out;
  for (const Lattice& lat : candidate_lattices(cfg)) {
    IntVec rep(cfg.dim, 0);
    bool more = true;
    while (more) {
      if (out.size() >= cfg.candidate_budget)
        throw BudgetExceeded("more than " + std::to_string(cfg.candidate_budget) +
                             " candidate cosets");
      out.emplace_back(lat, rep);
      more = false;
      for (size_t pos = cfg.dim; pos-- > 0;) {
        rep[pos] += 1;
        if (rep[pos] < lat.basis().at(pos, pos)) {
          more = true;
          break;
        }
        rep[pos] = 0;
      }
    }
  }
  return out;
}

SearchResult search_exotic_tilings(const SearchConfig& cfg) {
  return search_with_candidates(cfg, enumerate_candidate_cosets(cfg));
}

SearchResult search_with_candidates(const SearchConfig& cfg,
                                    const std::vector<Coset>& candidates) {
  if (cfg.dim < 1) throw BadDimension("search dimension must be at least 1");
  if (cfg.period < 1) throw BadPeriod("search period must be positive");
  Int points = 1;
  for (size_t i = 0; i < cfg.dim; ++i) {
    points *= cfg.period;
    if (points > cfg.torus_budget)
      throw TorusTooLarge("search torus needs " + std::to_string(cfg.period) +
                          "^" + std::to_string(cfg.dim) + " cells, budget is " +
                          std::to_string(cfg.torus_budget));
  }
  const size_t total = points.get_ui();
  if (candidates.size() * total > size_t(1) << 30)
    throw BudgetExceeded("candidate bitmaps would exceed memory budget");

  // Lattice ids for the pairwise-distinct constraint.
  std::vector<Lattice> unique_lats;
  for (const Coset& c : candidates) unique_lats.push_back(c.lattice());
  std::sort(unique_lats.begin(), unique_lats.end());
  unique_lats.erase(std::unique(unique_lats.begin(), unique_lats.end()),
                    unique_lats.end());
  auto lattice_id = [&](const Lattice& l) {
    return static_cast<size_t>(
        std::lower_bound(unique_lats.begin(), unique_lats.end(), l) -
        unique_lats.begin());
  };

  std::vector<Bitset> masks;
  std::vector<size_t> mask_size;
  std::vector<size_t> lat_of;
  masks.reserve(candidates.size());
  for (const Coset& c : candidates) {
    Bitset m(total);
    std::vector<int64_t> cells = coset_torus_cells(c, cfg.period);
    for (int64_t cell : cells) m.set(size_t(cell));
    masks.push_back(std::move(m));
    mask_size.push_back(cells.size());
    lat_of.push_back(lattice_id(c.lattice()));
  }
  std::vector<std::vector<uint32_t>> at_cell(total);
  for (uint32_t ci = 0; ci < candidates.size(); ++ci)
    for (size_t cell = 0; cell < total; ++cell)
      if (masks[ci].test(cell)) at_cell[cell].push_back(ci);

  SearchResult result;
  Bitset covered(total);
  size_t covered_count = 0;
  std::vector<uint32_t> chosen;
  std::vector<int> lattice_used(unique_lats.size(), 0);
  std::set<std::vector<Coset>> canon;
  bool aborted = false;

  auto admissible = [&](uint32_t ci) {
    if (cfg.require_distinct_lattices && lattice_used[lat_of[ci]]) return false;
    return !masks[ci].intersects(covered);
  };

  auto descend = [&](auto&& self) -> void {
    if (aborted) return;
    if (covered_count == total) {
      if (chosen.size() >= 2) {
        std::vector<Coset> tiles;
        for (uint32_t ci : chosen) tiles.push_back(candidates[ci]);
        TilingInstance sol = canonicalize_solution(TilingInstance(std::move(tiles)),
                                                   cfg.symmetry_reduction);
        canon.insert(sol.tiles());
      }
      return;
    }
    if (cfg.max_tiles != 0 && chosen.size() >= cfg.max_tiles) return;

    // Fail-first: branch on the uncovered cell with fewest admissible tiles.
    size_t best_cell = total;
    size_t best_count = SIZE_MAX;
    for (size_t cell = 0; cell < total; ++cell) {
      if (covered.test(cell)) continue;
      size_t n = 0;
      for (uint32_t ci : at_cell[cell])
        if (admissible(ci)) ++n;
      if (n < best_count) {
        best_count = n;
        best_cell = cell;
        if (n == 0) return;
      }
    }
    for (uint32_t ci : at_cell[best_cell]) {
      if (!admissible(ci)) continue;
      if (result.nodes_explored >= cfg.node_budget) {
        aborted = true;
        return;
      }
      ++result.nodes_explored;
      covered.add(masks[ci]);
      covered_count += mask_size[ci];
      ++lattice_used[lat_of[ci]];
      chosen.push_back(ci);

      self(self);

      chosen.pop_back();
      --lattice_used[lat_of[ci]];
      covered.remove(masks[ci]);
      covered_count -= mask_size[ci];
    }
  };
  descend(descend);

  result.exhausted = !aborted;
  for (const std::vector<Coset>& tiles : canon) {
    TilingInstance inst(tiles);
    CoverageReport check = verify_tiling_torus(inst, cfg.torus_budget);
    if (!check.is_tiling)
      throw Error("search produced a family that fails re-verification");
    if (cfg.require_distinct_lattices && !check.distinct_lattices)
      throw Error("search produced a translate pair despite the distinctness constraint");
    result.tilings.push_back(std::move(inst));
  }
  return result;
}

TilingInstance canonicalize_solution(const TilingInstance& t, bool use_symmetry) {
  std::vector<Coset> base = t.tiles();
  std::sort(base.begin(), base.end());
  if (!use_symmetry) return TilingInstance(std::move(base));

  const size_t d = t.dim();
  Int points = 1;
  for (size_t i = 0; i < d; ++i) {
    points *= t.period();
    if (points > kDefaultTorusBudget)
      throw TorusTooLarge("symmetry orbit over " + to_string(t.period()) + "^" +
                          std::to_string(d) + " translations is too large");
  }
  const int64_t period = t.period().get_si();

  std::vector<Coset> best = std::move(base);
  std::vector<size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Coordinate relabeling y[i] = x[perm[i]] applied to every tile.
    std::vector<Lattice> lats;
    std::vector<IntVec> reps;
    for (const Coset& c : t.tiles()) {
      IntMatrix gen(d, d);
      IntVec rep(d);
      for (size_t i = 0; i < d; ++i) {
        rep[i] = c.rep()[perm[i]];
        for (size_t j = 0; j < d; ++j) gen.at(i, j) = c.lattice().basis().at(perm[i], perm[j]);
      }
      lats.push_back(Lattice::from_generators(gen));
      reps.push_back(std::move(rep));
    }
    IntVec shift(d, 0);
    bool more = true;
    while (more) {
      std::vector<Coset> tiles;
      for (size_t ti = 0; ti < lats.size(); ++ti) {
        IntVec v = reps[ti];
        for (size_t i = 0; i < d; ++i) v[i] += shift[i];
        tiles.emplace_back(lats[ti], v);
      }
      std::sort(tiles.begin(), tiles.end());
      if (tiles < best) best = std::move(tiles);
      more = false;
      for (size_t pos = d; pos-- > 0;) {
        shift[pos] += 1;
        if (shift[pos] < period) {
          more = true;
          break;
        }
        shift[pos] = 0;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return TilingInstance(std::move(best));
}

}  // namespace lattile
