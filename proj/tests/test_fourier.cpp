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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "fourier.hpp"
#include "oracles.hpp"
#include "tiling.hpp"

using namespace lattile;
using namespace testutil;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

}  // namespace

TEST_CASE("dual set of the full lattice is the zero vector") {
  auto dual = dual_set(Lattice::standard(3));
  REQUIRE_EQ(dual.size(), 1);
  CHECK_EQ(dual[0], rv({Rat(0), Rat(0), Rat(0)}));
}

TEST_CASE("dual set of 2Z x 3Z, in lexicographic order") {
  auto dual = dual_set(Lattice::cartesian({2, 3}));
  std::vector<RatVec> expect = {
      rv({Rat(0), Rat(0)}),      rv({Rat(0), Rat(1, 3)}),
      rv({Rat(0), Rat(2, 3)}),   rv({Rat(1, 2), Rat(0)}),
      rv({Rat(1, 2), Rat(1, 3)}), rv({Rat(1, 2), Rat(2, 3)})};
  CHECK_EQ(dual, expect);
}

TEST_CASE("dual set of the skew index-4 lattice in Z^3") {
  Lattice skew =
      Lattice::from_generators(IntMatrix{{1, 1, 1}, {0, 2, 0}, {0, 0, 2}});
  auto dual = dual_set(skew);
  std::vector<RatVec> expect = {
      rv({Rat(0), Rat(0), Rat(0)}), rv({Rat(0), Rat(1, 2), Rat(1, 2)}),
      rv({Rat(1, 2), Rat(0), Rat(1, 2)}),
      rv({Rat(1, 2), Rat(1, 2), Rat(0)})};
  CHECK_EQ(dual, expect);
}

TEST_CASE("dual set equals brute-force enumeration on small lattices") {
  std::mt19937_64 rng(0xd0a1);
  std::vector<Lattice> cases = {
      Lattice::cartesian({2, 3}),
      Lattice::from_generators(IntMatrix{{1, 1}, {0, 2}}),
      Lattice::from_generators(IntMatrix{{1, 1, 1}, {0, 2, 0}, {0, 0, 2}}),
  };
  for (int trial = 0; trial < 10; ++trial)
    cases.push_back(random_lattice(rng, 1 + static_cast<size_t>(trial % 3), 12));
  for (const Lattice& l : cases) {
    auto brute = brute_dual(l, static_cast<long>(l.index().get_si()));
    CHECK_EQ(dual_set(l), brute);
  }
}

TEST_CASE("cardinality law and invariants on 100 random lattices") {
  std::mt19937_64 rng(0xca4d);
  for (int trial = 0; trial < 100; ++trial) {
    size_t d = 1 + static_cast<size_t>(trial % 3);
    Lattice l = random_lattice(rng, d, 60);
    auto dual = dual_set(l);
    CHECK_EQ(Int(dual.size()), l.index());
    CHECK(std::is_sorted(dual.begin(), dual.end()));
    CHECK(std::adjacent_find(dual.begin(), dual.end()) == dual.end());
    for (const RatVec& k : dual) {
      CHECK(is_dual_vector(l, k));
      for (const Rat& x : k) {
        CHECK(x >= 0);
        CHECK(x < 1);
        CHECK_EQ(l.exponent() % x.get_den(), 0);
      }
    }
  }
}

TEST_CASE("dual membership predicate") {
  Lattice l = Lattice::cartesian({2, 3});
  CHECK(is_dual_vector(l, rv({Rat(1, 2), Rat(1, 3)})));
  CHECK(is_dual_vector(l, rv({Rat(0), Rat(0)})));
  CHECK_FALSE(is_dual_vector(l, rv({Rat(1, 2), Rat(1, 2)})));
  CHECK_THROWS_AS(is_dual_vector(l, rv({Rat(1, 2)})), DimensionMismatch);
}

TEST_CASE("coefficient of a coset indicator: worked examples") {
  Coset even(Lattice::cartesian({2}), {0});
  Coset odd(Lattice::cartesian({2}), {1});

  CyclotomicSum c0 = coset_coefficient(even, rv({Rat(1, 2)}));
  CHECK(c0.equals(CyclotomicSum::constant(Rat(1, 2))));

  CyclotomicSum c1 = coset_coefficient(odd, rv({Rat(1, 2)}));
  CHECK(c1.equals(CyclotomicSum::term(Rat(1, 2), Rat(1, 2))));
  CHECK(c1.equals(CyclotomicSum::constant(Rat(-1, 2))));

  CHECK(coset_coefficient(even, rv({Rat(1, 3)})).is_zero());
}

TEST_CASE("averaging oracle: worked examples") {
  Coset odd(Lattice::cartesian({2}), {1});
  CHECK(coefficient_by_averaging(odd, rv({Rat(1, 2)}), 2)
            .equals(coset_coefficient(odd, rv({Rat(1, 2)}))));

  Coset whole(Lattice::standard(1), {0});
  CHECK(coefficient_by_averaging(whole, rv({Rat(0)}), 1)
            .equals(CyclotomicSum::one()));

  Coset grid(Lattice::cartesian({2, 3}), {0, 0});
  CHECK(coefficient_by_averaging(grid, rv({Rat(1, 2), Rat(1, 3)}), 6)
            .equals(CyclotomicSum::constant(Rat(1, 6))));

  // k outside the dual set averages to zero.
  Coset even(Lattice::cartesian({2}), {0});
  CHECK(coefficient_by_averaging(even, rv({Rat(1, 4)}), 4).is_zero());

  CHECK_THROWS_AS(coefficient_by_averaging(even, rv({Rat(1, 2)}), 3), BadPeriod);
  CHECK_THROWS_AS(coefficient_by_averaging(even, rv({Rat(1, 3)}), 2), BadPeriod);
}

TEST_CASE("formula equals averaging on every dual vector of random cosets") {
  std::mt19937_64 rng(0xa7e0);
  size_t pairs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    size_t d = 1 + static_cast<size_t>(trial % 3);
    Lattice l = random_lattice(rng, d, 24);
    Coset c = random_coset(rng, l);
    long period = static_cast<long>(l.exponent().get_si());
    for (const RatVec& k : dual_set(l)) {
      CHECK(coset_coefficient(c, k).equals(
          coefficient_by_averaging(c, k, period)));
      ++pairs;
    }
  }
  CHECK(pairs >= 100);
}

TEST_CASE("Fourier inversion reconstructs the indicator exactly") {
  std::mt19937_64 rng(0x1f2);
  for (int trial = 0; trial < 30; ++trial) {
    size_t d = 1 + static_cast<size_t>(trial % 3);
    Lattice l = random_lattice(rng, d, d == 3 ? 8 : 12);
    Coset c = random_coset(rng, l);
    auto dual = dual_set(l);
    std::vector<CyclotomicSum> coeffs;
    coeffs.reserve(dual.size());
    for (const RatVec& k : dual) coeffs.push_back(coset_coefficient(c, k));

    long e = static_cast<long>(l.exponent().get_si());
    IntVec x(d, 0);
    bool more = true;
    while (more) {
      CyclotomicSum f;
      for (size_t i = 0; i < dual.size(); ++i) {
        Rat kx(0);
        for (size_t j = 0; j < d; ++j) kx += dual[i][j] * Rat(x[j]);
        for (const auto& [angle, q] : coeffs[i].terms())
          f.add_term(q, angle + kx);
      }
      if (c.contains(x)) {
        CHECK(f.equals(CyclotomicSum::one()));
      } else {
        CHECK(f.is_zero());
      }
      more = false;
      for (size_t pos = d; pos-- > 0;) {
        x[pos] += 1;
        if (x[pos] < e) {
          more = true;
          break;
        }
        x[pos] = 0;
      }
    }
  }
}

TEST_CASE("witness for a 1-D three-tile tiling") {
  TilingInstance t({Coset(Lattice::cartesian({2}), {0}),
                    Coset(Lattice::cartesian({4}), {1}),
                    Coset(Lattice::cartesian({4}), {3})});
  TranslateWitness w = mirsky_newman_witness(t);
  CHECK_EQ(w.max_tile, 1);
  CHECK_EQ(w.partner, 2);
  CHECK_EQ(w.probe, rv({Rat(1, 4)}));
  CHECK(is_translate_pair(t.tiles()[w.max_tile], t.tiles()[w.partner]));
}

TEST_CASE("witness for a 2-D three-tile tiling") {
  TilingInstance t({Coset(Lattice::cartesian({1, 2}), {0, 0}),
                    Coset(Lattice::cartesian({2, 2}), {0, 1}),
                    Coset(Lattice::cartesian({2, 2}), {1, 1})});
  TranslateWitness w = mirsky_newman_witness(t);
  CHECK_EQ(w.max_tile, 1);
  CHECK_EQ(w.partner, 2);
  CHECK_EQ(t.tiles()[1].lattice(), t.tiles()[2].lattice());
}

TEST_CASE("witness preconditions") {
  CHECK_THROWS_AS(
      mirsky_newman_witness(TilingInstance({Coset(Lattice::standard(1), {0})})),
      NotATiling);
  // Overlapping pair of odd cosets: not a tiling.
  CHECK_THROWS_AS(
      mirsky_newman_witness(TilingInstance({Coset(Lattice::cartesian({2}), {1}),
                                            Coset(Lattice::cartesian({2}), {1})})),
      NotATiling);
  // The 3-D counterexample contains a non-Cartesian tile.
  CHECK_THROWS_AS(mirsky_newman_witness(counterexample_tiling(3)), NotCartesian);
}

TEST_CASE("witness on random Cartesian tilings: proof procedure invariants") {
  std::mt19937_64 rng(0x3a7);
  for (int trial = 0; trial < 30; ++trial) {
    size_t d = 1 + static_cast<size_t>(trial % 3);
    TilingInstance t = random_cartesian_tiling(d, 36, 1000 + trial);
    TranslateWitness w = mirsky_newman_witness(t);
    REQUIRE(w.max_tile != w.partner);
    const auto& tiles = t.tiles();
    CHECK_EQ(tiles[w.max_tile].lattice(), tiles[w.partner].lattice());
    CHECK(is_translate_pair(tiles[w.max_tile], tiles[w.partner]));
    // Chosen tile has maximal index, with the lowest position among ties.
    for (size_t i = 0; i < tiles.size(); ++i) {
      CHECK(tiles[i].index() <= tiles[w.max_tile].index());
      if (tiles[i].index() == tiles[w.max_tile].index())
        CHECK(w.max_tile <= i);
    }
    // The probe is the reciprocal-moduli vector of the chosen tile,
    // standardized into [0,1).
    IntVec m = tiles[w.max_tile].lattice().moduli();
    for (size_t j = 0; j < d; ++j)
      CHECK_EQ(w.probe[j], frac(make_rat(1, m[j])));
  }
}
