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

#include <map>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace lattile {

// Finite sum of rational multiples of rational-angle roots of unity:
//   sum of q * exp(2*pi*i * r)  with q, r rational and r in [0, 1).
// The representation is formal; value identities (in particular equality
// with zero) are decided exactly through cyclotomic polynomial division,
// never through floating point.
class CyclotomicSum {
 public:
  CyclotomicSum() = default;

  static CyclotomicSum zero() { return {}; }
  static CyclotomicSum constant(const Rat& q) { return term(q, Rat(0)); }
  static CyclotomicSum one() { return constant(Rat(1)); }
  static CyclotomicSum term(const Rat& coefficient, const Rat& angle);

  void add_term(const Rat& coefficient, const Rat& angle);

  CyclotomicSum& operator+=(const CyclotomicSum& o);
  CyclotomicSum& operator-=(const CyclotomicSum& o);
  CyclotomicSum operator+(const CyclotomicSum& o) const;
  CyclotomicSum operator-(const CyclotomicSum& o) const;
  CyclotomicSum scaled(const Rat& q) const;

  // Zero coefficients are never stored, so emptiness is a fast path; a
  // single stored term is always nonzero as a complex number.
  bool empty() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Rat, Rat>& terms() const { return terms_; }

  // lcm of the angle denominators (1 for the empty sum).
  Int canonical_modulus() const;

  // Exact test: embeds the sum as a polynomial in Q[x]/(x^N - 1) with
  // x standing for exp(2*pi*i/N) and checks divisibility by Phi_N.
  bool is_zero() const;

  bool equals(const CyclotomicSum& o) const { return (*this - o).is_zero(); }

  std::string to_string() const;

 private:
  std::map<Rat, Rat> terms_;  // angle in [0,1) -> nonzero coefficient
};

// Coefficients of the N-th cyclotomic polynomial, ascending degree.
// Memoized; safe to call concurrently.
const std::vector<Int>& cyclotomic_polynomial(unsigned long n);

}  // namespace lattile
