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

#include <gmpxx.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace lattile {

// All exact arithmetic goes through GMP. No floating point in the core.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division (GMP's tdiv truncates toward zero, which is not what
// canonical reduction wants for negative values).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Exact quotient; returns false when b does not divide a.
inline bool exact_div(const Int& a, const Int& b, Int& q) {
  if (b == 0) return false;
  Int r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r == 0;
}

// The two-argument mpq_class constructor does not canonicalize; always go
// through here when building a rational from numerator and denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Fractional part in [0, 1).
inline Rat frac(const Rat& r) {
  Int fl = floor_div(r.get_num(), r.get_den());
  Rat out = r - Rat(fl);
  out.canonicalize();
  return out;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

// Rationals print as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& v) { return v.get_str(); }

inline std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

inline std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

}  // namespace lattile
