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

#include "cyclotomic.hpp"

#include <mutex>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace lattile {

CyclotomicSum CyclotomicSum::term(const Rat& coefficient, const Rat& angle) {
  CyclotomicSum s;
  s.add_term(coefficient, angle);
  return s;
}

void CyclotomicSum::add_term(const Rat& coefficient, const Rat& angle) {
  if (coefficient == 0) return;
  Rat a = frac(angle);
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(std::move(a), coefficient);
  } else {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& o) {
  for (const auto& [angle, q] : o.terms_) add_term(q, angle);
  return *this;
}

CyclotomicSum& CyclotomicSum::operator-=(const CyclotomicSum& o) {
  for (const auto& [angle, q] : o.terms_) add_term(-q, angle);
  return *this;
}

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& o) const {
  CyclotomicSum s = *this;
  s += o;
  return s;
}

CyclotomicSum CyclotomicSum::operator-(const CyclotomicSum& o) const {
  CyclotomicSum s = *this;
  s -= o;
  return s;
}

CyclotomicSum CyclotomicSum::scaled(const Rat& q) const {
  CyclotomicSum s;
  if (q == 0) return s;
  for (const auto& [angle, c] : terms_) s.terms_.emplace(angle, c * q);
  return s;
}

Int CyclotomicSum::canonical_modulus() const {
  Int n = 1;
  for (const auto& [angle, q] : terms_) n = lcm(n, angle.get_den());
  return n;
}

namespace {

// Quotient of exact polynomial division over Z; divisor monic.
std::vector<Int> exact_quotient(std::vector<Int> num, const std::vector<Int>& den) {
  const size_t dn = num.size() - 1;
  const size_t dd = den.size() - 1;
  std::vector<Int> q(dn - dd + 1);
  for (size_t k = dn - dd + 1; k-- > 0;) {
    Int c = num[k + dd];
    if (c == 0) continue;
    q[k] = c;
    for (size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw Error("cyclotomic factor division left a remainder");
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, std::vector<Int>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  if (n == 0) throw Error("cyclotomic polynomial undefined for 0");

  std::vector<Int> poly;
  if (n == 1) {
    poly = {Int(-1), Int(1)};  // x - 1
  } else {
    // Phi_n = (x^n - 1) / product of Phi_d over proper divisors d of n.
    std::vector<Int> num(n + 1);
    num[0] = -1;
    num[n] = 1;
    for (unsigned long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      num = exact_quotient(std::move(num), cyclotomic_polynomial(d));
    }
    poly = std::move(num);
  }

  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  (void)inserted;  // concurrent fill computes the identical value
  return it->second;
}

bool CyclotomicSum::is_zero() const {
  if (terms_.empty()) return true;
  if (terms_.size() == 1) return false;  // one root of unity never vanishes
  Int nz = canonical_modulus();
  if (!nz.fits_ulong_p()) throw Error("cyclotomic modulus too large");
  const unsigned long n = nz.get_ui();

  // Clear denominators and place each term at exponent angle * N.
  Int denom_lcm = 1;
  for (const auto& [angle, q] : terms_) denom_lcm = lcm(denom_lcm, q.get_den());
  std::vector<Int> poly(n);
  for (const auto& [angle, q] : terms_) {
    Int e = angle.get_num() * (nz / angle.get_den());
    poly[e.get_ui()] = q.get_num() * (denom_lcm / q.get_den());
  }

  // Remainder modulo Phi_N (monic, integer coefficients).
  const std::vector<Int>& phi = cyclotomic_polynomial(n);
  const size_t dd = phi.size() - 1;
  for (size_t k = poly.size(); k-- > dd;) {
    Int c = poly[k];
    if (c == 0) continue;
    poly[k] = 0;
    for (size_t j = 0; j < dd; ++j) poly[k - dd + j] -= c * phi[j];
  }
  for (const Int& c : poly)
    if (c != 0) return false;
  return true;
}

std::string CyclotomicSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [angle, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q.get_str() << "*e(" << angle.get_str() << ")";
  }
  return os.str();
}

}  // namespace lattile
