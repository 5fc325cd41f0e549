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

#include "textio.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"
#include "matrix.hpp"

namespace lattile {

namespace {

// Cursor over a single line; column numbers are 1-based for messages.
struct LineCursor {
  const std::string& s;
  size_t line_no;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(line_no, pos + 1, reason);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const std::string& what) {
    if (!try_consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    bool negative = false;
    if (pos < s.size() && s[pos] == '-') {
      negative = true;
      ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      fail("expected an integer");
    }
    Int v(s.substr(digits, pos - digits));
    return negative ? Int(-v) : v;
  }

  IntVec vector() {
    expect('(', "to open a vector");
    IntVec v;
    if (!try_consume(')')) {
      v.push_back(integer());
      while (try_consume(',')) v.push_back(integer());
      expect(')', "to close the vector");
    }
    if (v.empty()) fail("empty vector");
    return v;
  }
};

// "a1Z x a2Z x ... x adZ"; a bare 'Z' means modulus 1.
Lattice cartesian_lattice(LineCursor& c) {
  IntVec moduli;
  while (true) {
    size_t term_col = c.pos + 1;
    Int a = 1;
    if (c.peek() != 'Z') {
      c.skip_ws();
      term_col = c.pos + 1;
      a = c.integer();
    }
    if (!c.try_consume('Z'))
      c.fail("expected 'Z' after the modulus");
    if (a <= 0)
      throw ZeroModulus(c.line_no, term_col,
                        "modulus " + to_string(a) + " is not positive");
    moduli.push_back(a);
    if (!c.try_consume('x')) break;
  }
  return Lattice::cartesian(moduli);
}

// "lattice[(r11,...); (r21,...); ...]"
Lattice general_lattice(LineCursor& c) {
  const std::string kw = "lattice";
  c.skip_ws();
  size_t kw_col = c.pos + 1;
  if (c.s.compare(c.pos, kw.size(), kw) != 0) c.fail("expected a lattice");
  c.pos += kw.size();
  c.expect('[', "after 'lattice'");
  std::vector<IntVec> rows;
  rows.push_back(c.vector());
  while (c.try_consume(';')) rows.push_back(c.vector());
  c.expect(']', "to close the row list");

  const size_t d = rows[0].size();
  if (rows.size() != d)
    throw ParseError(c.line_no, kw_col,
                     "a " + std::to_string(d) + "-dimensional lattice needs " +
                         std::to_string(d) + " rows, got " +
                         std::to_string(rows.size()));
  IntMatrix gen(rows.size(), d);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d)
      throw ParseError(c.line_no, kw_col, "lattice rows differ in length");
    for (size_t j = 0; j < d; ++j) gen.at(i, j) = rows[i][j];
  }
  try {
    return Lattice::from_generators(gen);
  } catch (const SingularBasis& e) {
    throw ParseError(c.line_no, kw_col, e.what());
  }
}

Coset parse_coset_line(LineCursor& c) {
  // Optional "(v) +" or bare-integer rep; a line may also start directly
  // with the lattice.
  IntVec rep;
  bool have_rep = false;
  char first = c.peek();
  if (first == '(') {
    rep = c.vector();
    have_rep = true;
  } else if (first == '-' || std::isdigit(static_cast<unsigned char>(first))) {
    // Could be "3 + 4Z" (bare rep) or "4Z" (modulus). Decide by what follows
    // the integer: a '+' marks a rep.
    size_t save = c.pos;
    Int n = c.integer();
    if (c.peek() == '+') {
      rep = {n};
      have_rep = true;
    } else {
      c.pos = save;
    }
  }
  if (have_rep) c.expect('+', "between the representative and the lattice");

  Lattice lat = (c.peek() == 'l') ? general_lattice(c) : cartesian_lattice(c);
  if (!have_rep) rep.assign(lat.dim(), 0);
  if (rep.size() != lat.dim())
    c.fail("representative has " + std::to_string(rep.size()) +
           " components, lattice dimension is " + std::to_string(lat.dim()));
  if (!c.at_end()) c.fail("trailing input after the coset");
  return Coset(std::move(lat), rep);
}

}  // namespace

TilingDocument parse_document(const std::string& text) {
  TilingDocument doc;
  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (size_t hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    LineCursor c{raw, line_no};
    if (c.at_end()) continue;
    Coset coset = parse_coset_line(c);
    if (doc.entries.empty()) {
      doc.dim = coset.dim();
    } else if (coset.dim() != doc.dim) {
      throw DimensionMismatch(
          "line " + std::to_string(line_no) + ": coset dimension " +
          std::to_string(coset.dim()) + " differs from earlier dimension " +
          std::to_string(doc.dim));
    }
    doc.entries.push_back(std::move(coset));
  }
  return doc;
}

TilingInstance parse_tiling(const std::string& text) {
  TilingDocument doc = parse_document(text);
  if (doc.entries.empty()) throw ParseError(1, 1, "document contains no cosets");
  return TilingInstance(std::move(doc.entries));
}

std::string render_lattice(const Lattice& lat) {
  std::string out;
  if (lat.is_cartesian()) {
    IntVec m = lat.moduli();
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) out += " x ";
      if (m[i] != 1) out += to_string(m[i]);
      out += 'Z';
    }
    return out;
  }
  out = "lattice[";
  for (size_t i = 0; i < lat.dim(); ++i) {
    if (i) out += "; ";
    out += to_string(lat.basis().row(i));
  }
  out += ']';
  return out;
}

std::string render_coset(const Coset& c) {
  return to_string(c.rep()) + " + " + render_lattice(c.lattice());
}

std::string render_tiling(const TilingInstance& t) {
  std::string out;
  for (const Coset& c : t.tiles()) {
    out += render_coset(c);
    out += '\n';
  }
  return out;
}

}  // namespace lattile
