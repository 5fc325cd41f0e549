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

#include <optional>
#include <string>

#include "lattice.hpp"

namespace lattile {

// A translate v + L with v stored as the canonical fundamental-domain
// representative, so set equality is plain value equality.
class Coset {
 public:
  Coset(Lattice lattice, const IntVec& v);

  const Lattice& lattice() const { return lattice_; }
  const IntVec& rep() const { return rep_; }
  size_t dim() const { return lattice_.dim(); }
  const Int& index() const { return lattice_.index(); }

  bool contains(const IntVec& x) const;

  bool operator==(const Coset& o) const {
    return lattice_ == o.lattice_ && rep_ == o.rep_;
  }
  bool operator!=(const Coset& o) const { return !(*this == o); }
  bool operator<(const Coset& o) const;

  std::string to_string() const;

 private:
  Lattice lattice_;
  IntVec rep_;
};

// Solves the pair of congruences; empty when the cosets are disjoint.
std::optional<Coset> coset_intersection(const Coset& a, const Coset& b);

// True when both cosets translate the same lattice.
bool is_translate_pair(const Coset& a, const Coset& b);

}  // namespace lattile
