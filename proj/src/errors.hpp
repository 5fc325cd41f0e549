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

#include <stdexcept>
#include <string>

namespace lattile {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct SingularBasis : Error {
  using Error::Error;
};

struct BadDimension : Error {
  using Error::Error;
};

struct BadPeriod : Error {
  using Error::Error;
};

struct NotATiling : Error {
  using Error::Error;
};

struct NotCartesian : Error {
  using Error::Error;
};

// Raised when the translate-pair extraction finds no partner tile. A valid
// Cartesian tiling always has one, so reaching this is an internal failure.
struct WitnessNotFound : Error {
  using Error::Error;
};

struct TorusTooLarge : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct UnsupportedDimension : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& reason)
      : Error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + reason),
        line(line_),
        column(column_) {}
};

// Parse-level error for a nonpositive Cartesian modulus.
struct ZeroModulus : ParseError {
  using ParseError::ParseError;
};

}  // namespace lattile
