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

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "tiling.hpp"

namespace lattile {

// Half-open integer window [x0, x1) x [y0, y1); each lattice point becomes
// a scale x scale block. Rows run top to bottom with y decreasing, so the
// image is oriented the usual mathematical way. A 3-dimensional instance
// needs a slice (axis, value) pinning one coordinate; the remaining axes
// map to (x, y) in increasing order.
struct RenderOptions {
  int64_t x0 = 0, x1 = 0;
  int64_t y0 = 0, y1 = 0;
  int scale = 8;
  std::optional<std::pair<size_t, int64_t>> slice;
};

// Points are colored by the first containing tile from a fixed 16-color
// palette (cycling); uncovered points stay white. Output is byte-exact for
// identical inputs.
std::string render_ppm(const TilingInstance& t, const RenderOptions& opt);
std::string render_svg(const TilingInstance& t, const RenderOptions& opt);

// RGB assigned to a tile by its list position (palette cycles after 16).
std::array<uint8_t, 3> render_palette_color(size_t tile_index);

}  // namespace lattile
