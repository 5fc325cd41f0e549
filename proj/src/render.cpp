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

#include "render.hpp"

#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace lattile {

namespace {

struct Rgb {
  uint8_t r, g, b;
};

constexpr std::array<Rgb, 16> kPalette = {{
    {230, 25, 75},   {60, 180, 75},   {255, 225, 25},  {0, 130, 200},
    {245, 130, 48},  {145, 30, 180},  {70, 240, 240},  {240, 50, 230},
    {210, 245, 60},  {250, 190, 212}, {0, 128, 128},   {220, 190, 255},
    {170, 110, 40},  {255, 250, 200}, {128, 0, 0},     {128, 128, 128},
}};
constexpr Rgb kBackground = {255, 255, 255};

struct Grid {
  int64_t w = 0, h = 0;
  // Tile index of the first tile containing each point, -1 if uncovered;
  // entry (column, row) = (x - x0, y - y0).
  std::vector<int> owner;
};

void check_options(const TilingInstance& t, const RenderOptions& opt) {
  if (opt.scale < 1) throw Error("render scale must be at least 1");
  if (opt.x1 < opt.x0 || opt.y1 < opt.y0)
    throw Error("render window bounds are reversed");
  if (t.dim() == 2) {
    if (opt.slice)
      throw UnsupportedDimension("a 2-dimensional instance takes no slice");
  } else if (t.dim() == 3) {
    if (!opt.slice)
      throw UnsupportedDimension("a 3-dimensional instance needs a slice");
    if (opt.slice->first > 2)
      throw UnsupportedDimension("slice axis out of range for dimension 3");
  } else {
    throw UnsupportedDimension("rendering covers dimension 2, and 3 with a slice");
  }
  Int pixels = Int(opt.x1 - opt.x0) * Int(opt.y1 - opt.y0) * opt.scale * opt.scale;
  if (pixels > 25'000'000) throw BudgetExceeded("render window exceeds the pixel budget");
}

Grid paint(const TilingInstance& t, const RenderOptions& opt) {
  Grid g;
  g.w = opt.x1 - opt.x0;
  g.h = opt.y1 - opt.y0;
  g.owner.assign(static_cast<size_t>(g.w * g.h), -1);

  size_t ax = 0, ay = 1;
  IntVec point(t.dim(), 0);
  if (opt.slice) {
    point[opt.slice->first] = opt.slice->second;
    ax = opt.slice->first == 0 ? 1 : 0;
    ay = opt.slice->first == 2 ? 1 : 2;
  }
  for (int64_t y = opt.y0; y < opt.y1; ++y) {
    for (int64_t x = opt.x0; x < opt.x1; ++x) {
      point[ax] = x;
      point[ay] = y;
      for (size_t ti = 0; ti < t.tiles().size(); ++ti) {
        if (t.tiles()[ti].contains(point)) {
          g.owner[static_cast<size_t>((y - opt.y0) * g.w + (x - opt.x0))] =
              static_cast<int>(ti);
          break;
        }
      }
    }
  }
  return g;
}

Rgb color_of(int owner) {
  if (owner < 0) return kBackground;
  return kPalette[static_cast<size_t>(owner) % kPalette.size()];
}

}  // namespace

std::array<uint8_t, 3> render_palette_color(size_t tile_index) {
  const Rgb& c = kPalette[tile_index % kPalette.size()];
  return {c.r, c.g, c.b};
}

std::string render_ppm(const TilingInstance& t, const RenderOptions& opt) {
  check_options(t, opt);
  Grid g = paint(t, opt);
  const int64_t w = g.w * opt.scale;
  const int64_t h = g.h * opt.scale;
  std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  out.reserve(out.size() + static_cast<size_t>(w * h * 3));
  for (int64_t py = 0; py < h; ++py) {
    const int64_t gy = g.h - 1 - py / opt.scale;  // top row = largest y
    for (int64_t px = 0; px < w; ++px) {
      const int64_t gx = px / opt.scale;
      Rgb c = color_of(g.owner[static_cast<size_t>(gy * g.w + gx)]);
      out.push_back(static_cast<char>(c.r));
      out.push_back(static_cast<char>(c.g));
      out.push_back(static_cast<char>(c.b));
    }
  }
  return out;
}

std::string render_svg(const TilingInstance& t, const RenderOptions& opt) {
  check_options(t, opt);
  Grid g = paint(t, opt);
  const int64_t w = g.w * opt.scale;
  const int64_t h = g.h * opt.scale;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
  char hex[8];
  for (int64_t gy = 0; gy < g.h; ++gy) {
    for (int64_t gx = 0; gx < g.w; ++gx) {
      int owner = g.owner[static_cast<size_t>(gy * g.w + gx)];
      if (owner < 0) continue;
      Rgb c = color_of(owner);
      std::snprintf(hex, sizeof hex, "#%02x%02x%02x", c.r, c.g, c.b);
      out << "<rect x=\"" << gx * opt.scale << "\" y=\""
          << (g.h - 1 - gy) * opt.scale << "\" width=\"" << opt.scale
          << "\" height=\"" << opt.scale << "\" fill=\"" << hex << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lattile
