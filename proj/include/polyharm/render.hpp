// Copyright 2026 The polyharm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYHARM_RENDER_HPP_
#define POLYHARM_RENDER_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "polyharm/series.hpp"

namespace polyharm {

struct RenderStyle {
  std::size_t circles = 10;
  std::size_t rays = 24;
  std::size_t points_per_curve = 400;
  double outer_radius = 0.99;  // radius of the outermost circle and ray length
};

/// Image under F of one circle (param = angle) or ray (param = radius).
struct ImageCurve {
  std::string id;
  bool is_circle;
  std::vector<double> params;
  std::vector<Complex> points;
};

/// Circles at radii outer*i/circles (i = 1..circles), closed by repeating the
/// first point, and rays at angles 2 pi j/rays from 0 to outer.
std::vector<ImageCurve> image_curves(const PolyharmonicMap& map, const RenderStyle& style);

/// Header "curve,param,re,im", one row per point, 17 significant digits.
std::string curves_to_csv(const std::vector<ImageCurve>& curves);

/// Standalone SVG, one polyline per curve, holding exactly the CSV
/// coordinates. The y flip is a group transform, and the viewBox covers the
/// data bounding box plus a 5% margin on each side.
std::string curves_to_svg(const std::vector<ImageCurve>& curves, const std::string& title = {});

}  // namespace polyharm

#endif  // POLYHARM_RENDER_HPP_
