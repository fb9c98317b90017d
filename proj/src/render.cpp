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

#include "polyharm/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "polyharm/error.hpp"

namespace polyharm {
namespace {

std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<ImageCurve> image_curves(const PolyharmonicMap& map, const RenderStyle& style) {
  if (style.circles < 1 || style.rays < 1 || style.points_per_curve < 1) {
    throw Error(ErrorCode::kDomain, "render counts must be >= 1");
  }
  if (!(style.outer_radius > 0.0 && style.outer_radius <= 1.0)) {
    throw Error(ErrorCode::kDomain, "outer radius must lie in (0, 1]");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  const std::size_t pts = style.points_per_curve;
  std::vector<ImageCurve> curves;
  for (std::size_t i = 1; i <= style.circles; ++i) {
    const double radius = style.outer_radius * static_cast<double>(i) / static_cast<double>(style.circles);
    ImageCurve curve{"circle" + std::to_string(i), true, {}, {}};
    for (std::size_t j = 0; j <= pts; ++j) {
      // The last sample repeats the first point so the polyline closes.
      const double angle = j == pts ? 0.0 : two_pi * static_cast<double>(j) / static_cast<double>(pts);
      curve.params.push_back(j == pts ? two_pi : angle);
      curve.points.push_back(eval(map, std::polar(radius, angle)));
    }
    curves.push_back(std::move(curve));
  }
  for (std::size_t j = 0; j < style.rays; ++j) {
    const double angle = two_pi * static_cast<double>(j) / static_cast<double>(style.rays);
    ImageCurve curve{"ray" + std::to_string(j), false, {}, {}};
    const std::size_t steps = std::max<std::size_t>(pts, 2) - 1;
    for (std::size_t i = 0; i <= steps; ++i) {
      const double radius = style.outer_radius * static_cast<double>(i) / static_cast<double>(steps);
      curve.params.push_back(radius);
      curve.points.push_back(eval(map, std::polar(radius, angle)));
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::string curves_to_csv(const std::vector<ImageCurve>& curves) {
  std::ostringstream out;
  out << "curve,param,re,im\n";
  for (const auto& curve : curves) {
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      out << curve.id << ',' << exact(curve.params[i]) << ',' << exact(curve.points[i].real()) << ','
          << exact(curve.points[i].imag()) << '\n';
    }
  }
  return out.str();
}

std::string curves_to_svg(const std::vector<ImageCurve>& curves, const std::string& title) {
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const auto& curve : curves) {
    for (const Complex& w : curve.points) {
      min_x = std::min(min_x, w.real());
      max_x = std::max(max_x, w.real());
      min_y = std::min(min_y, w.imag());
      max_y = std::max(max_y, w.imag());
    }
  }
  if (!(min_x <= max_x)) min_x = max_x = min_y = max_y = 0.0;
  double width = max_x - min_x, height = max_y - min_y;
  if (width <= 0.0) width = 1.0;
  if (height <= 0.0) height = 1.0;
  const double mx = 0.05 * width, my = 0.05 * height;

  std::ostringstream out;
  // Screen y grows downwards; the group flips it so the data stay untouched.
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
      << exact(std::max(1.0, 800.0 * (height + 2 * my) / (width + 2 * mx)))
      << "\" viewBox=\"" << exact(min_x - mx) << ' ' << exact(-max_y - my) << ' ' << exact(width + 2 * mx)
      << ' ' << exact(height + 2 * my) << "\">\n";
  if (!title.empty()) out << "  <title>" << escape_xml(title) << "</title>\n";
  out << "  <g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"1\" stroke-linejoin=\"round\">\n";
  for (const auto& curve : curves) {
    out << "    <polyline id=\"" << curve.id << "\" vector-effect=\"non-scaling-stroke\" stroke=\""
        << (curve.is_circle ? "#1f4e9c" : "#b8452b") << "\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      if (i) out << ' ';
      out << exact(curve.points[i].real()) << ',' << exact(curve.points[i].imag());
    }
    out << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace polyharm
