#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <string>

#include "dets2/realizability.hpp"

namespace dets2 {

namespace detail {

inline std::string svg_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v + 0.0);  // +0.0 folds -0 into 0
  return buf;
}

}  // namespace detail

// Standalone SVG 1.1 drawing of a quadrilateral witness: four labeled vertex
// markers Q1..Q4 and all six segments Q_iQ_j. The view box fits the points
// with a 10% margin; when all four points coincide a unit box is used. The
// source directions are recorded in <desc>.
inline void write_quad_svg(std::ostream& out, const PointQuad<Rational>& quad,
                           const Configuration<Rational>& directions) {
  // SVG y grows downward; negate y to keep the mathematical orientation.
  std::array<double, 4> xs{};
  std::array<double, 4> ys{};
  for (std::size_t i = 0; i < 4; ++i) {
    xs[i] = quad.pts[i].x.to_double();
    ys[i] = -quad.pts[i].y.to_double();
  }
  double minx = *std::min_element(xs.begin(), xs.end());
  double maxx = *std::max_element(xs.begin(), xs.end());
  double miny = *std::min_element(ys.begin(), ys.end());
  double maxy = *std::max_element(ys.begin(), ys.end());
  const double extent = std::max(maxx - minx, maxy - miny);
  if (extent == 0.0) {
    minx -= 0.5;
    maxx += 0.5;
    miny -= 0.5;
    maxy += 0.5;
  } else {
    const double margin = 0.1 * extent;
    minx -= margin;
    maxx += margin;
    miny -= margin;
    maxy += margin;
  }
  const double width = maxx - minx;
  const double height = maxy - miny;
  const double unit = std::max(width, height);
  using detail::svg_num;

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << svg_num(minx)
      << " " << svg_num(miny) << " " << svg_num(width) << " " << svg_num(height) << "\">\n";

  out << "<desc>edge directions:";
  for (std::size_t s = 0; s < 6; ++s) {
    const auto& [i, j] = kPairOrder[s];
    out << " v" << i << j << "=(" << directions.slot(s).x << "," << directions.slot(s).y << ")";
  }
  out << "</desc>\n";

  out << "<g stroke=\"#475569\" stroke-width=\"" << svg_num(unit * 0.008)
      << "\" stroke-linecap=\"round\">\n";
  for (const auto& [i, j] : kPairOrder) {
    out << "<line x1=\"" << svg_num(xs[i - 1]) << "\" y1=\"" << svg_num(ys[i - 1]) << "\" x2=\""
        << svg_num(xs[j - 1]) << "\" y2=\"" << svg_num(ys[j - 1]) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g fill=\"#0f172a\">\n";
  for (std::size_t i = 0; i < 4; ++i) {
    out << "<circle cx=\"" << svg_num(xs[i]) << "\" cy=\"" << svg_num(ys[i]) << "\" r=\""
        << svg_num(unit * 0.02) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"monospace\" font-size=\"" << svg_num(unit * 0.06)
      << "\" fill=\"#b91c1c\">\n";
  for (std::size_t i = 0; i < 4; ++i) {
    out << "<text x=\"" << svg_num(xs[i] + unit * 0.025) << "\" y=\"" << svg_num(ys[i] - unit * 0.025)
        << "\">Q" << (i + 1) << "</text>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
}

}  // namespace dets2
