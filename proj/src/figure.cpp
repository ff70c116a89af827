// Copyright 2026 The arrangeops Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arrangeops/figure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace arrangeops {

namespace {

struct Chart {
  Rational alpha, beta;
};

// Affine chart x/w, y/w with w = alpha x + beta y + z, chosen so that no
// singular point is at infinity and no line is the line at infinity.
Chart choose_chart(const Arrangement& a, const std::vector<SingularPoint>& pts) {
  static const std::array<std::pair<int, int>, 8> kCandidates = {
      {{0, 0}, {1, 0}, {0, 1}, {1, 2}, {3, -2}, {-5, 7}, {11, 13}, {-17, 19}}};
  const Field& f = a.field();
  for (const auto& [p, q] : kCandidates) {
    for (int scale = 1; scale <= 64; scale *= 4) {
      const Rational alpha(p, scale), beta(q, scale);
      const ProjLine at_infinity(FieldElement(f, alpha), FieldElement(f, beta), FieldElement::one(f));
      if (a.contains(at_infinity)) continue;
      bool ok = true;
      for (const auto& s : pts) {
        if (incident(s.point, at_infinity)) {
          ok = false;
          break;
        }
      }
      if (ok) return {alpha, beta};
      if (p == 0 && q == 0) break;
    }
  }
  throw ExportError("no affine chart avoids the singular points");
}

double real_part(const FieldElement& x, int bits) { return approx_complex(x, bits).re; }

struct Segment {
  double x0, y0, x1, y1;
};

// Clips a X + b Y + c = 0 to the box; nullopt when the line misses it.
std::optional<Segment> clip(double a, double b, double c, double xmin, double xmax, double ymin, double ymax) {
  std::vector<std::pair<double, double>> hits;
  const double eps = 1e-12 * std::max({1.0, std::fabs(xmax), std::fabs(ymax)});
  if (std::fabs(b) > 0) {
    for (double x : {xmin, xmax}) {
      const double y = -(a * x + c) / b;
      if (y >= ymin - eps && y <= ymax + eps) hits.emplace_back(x, y);
    }
  }
  if (std::fabs(a) > 0) {
    for (double y : {ymin, ymax}) {
      const double x = -(b * y + c) / a;
      if (x >= xmin - eps && x <= xmax + eps) hits.emplace_back(x, y);
    }
  }
  if (hits.size() < 2) return std::nullopt;
  auto far = std::max_element(hits.begin(), hits.end(), [&](const auto& u, const auto& v) {
    return std::hypot(u.first - hits[0].first, u.second - hits[0].second) <
           std::hypot(v.first - hits[0].first, v.second - hits[0].second);
  });
  return Segment{hits[0].first, hits[0].second, far->first, far->second};
}

const char* mark_color(int m) {
  switch (m) {
    case 2:
      return "black";
    case 3:
      return "blue";
    case 4:
      return "red";
    case 5:
      return "green";
    default:
      return "purple";
  }
}

}  // namespace

Figure render(const Arrangement& a, const FigureOptions& options) {
  if (!is_real_embeddable(a.field())) {
    throw ExportError("field " + describe(a.field()) +
                      " has no real embedding; export the arrangement as json instead");
  }
  const int bits = options.precision_bits;
  const std::vector<SingularPoint> pts = singular_points(a);
  const Chart chart = choose_chart(a, pts);
  const Field& f = a.field();
  const FieldElement alpha(f, chart.alpha), beta(f, chart.beta);

  struct Mark {
    double x, y;
    int multiplicity;
  };
  std::vector<Mark> all_points;
  for (const auto& s : pts) {
    const FieldElement w = alpha * s.point[0] + beta * s.point[1] + s.point[2];
    all_points.push_back({real_part(s.point[0] / w, bits), real_part(s.point[1] / w, bits), s.multiplicity()});
  }

  double cx = 0, cy = 0, half = 1;
  if (options.window) {
    half = *options.window;
  } else if (!all_points.empty()) {
    double xmin = all_points[0].x, xmax = xmin, ymin = all_points[0].y, ymax = ymin;
    for (const auto& m : all_points) {
      xmin = std::min(xmin, m.x);
      xmax = std::max(xmax, m.x);
      ymin = std::min(ymin, m.y);
      ymax = std::max(ymax, m.y);
    }
    cx = (xmin + xmax) / 2;
    cy = (ymin + ymax) / 2;
    half = std::max({(xmax - xmin) / 2, (ymax - ymin) / 2, 0.5}) * 1.15;
  }
  const double xmin = cx - half, xmax = cx + half, ymin = cy - half, ymax = cy + half;

  std::vector<Segment> segments;
  for (const auto& l : a.items()) {
    const FieldElement la = l[0] - l[2] * alpha, lb = l[1] - l[2] * beta;
    if (auto s = clip(real_part(la, bits), real_part(lb, bits), real_part(l[2], bits), xmin, xmax, ymin, ymax)) {
      segments.push_back(*s);
    }
  }
  std::vector<Mark> marks;
  for (const auto& m : all_points) {
    if (!options.marks.empty() && !options.marks.count(m.multiplicity)) continue;
    if (m.x < xmin || m.x > xmax || m.y < ymin || m.y > ymax) continue;
    marks.push_back(m);
  }

  const int digits = std::clamp(static_cast<int>(std::ceil(bits * std::log10(2.0))), 6, 17);
  std::ostringstream os;
  os << std::setprecision(digits);
  Figure fig;
  fig.lines = static_cast<int>(segments.size());
  fig.points = static_cast<int>(marks.size());
  if (options.format == FigureFormat::kSvg) {
    const double size = 800, scale = size / (2 * half);
    auto sx = [&](double x) { return (x - xmin) * scale; };
    auto sy = [&](double y) { return (ymax - y) * scale; };
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<!-- arrangeops: " << a.size() << " lines over " << describe(f) << ", " << fig.lines
       << " drawn, " << fig.points << " marked points, precision " << bits << " bits -->\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& s : segments) {
      os << "<line class=\"arrangement-line\" x1=\"" << sx(s.x0) << "\" y1=\"" << sy(s.y0) << "\" x2=\""
         << sx(s.x1) << "\" y2=\"" << sy(s.y1) << "\" stroke=\"gray\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& m : marks) {
      os << "<circle class=\"point-m" << m.multiplicity << "\" cx=\"" << sx(m.x) << "\" cy=\"" << sy(m.y)
         << "\" r=\"" << (m.multiplicity == 2 ? 3 : 5) << "\" fill=\"" << mark_color(m.multiplicity) << "\"/>\n";
    }
    os << "</svg>\n";
  } else {
    const double scale = 5.0 / half;
    auto tx = [&](double x) { return (x - cx) * scale; };
    auto ty = [&](double y) { return (y - cy) * scale; };
    os << "% arrangeops: " << a.size() << " lines over " << describe(f) << ", " << fig.lines << " drawn, "
       << fig.points << " marked points, precision " << bits << " bits\n"
       << "\\begin{tikzpicture}\n"
       << "\\clip (-5,-5) rectangle (5,5);\n";
    for (const auto& s : segments) {
      os << "\\draw[gray] (" << tx(s.x0) << "," << ty(s.y0) << ") -- (" << tx(s.x1) << "," << ty(s.y1) << ");\n";
    }
    for (const auto& m : marks) {
      os << "\\fill[" << mark_color(m.multiplicity) << "] (" << tx(m.x) << "," << ty(m.y) << ") circle ("
         << (m.multiplicity == 2 ? "1pt" : "2pt") << "); % m" << m.multiplicity << "\n";
    }
    os << "\\end{tikzpicture}\n";
  }
  fig.text = os.str();
  return fig;
}

}  // namespace arrangeops
