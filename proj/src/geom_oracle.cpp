#include "agol/geom_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace agol::oracle {

namespace {

using i128 = __int128;

constexpr double kChordRadius = 0.85;

Point polar(double r, double theta) {
  return Point{std::llround(r * std::cos(theta) * static_cast<double>(kScale)),
               std::llround(r * std::sin(theta) * static_cast<double>(kScale))};
}

int orient(Point a, Point b, Point c) {
  const i128 v = static_cast<i128>(b.x - a.x) * (c.y - a.y) -
                 static_cast<i128>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

enum class Meet { none, proper, touch };

Meet segments_meet(Point a, Point b, Point c, Point d) {
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
    return Meet::none;
  }
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return Meet::proper;
  if ((o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
      (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b))) {
    return Meet::touch;
  }
  return Meet::none;
}

}  // namespace

Point puncture_point(int k, int n) {
  return polar(1.0, 2.0 * std::numbers::pi * k / n);
}

PolylineCurve realize(const Curve& c, const RealizeOptions& options) {
  const int n = c.punctures();
  const int i = c.index();
  const int j = c.width();
  const double pi = std::numbers::pi;
  const double step = pi / n;  // half the angle between punctures

  // Puncture p_k is at angle 2 pi k / n; the curve is centered at angle
  // i pi / n and spans j punctures, so its gaps sit j pi / n either side.
  const double center = i * step;
  const double inset = step * (0.05 + 0.8 * (n - j) / n + 0.02 * options.layer +
                               0.001 * options.jitter);
  const double start = center - j * step + inset;
  const double end = center + j * step - inset;

  const int class_index = ((i % (2 * n)) + 2 * n) % (2 * n);
  const double outer = 1.10 + 0.05 * (j - 2) + 0.02 * class_index / (2.0 * n) -
                       0.004 * options.layer + 0.0003 * options.jitter;
  const double chord = kChordRadius - 0.002 * options.jitter;

  PolylineCurve out;
  out.source_index = i;
  out.source_width = j;
  out.punctures = n;

  const int pieces = std::max(
      2, static_cast<int>(std::ceil((end - start) / (2.0 * pi / (32.0 * n)))));
  out.vertices.push_back(polar(chord, start));
  for (int s = 0; s <= pieces; ++s) {
    out.vertices.push_back(polar(outer, start + (end - start) * s / pieces));
  }
  out.vertices.push_back(polar(chord, end));

  if (!is_simple(out)) {
    throw Error(Errc::degenerate_geometry,
                "realization of " + c.token() + " is not simple");
  }
  return out;
}

bool is_simple(const PolylineCurve& p) {
  const auto& v = p.vertices;
  const std::size_t m = v.size();
  for (std::size_t a = 0; a < m; ++a) {
    const Point a0 = v[a];
    const Point a1 = v[(a + 1) % m];
    for (std::size_t b = a + 1; b < m; ++b) {
      const bool adjacent = b == a + 1 || (a == 0 && b == m - 1);
      const Point b0 = v[b];
      const Point b1 = v[(b + 1) % m];
      if (adjacent) {
        // Neighbours share exactly one vertex and must not fold back.
        const Point shared = b == a + 1 ? a1 : a0;
        const Point other_a = b == a + 1 ? a0 : a1;
        const Point other_b = b == a + 1 ? b1 : b0;
        if (orient(other_a, shared, other_b) == 0 &&
            on_segment(shared, other_a, other_b)) {
          return false;
        }
        continue;
      }
      if (segments_meet(a0, a1, b0, b1) != Meet::none) return false;
    }
  }
  return true;
}

int winding_number(const PolylineCurve& p, Point q) {
  int wn = 0;
  const auto& v = p.vertices;
  for (std::size_t a = 0; a < v.size(); ++a) {
    const Point s = v[a];
    const Point e = v[(a + 1) % v.size()];
    if (s.y <= q.y) {
      if (e.y > q.y && orient(s, e, q) > 0) ++wn;
    } else if (e.y <= q.y && orient(s, e, q) < 0) {
      --wn;
    }
  }
  return wn;
}

std::optional<int> try_count_intersections(const PolylineCurve& a,
                                           const PolylineCurve& b) {
  int count = 0;
  const auto& va = a.vertices;
  const auto& vb = b.vertices;
  for (std::size_t s = 0; s < va.size(); ++s) {
    const Point a0 = va[s];
    const Point a1 = va[(s + 1) % va.size()];
    for (std::size_t t = 0; t < vb.size(); ++t) {
      switch (segments_meet(a0, a1, vb[t], vb[(t + 1) % vb.size()])) {
        case Meet::proper: ++count; break;
        case Meet::touch: return std::nullopt;
        case Meet::none: break;
      }
    }
  }
  return count;
}

int count_intersections(const PolylineCurve& a, const PolylineCurve& b) {
  if (auto c = try_count_intersections(a, b)) return *c;
  throw Error(Errc::degenerate_geometry, "polylines touch degenerately");
}

int oracle_intersection(const Curve& a, const Curve& b) {
  if (a.punctures() != b.punctures()) {
    throw Error(Errc::mismatched_surface, "curves live on different disks");
  }
  const int layer = a.same_class(b) ? 1 : 0;
  for (int jitter = 0; jitter < 4; ++jitter) {
    const auto pa = realize(a, {0, jitter});
    const auto pb = realize(b, {layer, jitter});
    if (auto c = try_count_intersections(pa, pb)) return *c;
  }
  throw Error(Errc::degenerate_geometry,
              "no general-position realization of " + a.token() + " and " + b.token());
}

std::string polylines_svg(const std::vector<PolylineCurve>& curves) {
  // Grid coordinates scaled down to a 600px canvas centered at the origin.
  const double k = 150.0 / static_cast<double>(kScale);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"-300 -300 600 600\">\n";
  if (!curves.empty()) {
    for (int p = 0; p < curves.front().punctures; ++p) {
      const Point q = puncture_point(p, curves.front().punctures);
      svg << "<circle cx=\"" << std::lround(q.x * k) << "\" cy=\"" << -std::lround(q.y * k)
          << "\" r=\"4\"/>\n";
    }
  }
  for (const auto& c : curves) {
    svg << "<polygon fill=\"none\" stroke=\"#1f4e9c\" points=\"";
    for (std::size_t s = 0; s < c.vertices.size(); ++s) {
      svg << (s ? " " : "") << std::lround(c.vertices[s].x * k) << ','
          << -std::lround(c.vertices[s].y * k);
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace agol::oracle
