#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agol/disk_curves.hpp"

// Independent geometric check of the curve intersection model: beta curves
// are drawn as explicit closed polylines on an integer grid and their
// crossings are counted with exact orientation tests.
namespace agol::oracle {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

// Grid units per unit length; punctures sit on the unit circle.
inline constexpr std::int64_t kScale = std::int64_t{1} << 24;

struct PolylineCurve {
  std::vector<Point> vertices;  // closed: last vertex joins the first
  int source_index = 0;
  int source_width = 0;
  int punctures = 0;
};

struct RealizeOptions {
  int layer = 0;   // 1 draws a parallel copy just inside the curve
  int jitter = 0;  // small deterministic perturbation for retries
};

Point puncture_point(int k, int n);

// Chord across the inside of the puncture circle, joined by two radial dives
// to an arc outside the circle around the enclosed punctures. Offsets depend
// on (i, j) so curves of one decomposition are disjoint. Throws
// Error(degenerate_geometry) if the result is not simple.
PolylineCurve realize(const Curve& c, const RealizeOptions& options = {});

bool is_simple(const PolylineCurve& p);

int winding_number(const PolylineCurve& p, Point q);

// Transverse crossings, or nullopt when two segments touch degenerately.
std::optional<int> try_count_intersections(const PolylineCurve& a,
                                           const PolylineCurve& b);

// Throws Error(degenerate_geometry) on a degenerate configuration.
int count_intersections(const PolylineCurve& a, const PolylineCurve& b);

// Realizes both curves (a parallel copy when they are isotopic) and counts
// crossings, retrying with jittered offsets on degeneracy.
int oracle_intersection(const Curve& a, const Curve& b);

// Debug overlay of several polylines.
std::string polylines_svg(const std::vector<PolylineCurve>& curves);

}  // namespace agol::oracle
