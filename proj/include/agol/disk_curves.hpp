#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "agol/error.hpp"

namespace agol {

// Disk D_n with n punctures p_0..p_{n-1} placed counterclockwise at the n-th
// roots of unity and one outer boundary q.
class PuncturedDisk {
public:
  explicit PuncturedDisk(int n);

  int punctures() const { return n_; }
  // q plus one boundary per puncture.
  int boundary_components() const { return n_ + 1; }
  // Euler characteristic of a sphere with n + 1 holes.
  int euler_characteristic() const { return 1 - n_; }

private:
  int n_;
};

// Isotopy class key of a beta curve: the index is only meaningful mod 2n.
struct CurveClass {
  int index_mod;  // i mod 2n, in 0..2n-1
  int width;
  auto operator<=>(const CurveClass&) const = default;
};

// beta_{i,j}: the round curve enclosing the j consecutive punctures p_k with
// (i-(j-1))/2 <= k <= (i+(j-1))/2, indices mod n. Only (i, j, n) is stored;
// the interval is recomputed on demand.
class Curve {
public:
  int index() const { return i_; }
  int width() const { return j_; }
  int punctures() const { return n_; }

  // First puncture label of the interval, in 0..n-1.
  int first_puncture() const;
  // Labels in cyclic (counterclockwise) order starting at first_puncture().
  std::vector<int> encircled() const;
  bool encircles(int k) const;

  CurveClass curve_class() const;
  bool same_class(const Curve& other) const;

  // Text token b{i}_{j}.
  std::string token() const;

  bool operator==(const Curve&) const = default;

private:
  friend Curve beta_curve(int i, int j, int n);
  Curve(int i, int j, int n) : i_(i), j_(j), n_(n) {}

  int i_;
  int j_;
  int n_;
};

// Throws Error with parity_violation, width_out_of_range, index_out_of_range
// or puncture_count.
Curve beta_curve(int i, int j, int n);

std::vector<int> encircled_punctures(const Curve& c);

// Minimal intersection number for curves in outward-bulging standard
// position: 0 when the intervals coincide, are disjoint or nested, else 2.
int geometric_intersection(const Curve& a, const Curve& b);

// Parses a b{i}_{j} token for a disk with n punctures.
Curve parse_curve_token(const std::string& token, int n);

}  // namespace agol
