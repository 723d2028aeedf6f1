#include "agol/disk_curves.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace agol {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parity_violation: return "parity_violation";
    case Errc::width_out_of_range: return "width_out_of_range";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::puncture_count: return "puncture_count";
    case Errc::mismatched_surface: return "mismatched_surface";
    case Errc::invalid_parameters: return "invalid_parameters";
    case Errc::ordering_convention: return "ordering_convention";
    case Errc::path_step_failed: return "path_step_failed";
    case Errc::invalid_decomposition: return "invalid_decomposition";
    case Errc::missing_slope: return "missing_slope";
    case Errc::zero_slope: return "zero_slope";
    case Errc::not_a_knot: return "not_a_knot";
    case Errc::schema: return "schema";
    case Errc::degenerate_geometry: return "degenerate_geometry";
    case Errc::invalid_word: return "invalid_word";
  }
  return "unknown";
}

namespace {

int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

void check_puncture_count(int n) {
  if (n < 4) {
    throw Error(Errc::puncture_count,
                "punctured disk needs n >= 4, got n=" + std::to_string(n));
  }
}

}  // namespace

PuncturedDisk::PuncturedDisk(int n) : n_(n) { check_puncture_count(n); }

Curve beta_curve(int i, int j, int n) {
  check_puncture_count(n);
  if (i < 1 || i > 4 * n) {
    throw Error(Errc::index_out_of_range,
                "curve index i=" + std::to_string(i) + " outside 1.." +
                    std::to_string(4 * n));
  }
  if (j < 2 || j > n - 1) {
    throw Error(Errc::width_out_of_range,
                "curve width j=" + std::to_string(j) + " outside 2.." +
                    std::to_string(n - 1));
  }
  if ((i - j) % 2 == 0) {
    throw Error(Errc::parity_violation,
                "curve b" + std::to_string(i) + "_" + std::to_string(j) +
                    " needs i and j of opposite parity");
  }
  return Curve(i, j, n);
}

int Curve::first_puncture() const {
  // i - (j - 1) is even by the parity constraint.
  return floor_mod((i_ - (j_ - 1)) / 2, n_);
}

std::vector<int> Curve::encircled() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(j_));
  const int first = first_puncture();
  for (int t = 0; t < j_; ++t) out.push_back((first + t) % n_);
  return out;
}

bool Curve::encircles(int k) const {
  return floor_mod(k - first_puncture(), n_) < j_;
}

CurveClass Curve::curve_class() const {
  return CurveClass{floor_mod(i_, 2 * n_), j_};
}

bool Curve::same_class(const Curve& other) const {
  return n_ == other.n_ && curve_class() == other.curve_class();
}

std::string Curve::token() const {
  return "b" + std::to_string(i_) + "_" + std::to_string(j_);
}

std::vector<int> encircled_punctures(const Curve& c) { return c.encircled(); }

int geometric_intersection(const Curve& a, const Curve& b) {
  if (a.punctures() != b.punctures()) {
    throw Error(Errc::mismatched_surface,
                "curves live on different disks (n=" +
                    std::to_string(a.punctures()) + " vs n=" +
                    std::to_string(b.punctures()) + ")");
  }
  const int n = a.punctures();
  int shared = 0;
  for (int k = 0; k < n; ++k) {
    if (a.encircles(k) && b.encircles(k)) ++shared;
  }
  if (shared == 0) return 0;                                // disjoint
  if (shared == a.width() || shared == b.width()) return 0;  // nested or equal
  return 2;
}

Curve parse_curve_token(const std::string& token, int n) {
  auto fail = [&]() -> Curve {
    throw Error(Errc::schema, "malformed curve token '" + token + "'");
  };
  if (token.size() < 4 || token[0] != 'b') return fail();
  const auto sep = token.find('_');
  if (sep == std::string::npos) return fail();
  int i = 0;
  int j = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto r1 = std::from_chars(begin + 1, begin + sep, i);
  auto r2 = std::from_chars(begin + sep + 1, end, j);
  if (r1.ec != std::errc{} || r1.ptr != begin + sep || r2.ec != std::errc{} ||
      r2.ptr != end) {
    return fail();
  }
  return beta_curve(i, j, n);
}

}  // namespace agol
