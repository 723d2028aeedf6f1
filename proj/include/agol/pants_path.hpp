#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "agol/disk_curves.hpp"

namespace agol {

// Order of the curves inside P_i, which fixes what "the first k curves" of an
// interpolant means.
enum class CurveOrder {
  // beta_{2i-1,2}, beta_{2i-1,4}, ..., then beta_{2i,3}, beta_{2i,5}, ...
  listing,
  // 2, 3, 4, ..., n-1 with the two parity families interleaved. Does not give
  // a path of A-moves; kept so the checker can demonstrate that.
  width_ascending,
};

class PantsDecomposition {
public:
  // Validates curve count, pairwise disjointness and distinct classes; throws
  // Error(invalid_decomposition) with the first failing reason.
  PantsDecomposition(int n, std::vector<Curve> curves);

  int punctures() const { return n_; }
  const std::vector<Curve>& curves() const { return curves_; }
  std::size_t size() const { return curves_.size(); }

  std::set<CurveClass> classes() const;
  bool contains_class(const Curve& c) const;

  std::vector<std::string> tokens() const;

  // Reason the curve list is not a pants decomposition, if any.
  static std::optional<std::string> check(int n,
                                          const std::vector<Curve>& curves);

private:
  int n_;
  std::vector<Curve> curves_;
};

// Regions of D_n cut along a decomposition, from the nesting forest of the
// curve intervals.
struct PantsCount {
  int regions = 0;
  int euler_characteristic = 0;  // sum of chi over regions
  bool all_pants = false;         // every region has three boundary circles
};

PantsCount count_pants(const PantsDecomposition& p);

// P_i, valid for 1 <= i <= 2n.
PantsDecomposition standard_decomposition(int i, int n,
                                          CurveOrder order = CurveOrder::listing);

// P_i^k: first k curves of P_{i+1} with the last (n-2)-k curves of P_i.
PantsDecomposition interpolant(int i, int k, int n,
                               CurveOrder order = CurveOrder::listing);

struct MoveCheck {
  bool ok = false;
  std::string reason;
  std::optional<Curve> removed;
  std::optional<Curve> added;

  explicit operator bool() const { return ok; }
};

MoveCheck is_A_move(const PantsDecomposition& p, const PantsDecomposition& q);

// D_n has genus zero, so no complementary piece is a one-holed torus.
bool is_S_move(const PantsDecomposition& p, const PantsDecomposition& q);

struct PathMove {
  int step;  // 1-based
  Curve out;
  Curve in;
};

struct PantsPath {
  int n = 0;
  int l = 0;
  std::vector<PantsDecomposition> steps;
  std::vector<PathMove> moves;

  int length() const { return static_cast<int>(moves.size()); }
};

// (2n - l)(n - 2)
long long path_length(int n, int l);

// Checks 1 <= l, l | n, n >= 4; throws Error(invalid_parameters).
void check_construction_parameters(int n, int l);

// Composition of the sub-paths P_i^0..P_i^{n-2} for i = 1..2n-l. Every step
// is certified; a failing step throws Error(path_step_failed) naming it.
PantsPath build_path(int n, int l, CurveOrder order = CurveOrder::listing);

// Classes present in every decomposition of the path.
std::set<CurveClass> persistent_classes(const PantsPath& path);

// The monodromy z -> exp(-2 pi i l / n) z moves p_k to p_{k-l}.
std::vector<int> apply_monodromy(const std::vector<int>& punctures, int n,
                                 int l);

// Compares phi(first decomposition) with the last one by puncture sets.
bool endpoint_matches_monodromy(const PantsPath& path);

nlohmann::json to_json(const PantsPath& path);

}  // namespace agol
