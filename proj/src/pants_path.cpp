#include "agol/pants_path.hpp"

#include <algorithm>
#include <iterator>

namespace agol {

namespace {

bool is_subset(const Curve& inner, const Curve& outer) {
  if (inner.width() > outer.width()) return false;
  for (int k : inner.encircled()) {
    if (!outer.encircles(k)) return false;
  }
  return true;
}

std::vector<Curve> decomposition_curves(int i, int n, CurveOrder order) {
  std::vector<Curve> curves;
  curves.reserve(static_cast<std::size_t>(n - 2));
  if (order == CurveOrder::listing) {
    for (int j = 2; j <= n - 1; j += 2) curves.push_back(beta_curve(2 * i - 1, j, n));
    for (int j = 3; j <= n - 1; j += 2) curves.push_back(beta_curve(2 * i, j, n));
  } else {
    for (int j = 2; j <= n - 1; ++j) {
      curves.push_back(beta_curve(j % 2 == 0 ? 2 * i - 1 : 2 * i, j, n));
    }
  }
  return curves;
}

}  // namespace

std::optional<std::string> PantsDecomposition::check(
    int n, const std::vector<Curve>& curves) {
  if (static_cast<int>(curves.size()) != n - 2) {
    return "expected " + std::to_string(n - 2) + " curves, got " +
           std::to_string(curves.size());
  }
  for (std::size_t a = 0; a < curves.size(); ++a) {
    if (curves[a].punctures() != n) {
      return "curve " + curves[a].token() + " lives on a different disk";
    }
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      if (curves[a].same_class(curves[b])) {
        return "curves " + curves[a].token() + " and " + curves[b].token() +
               " are isotopic";
      }
      if (geometric_intersection(curves[a], curves[b]) != 0) {
        return "curves " + curves[a].token() + " and " + curves[b].token() +
               " intersect";
      }
    }
  }
  return std::nullopt;
}

PantsDecomposition::PantsDecomposition(int n, std::vector<Curve> curves)
    : n_(n), curves_(std::move(curves)) {
  if (auto reason = check(n_, curves_)) {
    throw Error(Errc::invalid_decomposition, *reason);
  }
}

std::set<CurveClass> PantsDecomposition::classes() const {
  std::set<CurveClass> out;
  for (const auto& c : curves_) out.insert(c.curve_class());
  return out;
}

bool PantsDecomposition::contains_class(const Curve& c) const {
  return std::any_of(curves_.begin(), curves_.end(),
                     [&](const Curve& d) { return d.same_class(c); });
}

std::vector<std::string> PantsDecomposition::tokens() const {
  std::vector<std::string> out;
  for (const auto& c : curves_) out.push_back(c.token());
  return out;
}

PantsCount count_pants(const PantsDecomposition& p) {
  const auto& curves = p.curves();
  const int n = p.punctures();
  const int m = static_cast<int>(curves.size());

  // parent[c] = smallest curve strictly containing c, or -1 for the outer
  // region bounded by q.
  std::vector<int> parent(static_cast<std::size_t>(m), -1);
  for (int c = 0; c < m; ++c) {
    for (int d = 0; d < m; ++d) {
      if (c == d || !is_subset(curves[c], curves[d])) continue;
      if (parent[c] < 0 || curves[d].width() < curves[parent[c]].width()) {
        parent[c] = d;
      }
    }
  }

  // Region m is the outer one. Every region has its own outer circle.
  std::vector<int> boundaries(static_cast<std::size_t>(m + 1), 1);
  for (int c = 0; c < m; ++c) {
    boundaries[parent[c] < 0 ? m : parent[c]] += 1;
  }
  for (int k = 0; k < n; ++k) {
    int owner = -1;
    for (int c = 0; c < m; ++c) {
      if (curves[c].encircles(k) &&
          (owner < 0 || curves[c].width() < curves[owner].width())) {
        owner = c;
      }
    }
    boundaries[owner < 0 ? m : owner] += 1;
  }

  PantsCount out;
  out.regions = m + 1;
  out.all_pants = true;
  for (int b : boundaries) {
    out.euler_characteristic += 2 - b;
    if (b != 3) out.all_pants = false;
  }
  return out;
}

PantsDecomposition standard_decomposition(int i, int n, CurveOrder order) {
  if (n < 4) {
    throw Error(Errc::puncture_count,
                "pants decompositions need n >= 4, got n=" + std::to_string(n));
  }
  if (i < 1 || i > 2 * n) {
    throw Error(Errc::index_out_of_range,
                "P_i is defined for 1 <= i <= 2n, got i=" + std::to_string(i));
  }
  return PantsDecomposition(n, decomposition_curves(i, n, order));
}

PantsDecomposition interpolant(int i, int k, int n, CurveOrder order) {
  if (n < 4) {
    throw Error(Errc::puncture_count,
                "pants decompositions need n >= 4, got n=" + std::to_string(n));
  }
  if (k < 0 || k > n - 2) {
    throw Error(Errc::index_out_of_range,
                "interpolant step k=" + std::to_string(k) + " outside 0.." +
                    std::to_string(n - 2));
  }
  if (i < 1 || i + 1 > 2 * n) {
    throw Error(Errc::index_out_of_range,
                "interpolant P_i^k needs 1 <= i < 2n, got i=" + std::to_string(i));
  }
  auto current = decomposition_curves(i, n, order);
  const auto next = decomposition_curves(i + 1, n, order);
  std::copy(next.begin(), next.begin() + k, current.begin());
  if (auto reason = PantsDecomposition::check(n, current)) {
    throw Error(Errc::ordering_convention,
                "P_" + std::to_string(i) + "^" + std::to_string(k) +
                    " is not a pants decomposition: " + *reason);
  }
  return PantsDecomposition(n, std::move(current));
}

MoveCheck is_A_move(const PantsDecomposition& p, const PantsDecomposition& q) {
  MoveCheck out;
  if (p.punctures() != q.punctures()) {
    out.reason = "decompositions live on different disks";
    return out;
  }
  std::vector<Curve> removed;
  std::vector<Curve> added;
  for (const auto& c : p.curves()) {
    if (!q.contains_class(c)) removed.push_back(c);
  }
  for (const auto& c : q.curves()) {
    if (!p.contains_class(c)) added.push_back(c);
  }
  if (removed.empty() && added.empty()) {
    out.reason = "no curve replaced";
    return out;
  }
  if (removed.size() != 1 || added.size() != 1) {
    out.reason = "more than one curve replaced";
    return out;
  }
  const Curve& alpha = removed.front();
  const Curve& beta = added.front();
  if (geometric_intersection(alpha, beta) != 2) {
    out.reason = "replacement " + beta.token() + " does not meet " +
                 alpha.token() + " twice";
    return out;
  }
  for (const auto& c : p.curves()) {
    if (c.same_class(alpha)) continue;
    if (geometric_intersection(beta, c) != 0) {
      out.reason = "replacement " + beta.token() + " meets unchanged curve " +
                   c.token();
      return out;
    }
  }
  out.ok = true;
  out.removed = alpha;
  out.added = beta;
  return out;
}

bool is_S_move(const PantsDecomposition&, const PantsDecomposition&) {
  return false;
}

long long path_length(int n, int l) {
  return static_cast<long long>(2 * n - l) * (n - 2);
}

void check_construction_parameters(int n, int l) {
  if (n < 4) {
    throw Error(Errc::invalid_parameters,
                "n must be at least 4, got n=" + std::to_string(n));
  }
  if (l < 1) {
    throw Error(Errc::invalid_parameters,
                "l must be at least 1, got l=" + std::to_string(l));
  }
  if (n % l != 0) {
    throw Error(Errc::invalid_parameters,
                "l does not divide n (n=" + std::to_string(n) +
                    ", l=" + std::to_string(l) + ")");
  }
}

PantsPath build_path(int n, int l, CurveOrder order) {
  check_construction_parameters(n, l);
  PantsPath path;
  path.n = n;
  path.l = l;
  path.steps.reserve(static_cast<std::size_t>(path_length(n, l) + 1));
  path.steps.push_back(standard_decomposition(1, n, order));

  int step = 0;
  for (int i = 1; i <= 2 * n - l; ++i) {
    const auto from = decomposition_curves(i, n, order);
    const auto to = decomposition_curves(i + 1, n, order);
    for (int k = 1; k <= n - 2; ++k) {
      ++step;
      std::optional<PantsDecomposition> next;
      try {
        next.emplace(interpolant(i, k, n, order));
      } catch (const Error& e) {
        throw Error(Errc::path_step_failed,
                    "step " + std::to_string(step) + ": " + e.what());
      }
      const auto cert = is_A_move(path.steps.back(), *next);
      if (!cert) {
        throw Error(Errc::path_step_failed,
                    "step " + std::to_string(step) + " is not an A-move: " +
                        cert.reason);
      }
      const Curve& out = from[static_cast<std::size_t>(k - 1)];
      const Curve& in = to[static_cast<std::size_t>(k - 1)];
      if (!cert.removed->same_class(out) || !cert.added->same_class(in)) {
        throw Error(Errc::path_step_failed,
                    "step " + std::to_string(step) +
                        " replaced an unexpected curve");
      }
      path.moves.push_back(PathMove{step, out, in});
      path.steps.push_back(std::move(*next));
    }
  }
  return path;
}

std::set<CurveClass> persistent_classes(const PantsPath& path) {
  if (path.steps.empty()) return {};
  auto common = path.steps.front().classes();
  for (const auto& p : path.steps) {
    const auto here = p.classes();
    std::set<CurveClass> keep;
    std::set_intersection(common.begin(), common.end(), here.begin(),
                          here.end(), std::inserter(keep, keep.begin()));
    common = std::move(keep);
    if (common.empty()) break;
  }
  return common;
}

std::vector<int> apply_monodromy(const std::vector<int>& punctures, int n,
                                 int l) {
  std::vector<int> out;
  out.reserve(punctures.size());
  for (int k : punctures) out.push_back(((k - l) % n + n) % n);
  return out;
}

bool endpoint_matches_monodromy(const PantsPath& path) {
  if (path.steps.empty()) return false;
  auto sets = [](const std::vector<std::vector<int>>& v) {
    std::set<std::vector<int>> out;
    for (auto s : v) {
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
    }
    return out;
  };
  std::vector<std::vector<int>> image;
  for (const auto& c : path.steps.front().curves()) {
    image.push_back(apply_monodromy(c.encircled(), path.n, path.l));
  }
  std::vector<std::vector<int>> last;
  for (const auto& c : path.steps.back().curves()) last.push_back(c.encircled());
  return sets(image) == sets(last);
}

nlohmann::json to_json(const PantsPath& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& p : path.steps) steps.push_back(p.tokens());
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : path.moves) {
    moves.push_back({{"step", m.step}, {"out", m.out.token()}, {"in", m.in.token()}});
  }
  return {{"n", path.n}, {"l", path.l}, {"steps", steps}, {"moves", moves}};
}

}  // namespace agol
