// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "agol/cli.hpp"
#include "agol/diagram.hpp"
#include "agol/export.hpp"
#include "agol/geom_oracle.hpp"

using namespace agol;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Pinned limits.
constexpr double kPathSeconds = 5.0;
constexpr double kOracleSeconds = 30.0;
constexpr int kFaults = 10;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<std::pair<int, int>> admissible(int nmin, int nmax) {
  std::vector<std::pair<int, int>> out;
  for (int n = nmin; n <= nmax; ++n)
    for (int l = 1; l <= n; ++l)
      if (n % l == 0) out.emplace_back(n, l);
  return out;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome path_law() {
  Outcome o;
  int pairs = 0;
  long long steps = 0;
  for (auto [n, l] : admissible(4, 12)) {
    const auto path = build_path(n, l);
    ++pairs;
    steps += path.length();
    bool ok = path.length() == static_cast<long long>(2 * n - l) * (n - 2) &&
              persistent_classes(path).empty() && endpoint_matches_monodromy(path);
    for (std::size_t s = 0; ok && s + 1 < path.steps.size(); ++s) {
      ok = is_A_move(path.steps[s], path.steps[s + 1]).ok;
    }
    if (!ok) {
      o.pass = false;
      o.detail = "failed at n=" + std::to_string(n) + " l=" + std::to_string(l);
      return o;
    }
  }
  o.detail = std::to_string(pairs) + " (n,l) pairs, " + std::to_string(steps) +
             " steps certified";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  long long pairs = 0;
  for (int n = 4; n <= 8; ++n) {
    std::vector<Curve> curves;
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = 2; j < n; ++j)
        if ((i + j) % 2 == 1) curves.push_back(beta_curve(i, j, n));
    auto compare = [&](const Curve& a, const Curve& b) {
      ++pairs;
      if (oracle::oracle_intersection(a, b) != geometric_intersection(a, b) && o.pass) {
        o.pass = false;
        o.detail = "mismatch " + a.token() + " vs " + b.token() + " n=" + std::to_string(n);
      }
    };
    for (const auto& a : curves) {
      for (const auto& b : curves) compare(a, b);
      compare(a, beta_curve(a.index() + 2 * n, a.width(), n));
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs, exact agreement";
  return o;
}

Outcome census_exactness() {
  Outcome o;
  int fills = 0;
  long long letters = 0;
  for (auto [n, l] : admissible(4, 10)) {
    const auto t = build_template(n, l);
    std::vector<FillingSystem> systems = {default_slopes(t),
                                          uniform_slopes(t, slope_range(n, l).hi)};
    FillingSystem perturbed = default_slopes(t);
    for (std::size_t k = 0; k < t.loops.size(); ++k) perturbed.perturb(k, static_cast<int>(k % 3));
    systems.push_back(perturbed);
    for (const auto& f : systems) {
      ++fills;
      const long long total = fill(t, f).crossing_total();
      letters += total;
      if (total != crossing_census(t, f)) {
        o.pass = false;
        o.detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
        return o;
      }
    }
  }
  o.detail = std::to_string(fills) + " fills, " + std::to_string(letters) +
             " letters, word length == closed form";
  return o;
}

Outcome bound_table() {
  Outcome o;
  std::ostringstream table;
  table << "    n   l      census        4pi n^5        margin\n";
  double worst_ratio = 0.0;
  for (auto [n, l] : admissible(4, 20)) {
    const auto t = build_template(n, l);
    const auto r = verify_bound(t, default_slopes(t));
    o.pass = o.pass && r.pass;
    worst_ratio = std::max(worst_ratio, static_cast<double>(r.census) / r.bound);
    char line[128];
    std::snprintf(line, sizeof line, "  %3d %3d %11lld %14.1f %13.1f\n", n, l, r.census,
                  r.bound, r.margin);
    table << line;
  }
  const auto t6 = build_template(6, 1);
  const auto r6 = verify_bound(t6, default_slopes(t6));
  const bool value_ok = std::abs(r6.bound - 4.0 * std::numbers::pi * 7776.0) < 1e-6 &&
                        std::abs(r6.bound - 97716.0) < 1.0;
  o.pass = o.pass && value_ok;
  std::cout << table.str();
  o.detail = "max census/bound " + fmt("%.4f", worst_ratio) + "; n=6 l=1 census " +
             std::to_string(r6.census) + " < " + fmt("%.1f", r6.bound);
  return o;
}

// Loop twists are pure braids, so stripping them must leave the closure
// permutation unchanged.
std::vector<int> permutation_without_twists(const LinkDiagram& d) {
  std::vector<int> word;
  for (const auto& b : d.blocks) {
    if (b.kind == BlockKind::rotation)
      word.insert(word.end(), d.word.begin() + static_cast<long>(b.begin),
                  d.word.begin() + static_cast<long>(b.begin + b.length));
  }
  return diagram_from_word(d.strand_count, word).permutation();
}

Outcome components_and_bridges(bool bridges) {
  Outcome o;
  int tested = 0;
  for (auto [n, l] : admissible(4, 20)) {
    const auto t = build_template(n, l);
    const auto f = n <= 10 ? default_slopes(t) : uniform_slopes(t, 1);
    const auto d = fill(t, f);
    ++tested;
    const bool ok = bridges ? bridge_upper_bound(d) == n
                            : d.component_count() == l &&
                                  d.permutation() == permutation_without_twists(d);
    if (!ok) {
      o.pass = false;
      o.detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      return o;
    }
  }
  o.detail = std::to_string(tested) + " diagrams (n<=20, every l|n)";
  return o;
}

Outcome structural_counts() {
  Outcome o;
  for (int n = 4; n <= 20; ++n) {
    for (int i = 1; i <= 2 * n; ++i) {
      const auto p = standard_decomposition(i, n);
      const auto c = count_pants(p);
      if (p.size() != static_cast<std::size_t>(n - 2) || c.regions != n - 1 || !c.all_pants ||
          c.euler_characteristic != 1 - n) {
        o.pass = false;
        o.detail = "P_" + std::to_string(i) + " n=" + std::to_string(n);
        return o;
      }
    }
  }
  for (auto [n, l] : admissible(4, 20)) {
    const auto census = width_census(build_template(n, l));
    bool ok = census.size() == static_cast<std::size_t>(n - 2);
    for (const auto& [w, count] : census) ok = ok && w >= 2 && w <= n - 1 && count == 2 * n - l;
    if (!ok) {
      o.pass = false;
      o.detail = "loop census n=" + std::to_string(n) + " l=" + std::to_string(l);
      return o;
    }
  }
  o.detail = "P_i: n-2 curves, n-1 pants; 2n-l loops per width, n<=20";
  return o;
}

Outcome export_validity() {
  Outcome o;
  int diagrams = 0;
  for (auto [n, l] : admissible(4, 10)) {
    const auto t = build_template(n, l);
    const auto d = fill(t, default_slopes(t));
    ++diagrams;
    const auto g = to_gauss(d);
    const auto pd = to_pd(d);
    bool ok = !check_pd(pd) && !check_gauss(g) && pd_from_gauss(g) == pd;
    if (l == 1) {
      ok = ok && to_dt(d).size() == d.word.size();
    } else {
      try {
        (void)to_dt(d);
        ok = false;
      } catch (const NotAKnotError& e) {
        ok = ok && e.components() == l;
      }
    }
    ok = ok && render_svg(d, &t) == render_svg(d, &t);
    if (!ok) {
      o.pass = false;
      o.detail = "n=" + std::to_string(n) + " l=" + std::to_string(l);
      return o;
    }
  }
  o.detail = std::to_string(diagrams) + " diagrams: PD arcs, Gauss pairing, DT, SVG bytes";
  return o;
}

Outcome fault_injection() {
  Outcome o;
  const fs::path dir = fs::path(AGOL_TEST_TMP) / "faults";
  fs::remove_all(dir);
  std::ostringstream sink;
  if (cli::run({"generate", "--n", "6", "--l", "1", "--formats", "braid", "--out", dir.string()},
               sink, sink) != 0) {
    return {false, "generate failed"};
  }
  json base;
  std::ifstream(dir / "template.json") >> base;

  using Tamper = std::function<void(json&)>;
  const std::vector<std::pair<std::string, Tamper>> faults = {
      {"/n", [](json& d) { d["n"] = 7; }},
      {"/l", [](json& d) { d["l"] = 2; }},
      {"/monodromy_shift", [](json& d) { d["monodromy_shift"] = 2; }},
      {"/has_augmentation", [](json& d) { d["has_augmentation"] = false; }},
      {"/path_length", [](json& d) { d["path_length"] = 43; }},
      {"/format", [](json& d) { d["format"] = "other"; }},
      {"/loops/7/j", [](json& d) { d["loops"][7]["j"] = d["loops"][7]["j"].get<int>() + 2; }},
      {"/loops/12/i", [](json& d) { d["loops"][12]["i"] = d["loops"][12]["i"].get<int>() + 2; }},
      {"/loops/3/strands/0",
       [](json& d) { d["loops"][3]["strands"][0] = d["loops"][3]["strands"][0].get<int>() + 1; }},
      {"/loops/20/step", [](json& d) { d["loops"][20]["step"] = 5; }},
  };
  int caught = 0;
  std::string missed;
  for (const auto& [field, tamper] : faults) {
    json doc = base;
    tamper(doc);
    const fs::path file = dir / "tampered.json";
    std::ofstream(file) << doc.dump();
    std::ostringstream out, err;
    if (cli::run({"validate", file.string()}, out, err) == cli::validation_failure) {
      ++caught;
    } else {
      missed += " " + field;
    }
  }
  std::ostringstream out, err;
  const bool clean = cli::run({"validate", (dir / "template.json").string()}, out, err) == 0;
  o.pass = caught == kFaults && static_cast<int>(faults.size()) == kFaults && clean;
  o.detail = std::to_string(caught) + "/" + std::to_string(kFaults) + " faults caught" +
             (missed.empty() ? "" : ", missed:" + missed) +
             (clean ? "; untampered passes" : "; untampered FAILS");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria = {
      {1, "path law", path_law, kPathSeconds},
      {2, "oracle equivalence", oracle_equivalence, kOracleSeconds},
      {3, "census exactness", census_exactness, 0},
      {4, "4 pi n^5 bound", bound_table, 0},
      {5, "component count", [] { return components_and_bridges(false); }, 0},
      {6, "bridge certificate", [] { return components_and_bridges(true); }, 0},
      {7, "structural counts", structural_counts, 0},
      {8, "export validity", export_validity, 0},
      {9, "fault injection", fault_injection, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && secs >= c.time_limit) {
      o.pass = false;
      o.detail += "; over time limit " + fmt("%.0f s", c.time_limit);
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] criterion %d %-20s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
