#include "agol/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>

namespace agol {

namespace {

long long sum_j_j_minus_1(int n) {
  long long total = 0;
  for (int j = 2; j <= n - 1; ++j) total += static_cast<long long>(j) * (j - 1);
  return total;
}

long long twist_crossings(int width) {
  return static_cast<long long>(width) * (width - 1);
}

}  // namespace

SlopeRange slope_range(int n, int l) {
  SlopeRange r;
  r.lower_exact = 2.0 * std::numbers::pi * (2 * n - l);
  r.lo = static_cast<int>(std::ceil(r.lower_exact));
  r.hi = static_cast<int>(std::floor(r.lower_exact + 2.0));
  return r;
}

int FillingSystem::loop_slope(std::size_t k) const {
  const int offset = k < perturbations.size() ? perturbations[k] : 0;
  return s_loops.at(k) + offset;
}

void FillingSystem::perturb(std::size_t k, int delta) {
  if (perturbations.size() < s_loops.size()) perturbations.resize(s_loops.size(), 0);
  perturbations.at(k) += delta;
}

FillingSystem uniform_slopes(const LinkTemplate& t, int s) {
  FillingSystem f;
  f.range = slope_range(t.n, t.l);
  f.s_q = s;
  f.s_loops.assign(t.loops.size(), s);
  f.perturbations.assign(t.loops.size(), 0);
  return f;
}

FillingSystem default_slopes(const LinkTemplate& t) {
  return uniform_slopes(t, slope_range(t.n, t.l).lo);
}

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::monodromy: return "monodromy";
    case BlockKind::loop: return "loop";
    case BlockKind::rotation: return "rotation";
    case BlockKind::augmentation: return "augmentation";
  }
  return "unknown";
}

std::vector<int> LinkDiagram::permutation() const {
  // at[s]: current position of strand s; who[p]: strand at position p.
  std::vector<int> at(static_cast<std::size_t>(strand_count));
  std::vector<int> who(static_cast<std::size_t>(strand_count));
  for (int p = 0; p < strand_count; ++p) at[p] = who[p] = p;
  for (int letter : word) {
    const int a = std::abs(letter) - 1;
    std::swap(who[a], who[a + 1]);
    at[who[a]] = a;
    at[who[a + 1]] = a + 1;
  }
  return at;
}

std::vector<std::vector<int>> LinkDiagram::components() const {
  const auto perm = permutation();
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < strand_count; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[p]; p = perm[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int LinkDiagram::component_count() const {
  return static_cast<int>(components().size());
}

LinkDiagram diagram_from_word(int n, std::vector<int> word) {
  if (n < 1) throw Error(Errc::invalid_word, "a braid needs at least one strand");
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > n - 1) {
      throw Error(Errc::invalid_word, "letter " + std::to_string(letter) +
                                          " is not a generator on " +
                                          std::to_string(n) + " strands");
    }
  }
  LinkDiagram d;
  d.strand_count = n;
  d.word = std::move(word);
  return d;
}

void append_full_twists(std::vector<int>& word, int first, int width, int twists) {
  const int sign = twists < 0 ? -1 : 1;
  for (int t = 0; t < std::abs(twists); ++t) {
    for (int rep = 0; rep < width; ++rep) {
      for (int k = first + 1; k <= first + width - 1; ++k) word.push_back(sign * k);
    }
  }
}

int bottom_label_offset(int n) {
  const auto p1 = standard_decomposition(1, n);
  for (const auto& c : p1.curves()) {
    if (c.width() != n - 1) continue;
    for (int k = 0; k < n; ++k) {
      if (!c.encircles(k)) return (k + 1) % n;
    }
  }
  throw Error(Errc::invalid_decomposition, "P_1 has no curve of width n-1");
}

LinkDiagram fill(const LinkTemplate& t, const FillingSystem& f, FiberOrder order) {
  check_construction_parameters(t.n, t.l);
  if (f.s_loops.size() != t.loops.size()) {
    throw Error(Errc::missing_slope,
                "filling system has " + std::to_string(f.s_loops.size()) +
                    " loop slopes for " + std::to_string(t.loops.size()) + " loops");
  }
  if (t.has_augmentation && f.s_q == 0) {
    throw Error(Errc::zero_slope, "slope 1/0 on B_q is not a filling");
  }
  for (std::size_t k = 0; k < t.loops.size(); ++k) {
    if (f.loop_slope(k) == 0) {
      throw Error(Errc::zero_slope,
                  "slope 1/0 on " + t.loops[k].token() + " is not a filling");
    }
  }

  const int n = t.n;
  const int offset = bottom_label_offset(n);
  LinkDiagram d;
  d.strand_count = n;
  d.word.reserve(static_cast<std::size_t>(crossing_census(t, f)));

  auto open_block = [&](BlockKind kind, int first, int width, int twists, int loop) {
    d.blocks.push_back(Block{kind, d.word.size(), 0, first, width, twists, loop});
  };
  auto close_block = [&]() {
    d.blocks.back().length = d.word.size() - d.blocks.back().begin;
  };

  open_block(BlockKind::monodromy, 0, n, t.extra_full_twists - 2, -1);
  append_full_twists(d.word, 0, n, t.extra_full_twists - 2);
  close_block();

  // Loop index per fiber, in the requested order.
  std::map<int, std::vector<std::size_t>> fibers;
  for (std::size_t k = 0; k < t.loops.size(); ++k) fibers[t.loops[k].i].push_back(k);
  for (auto& [i, ks] : fibers) {
    std::stable_sort(ks.begin(), ks.end(), [&](std::size_t a, std::size_t b) {
      return order == FiberOrder::widest_first ? t.loops[a].j > t.loops[b].j
                                               : t.loops[a].j < t.loops[b].j;
    });
  }

  for (int r = 1; r <= 2 * n - t.l; ++r) {
    for (int fiber : {2 * r - 1, 2 * r}) {
      auto it = fibers.find(fiber);
      if (it == fibers.end()) continue;
      for (std::size_t k : it->second) {
        const Loop& loop = t.loops[k];
        // After r-1 rotation steps the loop sits where its P_1 counterpart is.
        const Curve frame = beta_curve(loop.i - 2 * (r - 1), loop.j, n);
        const auto labels = frame.encircled();
        const int first = ((labels.front() - offset) % n + n) % n;
        for (std::size_t s = 0; s < labels.size(); ++s) {
          if (((labels[s] - offset) % n + n) % n != first + static_cast<int>(s)) {
            throw Error(Errc::invalid_decomposition,
                        loop.token() + " does not encircle adjacent strands");
          }
        }
        const int s = f.loop_slope(k);
        open_block(BlockKind::loop, first, loop.j, s, static_cast<int>(k));
        append_full_twists(d.word, first, loop.j, s);
        close_block();
      }
    }
    open_block(BlockKind::rotation, 0, n, 1, -1);
    for (int g = 1; g <= n - 1; ++g) d.word.push_back(g);
    close_block();
  }

  if (t.has_augmentation) {
    open_block(BlockKind::augmentation, 0, n, f.s_q, -1);
    append_full_twists(d.word, 0, n, f.s_q);
    close_block();
  }
  return d;
}

long long monodromy_crossings(const LinkTemplate& t) {
  return static_cast<long long>(t.n - 1) * (2 * t.n - t.l) +
         std::llabs(t.extra_full_twists - 2) * twist_crossings(t.n);
}

long long crossing_census(const LinkTemplate& t, const FillingSystem& f) {
  long long total = monodromy_crossings(t);
  if (t.has_augmentation) total += std::llabs(f.s_q) * twist_crossings(t.n);
  for (std::size_t k = 0; k < t.loops.size(); ++k) {
    total += std::llabs(f.loop_slope(k)) * twist_crossings(t.loops[k].j);
  }
  return total;
}

BoundReport verify_bound(const LinkTemplate& t, const FillingSystem& f) {
  BoundReport r;
  r.n = t.n;
  r.l = t.l;
  r.range = slope_range(t.n, t.l);
  r.monodromy_term = monodromy_crossings(t);
  r.augmentation_term = t.has_augmentation ? std::llabs(f.s_q) * twist_crossings(t.n) : 0;
  for (std::size_t k = 0; k < t.loops.size(); ++k) {
    r.loop_term += std::llabs(f.loop_slope(k)) * twist_crossings(t.loops[k].j);
  }
  r.census = r.monodromy_term + r.augmentation_term + r.loop_term;

  const double n = t.n;
  r.bound = 4.0 * std::numbers::pi * std::pow(n, 5);
  r.margin = r.bound - static_cast<double>(r.census);
  r.pass = static_cast<double>(r.census) < r.bound;

  r.slopes_in_range = r.range.contains(f.s_q);
  for (std::size_t k = 0; k < t.loops.size(); ++k) {
    r.slopes_in_range = r.slopes_in_range && r.range.contains(f.loop_slope(k));
  }

  const double sum = static_cast<double>(sum_j_j_minus_1(t.n));
  const double rotation = (n - 1) * (2 * t.n - t.l);
  auto display = [&](int multiplier_l) {
    const double s = 2.0 * std::numbers::pi * (2 * t.n - multiplier_l) + 2.0;
    return rotation + s * n * (n - 1) + s * sum * (2 * t.n - t.l);
  };
  r.display_2n_minus_1 = display(1);
  r.display_2n_minus_l = display(t.l);
  r.display_intermediate = 4.0 * std::numbers::pi * n * n * (n + 2.0 * sum);
  return r;
}

nlohmann::json to_json(const BoundReport& r) {
  return {{"n", r.n},
          {"l", r.l},
          {"census", r.census},
          {"terms",
           {{"monodromy", r.monodromy_term},
            {"augmentation", r.augmentation_term},
            {"loops", r.loop_term}}},
          {"bound_4pi_n5", r.bound},
          {"margin", r.margin},
          {"pass", r.pass},
          {"slope_range",
           {{"lower_exact", r.range.lower_exact}, {"lo", r.range.lo}, {"hi", r.range.hi}}},
          {"slopes_in_range", r.slopes_in_range},
          {"displayed_sum",
           {{"multiplier_2pi_2n_minus_1_plus_2", r.display_2n_minus_1},
            {"multiplier_2pi_2n_minus_l_plus_2", r.display_2n_minus_l},
            {"census_within_2n_minus_1", static_cast<double>(r.census) <= r.display_2n_minus_1},
            {"census_within_2n_minus_l", static_cast<double>(r.census) <= r.display_2n_minus_l},
            {"intermediate_4pi_n2", r.display_intermediate}}}};
}

int bridge_upper_bound(const LinkDiagram& d) { return d.strand_count; }

}  // namespace agol
