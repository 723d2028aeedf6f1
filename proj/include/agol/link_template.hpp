#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "agol/pants_path.hpp"

namespace agol {

// Drilled loop L_{i,j}: the curve beta_{i,j} replaced at `step`, pushed into
// the fiber indexed by i.
struct Loop {
  int i = 0;
  int j = 0;
  std::vector<int> strands;  // encircled puncture labels, cyclic order
  int step = 0;              // 1-based path step

  std::string token() const;
  bool operator==(const Loop&) const = default;
};

// Combinatorial model of the drilled mapping torus: monodromy, augmentation
// circle and drilled loops.
struct LinkTemplate {
  int n = 0;
  int l = 0;
  int monodromy_shift = 0;    // strand shift per period, equals l
  int extra_full_twists = 2;  // 4 pi added to the gluing
  bool has_augmentation = true;
  std::vector<Loop> loops;

  long long path_length() const { return static_cast<long long>(loops.size()); }
  bool operator==(const LinkTemplate&) const = default;
};

LinkTemplate build_template(int n, int l, int extra_full_twists = 2);

// Number of cycles of k -> (k - shift) mod n, counted by walking the cycles.
int component_count(int n, int shift);

// Loops grouped by fiber index i; inside a fiber, widest first. Throws
// Error(invalid_decomposition) if two loops of one fiber intersect.
std::map<int, std::vector<Loop>> loop_heights(const LinkTemplate& t);

// Number of loops of each width.
std::map<int, int> width_census(const LinkTemplate& t);

struct Issue {
  std::string pointer;  // JSON pointer into the persisted template
  std::string message;
};

// Re-runs every template invariant, including agreement with the path the
// template claims to come from.
std::vector<Issue> validate_template(const LinkTemplate& t);

nlohmann::json to_json(const LinkTemplate& t);

// Schema-checked parse. On failure, `issues` receives the offending paths and
// the returned template is empty.
LinkTemplate template_from_json(const nlohmann::json& doc,
                                std::vector<Issue>& issues);

}  // namespace agol
