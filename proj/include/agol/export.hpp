#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "agol/diagram.hpp"

namespace agol {

// Planar diagram code. Each tuple lists the four arcs at a crossing
// counterclockwise, starting from the incoming under-strand.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  bool operator==(const PDCode&) const = default;
};

// Signed Gauss code: per component, crossing numbers (1-based, word order) in
// traversal order, positive when passing over, negative when passing under.
// `signs` holds the writhe sign of each crossing.
struct GaussCode {
  std::vector<int> signs;
  std::vector<std::vector<int>> components;

  bool operator==(const GaussCode&) const = default;
};

class NotAKnotError : public Error {
public:
  explicit NotAKnotError(int components);
  int components() const noexcept { return components_; }

private:
  int components_;
};

PDCode to_pd(const LinkDiagram& d);
GaussCode to_gauss(const LinkDiagram& d);
// Dowker-Thistlethwaite code; an even entry is negative when that visit
// passes over. Throws NotAKnotError for links.
std::vector<int> to_dt(const LinkDiagram& d);

// Rebuilds the PD code from the Gauss code using the same arc labeling.
PDCode pd_from_gauss(const GaussCode& g);

// Arc-doubling check: every label 1..2c occurs exactly twice.
std::optional<std::string> check_pd(const PDCode& pd);
// Every crossing visited exactly twice, once over and once under.
std::optional<std::string> check_gauss(const GaussCode& g);

std::string format_pd(const PDCode& pd);
std::string format_gauss(const GaussCode& g);
std::string format_dt(const std::vector<int>& dt);
std::string format_braid(const LinkDiagram& d, int l);

struct BraidFile {
  int n = 0;
  int l = 0;
  int components = 0;
  LinkDiagram diagram;
};

BraidFile parse_braid(const std::string& text);

struct SvgOptions {
  bool expand_twists = false;
};

constexpr long long kMaxExpandedCrossings = 500;

// Schematic closed-braid drawing. Twist regions are labeled boxes; with
// expand_twists every crossing is drawn (diagrams up to 500 crossings).
// `t` may be null for diagrams that did not come from a template.
std::string render_svg(const LinkDiagram& d, const LinkTemplate* t,
                       const SvgOptions& options = {});

}  // namespace agol
