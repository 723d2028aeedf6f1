#pragma once

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "agol/link_template.hpp"

namespace agol {

// Closed integer range the default slopes are drawn from, lower end at
// 2 pi (2n - l).
struct SlopeRange {
  double lower_exact = 0.0;
  int lo = 0;
  int hi = 0;

  bool contains(int s) const { return s >= lo && s <= hi; }
};

SlopeRange slope_range(int n, int l);

// Slopes 1/s for B_q and for every drilled loop (indexed like
// LinkTemplate::loops). Perturbations are explicit offsets added to the loop
// slopes, used to step off a boundary slope.
struct FillingSystem {
  int s_q = 0;
  std::vector<int> s_loops;
  std::vector<int> perturbations;
  SlopeRange range;

  int loop_slope(std::size_t k) const;
  // Adds `delta` to the perturbation of loop k.
  void perturb(std::size_t k, int delta);
};

// Every slope at the lower end of slope_range, no perturbations.
FillingSystem default_slopes(const LinkTemplate& t);
FillingSystem uniform_slopes(const LinkTemplate& t, int s);

enum class BlockKind { monodromy, loop, rotation, augmentation };

const char* block_kind_name(BlockKind kind);

// A contiguous run of the braid word with a single meaning.
struct Block {
  BlockKind kind = BlockKind::loop;
  std::size_t begin = 0;
  std::size_t length = 0;
  int first_position = 0;  // 0-based leftmost strand position touched
  int width = 0;           // strands touched
  int twists = 0;          // signed full twists (rotation blocks: steps)
  int loop = -1;           // index into LinkTemplate::loops for loop blocks
};

// Closed braid. Letter +k / -k is sigma_k^{+-1}, exchanging the 0-based
// positions k-1 and k; the word is read bottom to top.
struct LinkDiagram {
  int strand_count = 0;
  std::vector<int> word;
  bool closed = true;
  std::vector<Block> blocks;

  long long crossing_total() const {
    return static_cast<long long>(word.size());
  }
  // perm[p]: top position of the strand entering at bottom position p.
  std::vector<int> permutation() const;
  // Cycles of the closure, as bottom positions in traversal order.
  std::vector<std::vector<int>> components() const;
  int component_count() const;
};

// Checks every letter is a generator of the n-strand braid group.
LinkDiagram diagram_from_word(int n, std::vector<int> word);

// Full twist on `width` strands starting at 0-based position `first`,
// repeated |twists| times with the sign of `twists`.
void append_full_twists(std::vector<int>& word, int first, int width, int twists);

// Puncture label sitting at bottom position p is (p + offset) mod n. The
// offset puts the one puncture outside every curve of P_1 at position n-1.
int bottom_label_offset(int n);

enum class FiberOrder { widest_first, narrowest_first };

// Dehn filling as twist insertion. The mapping torus braid is spread out as
// one rotation step after each sub-path, so that every loop encircles a run
// of adjacent positions. Throws Error(missing_slope) / Error(zero_slope).
LinkDiagram fill(const LinkTemplate& t, const FillingSystem& f,
                 FiberOrder order = FiberOrder::widest_first);

// Crossings of the monodromy part: (n-1)(2n-l) rotation crossings plus
// |extra_full_twists - 2| full twists on n strands.
long long monodromy_crossings(const LinkTemplate& t);

// Closed form, independent of the word builder.
long long crossing_census(const LinkTemplate& t, const FillingSystem& f);

struct BoundReport {
  int n = 0;
  int l = 0;
  long long census = 0;
  long long monodromy_term = 0;
  long long augmentation_term = 0;
  long long loop_term = 0;
  double bound = 0.0;  // 4 pi n^5
  double margin = 0.0;
  bool pass = false;
  bool slopes_in_range = false;
  SlopeRange range;
  // Displayed inequality with slope multiplier 2 pi (2n - 1) + 2 and with
  // 2 pi (2n - l) + 2.
  double display_2n_minus_1 = 0.0;
  double display_2n_minus_l = 0.0;
  // 4 pi n^2 (n + 2 sum_{j=2}^{n-1} j(j-1)).
  double display_intermediate = 0.0;
};

BoundReport verify_bound(const LinkTemplate& t, const FillingSystem& f);

nlohmann::json to_json(const BoundReport& r);

// A closed n-braid is an n-bridge presentation.
int bridge_upper_bound(const LinkDiagram& d);

}  // namespace agol
