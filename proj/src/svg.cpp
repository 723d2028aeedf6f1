#include <cstdlib>
#include <sstream>

#include "agol/export.hpp"

namespace agol {

namespace {

constexpr int kMargin = 40;
constexpr int kStrandGap = 30;
constexpr int kGlyphHeight = 14;
constexpr int kBoxHeight = 26;
constexpr int kLabelWidth = 320;

struct Row {
  bool box = false;
  int letter = 0;          // glyph rows
  const Block* block = nullptr;  // box rows
  long long crossings = 0; // box rows for plain runs
  int height = 0;
};

int strand_x(int p) { return kMargin + kStrandGap * p; }

std::string box_label(const Row& row, const LinkTemplate* t) {
  std::ostringstream out;
  if (row.block == nullptr) {
    out << row.crossings << " crossings";
    return out.str();
  }
  const Block& b = *row.block;
  switch (b.kind) {
    case BlockKind::loop:
      if (t != nullptr && b.loop >= 0 &&
          static_cast<std::size_t>(b.loop) < t->loops.size()) {
        out << t->loops[static_cast<std::size_t>(b.loop)].token() << ": ";
      }
      out << b.twists << " full twists on " << b.width << " strands";
      break;
    case BlockKind::monodromy:
      out << "monodromy: shift " << (t != nullptr ? t->l : 0) << ", "
          << (t != nullptr ? t->extra_full_twists : 0)
          << " extra full twists; one rotation step after each sub-path";
      break;
    case BlockKind::augmentation:
      out << "B_q: " << b.twists << " full twists on " << b.width << " strands";
      break;
    case BlockKind::rotation:
      out << "rotation";
      break;
  }
  return out.str();
}

const char* box_class(const Row& row) {
  if (row.block == nullptr) return "braid";
  switch (row.block->kind) {
    case BlockKind::loop: return "twist";
    case BlockKind::monodromy: return "monodromy";
    case BlockKind::augmentation: return "augmentation";
    case BlockKind::rotation: return "rotation";
  }
  return "braid";
}

void add_glyphs(std::vector<Row>& rows, const std::vector<int>& word,
                std::size_t begin, std::size_t end) {
  for (std::size_t c = begin; c < end; ++c) {
    rows.push_back(Row{false, word[c], nullptr, 0, kGlyphHeight});
  }
}

void add_plain_run(std::vector<Row>& rows, const std::vector<int>& word,
                   std::size_t begin, std::size_t end) {
  if (begin >= end) return;
  if (static_cast<long long>(end - begin) <= kMaxExpandedCrossings) {
    add_glyphs(rows, word, begin, end);
  } else {
    rows.push_back(Row{true, 0, nullptr, static_cast<long long>(end - begin), kBoxHeight});
  }
}

}  // namespace

std::string render_svg(const LinkDiagram& d, const LinkTemplate* t,
                       const SvgOptions& options) {
  if (options.expand_twists && d.crossing_total() > kMaxExpandedCrossings) {
    throw Error(Errc::invalid_parameters,
                "expanded rendering is limited to " +
                    std::to_string(kMaxExpandedCrossings) + " crossings, diagram has " +
                    std::to_string(d.crossing_total()));
  }

  std::vector<Row> rows;
  if (options.expand_twists) {
    add_glyphs(rows, d.word, 0, d.word.size());
  } else {
    std::size_t cursor = 0;
    for (const auto& b : d.blocks) {
      add_plain_run(rows, d.word, cursor, b.begin);
      if (b.kind == BlockKind::rotation) {
        add_glyphs(rows, d.word, b.begin, b.begin + b.length);
      } else {
        rows.push_back(Row{true, 0, &b, 0, kBoxHeight});
      }
      cursor = b.begin + b.length;
    }
    add_plain_run(rows, d.word, cursor, d.word.size());
  }

  const int n = d.strand_count;
  int body = 0;
  for (const auto& r : rows) body += r.height;
  const int width = 2 * kMargin + kStrandGap * (n - 1) + kLabelWidth;
  const int height = 2 * kMargin + body;
  const int label_x = strand_x(n - 1) + 24;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\">\n"
      << "<!-- closed braid: n=" << n;
  if (t != nullptr) svg << " l=" << t->l;
  svg << " crossings=" << d.crossing_total() << " components=" << d.component_count()
      << " -->\n"
      << "<style>.strand{stroke:#777;stroke-width:2}"
         ".over,.under{stroke:#333;stroke-width:2;fill:none}"
         "rect{fill:#fff;stroke:#1f4e9c;stroke-width:1.5}"
         "rect.monodromy,rect.augmentation{stroke:#9c1f1f}"
         "rect.erase{stroke:none}"
         "text{font-family:monospace;font-size:11px}</style>\n";

  for (int p = 0; p < n; ++p) {
    svg << "<line class=\"strand\" x1=\"" << strand_x(p) << "\" y1=\"" << kMargin
        << "\" x2=\"" << strand_x(p) << "\" y2=\"" << height - kMargin << "\"/>\n";
  }

  // Word is read bottom to top.
  int y_bottom = height - kMargin;
  for (const auto& r : rows) {
    const int y_top = y_bottom - r.height;
    if (r.box) {
      const int first = r.block != nullptr ? r.block->first_position : 0;
      const int span = r.block != nullptr ? r.block->width : n;
      const int x0 = strand_x(first) - 10;
      const int x1 = strand_x(first + span - 1) + 10;
      svg << "<rect class=\"" << box_class(r) << "\" x=\"" << x0 << "\" y=\""
          << y_top + 2 << "\" width=\"" << x1 - x0 << "\" height=\"" << r.height - 4
          << "\"/>\n"
          << "<text x=\"" << label_x << "\" y=\"" << y_top + r.height / 2 + 4 << "\">"
          << box_label(r, t) << "</text>\n";
    } else {
      const int a = std::abs(r.letter) - 1;
      const int xl = strand_x(a);
      const int xr = strand_x(a + 1);
      svg << "<rect class=\"erase\" x=\"" << xl - 2 << "\" y=\"" << y_top << "\" width=\""
          << xr - xl + 4 << "\" height=\"" << r.height << "\"/>\n";
      // Positive letters carry the bottom-left strand over.
      const int over_x0 = r.letter > 0 ? xl : xr;
      const int over_x1 = r.letter > 0 ? xr : xl;
      const int under_x0 = r.letter > 0 ? xr : xl;
      const int under_x1 = r.letter > 0 ? xl : xr;
      // Under strand is broken between 40% and 60% of its length.
      const int dx = under_x1 - under_x0;
      const int dy = y_top - y_bottom;
      svg << "<line class=\"over\" x1=\"" << over_x0 << "\" y1=\"" << y_bottom
          << "\" x2=\"" << over_x1 << "\" y2=\"" << y_top << "\"/>\n"
          << "<polyline class=\"under\" points=\"" << under_x0 << ',' << y_bottom << ' '
          << under_x0 + dx * 2 / 5 << ',' << y_bottom + dy * 2 / 5 << "\"/>\n"
          << "<polyline class=\"under\" points=\"" << under_x0 + dx * 3 / 5 << ','
          << y_bottom + dy * 3 / 5 << ' ' << under_x1 << ',' << y_top << "\"/>\n";
    }
    y_bottom = y_top;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace agol
