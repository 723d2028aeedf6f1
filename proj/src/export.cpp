#include "agol/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace agol {

namespace {

struct Visit {
  int crossing;  // 0-based word index
  bool over;
};

// Walks every component of the closure from its lowest bottom position.
std::vector<std::vector<Visit>> traverse(const LinkDiagram& d) {
  std::vector<std::vector<Visit>> out;
  for (const auto& cycle : d.components()) {
    std::vector<Visit> visits;
    for (int start : cycle) {
      int pos = start;
      for (std::size_t c = 0; c < d.word.size(); ++c) {
        const int letter = d.word[c];
        const int a = std::abs(letter) - 1;
        if (pos != a && pos != a + 1) continue;
        const bool from_left = pos == a;
        visits.push_back(Visit{static_cast<int>(c), from_left == (letter > 0)});
        pos = from_left ? a + 1 : a;
      }
    }
    out.push_back(std::move(visits));
  }
  return out;
}

struct Strands {
  int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
};

// Arc labels: along each component, the arc entering its t-th visit is
// base + t; components are numbered consecutively.
PDCode pd_from_visits(const std::vector<int>& signs,
                      const std::vector<std::vector<int>>& components) {
  std::vector<Strands> at(signs.size());
  int base = 0;
  for (const auto& comp : components) {
    const int m = static_cast<int>(comp.size());
    for (int t = 0; t < m; ++t) {
      const int c = std::abs(comp[t]) - 1;
      const int in = base + t + 1;
      const int out = base + (t + 1) % m + 1;
      if (comp[t] > 0) {
        at[c].over_in = in;
        at[c].over_out = out;
      } else {
        at[c].under_in = in;
        at[c].under_out = out;
      }
    }
    base += m;
  }
  PDCode pd;
  pd.crossings.reserve(signs.size());
  for (std::size_t c = 0; c < signs.size(); ++c) {
    const Strands& s = at[c];
    if (signs[c] > 0) {
      pd.crossings.push_back({s.under_in, s.over_out, s.under_out, s.over_in});
    } else {
      pd.crossings.push_back({s.under_in, s.over_in, s.under_out, s.over_out});
    }
  }
  return pd;
}

}  // namespace

NotAKnotError::NotAKnotError(int components)
    : Error(Errc::not_a_knot, "DT code needs a knot; diagram has components=" +
                                  std::to_string(components)),
      components_(components) {}

GaussCode to_gauss(const LinkDiagram& d) {
  GaussCode g;
  g.signs.reserve(d.word.size());
  for (int letter : d.word) g.signs.push_back(letter > 0 ? 1 : -1);
  for (const auto& visits : traverse(d)) {
    std::vector<int> comp;
    comp.reserve(visits.size());
    for (const auto& v : visits) comp.push_back(v.over ? v.crossing + 1 : -(v.crossing + 1));
    g.components.push_back(std::move(comp));
  }
  return g;
}

PDCode to_pd(const LinkDiagram& d) {
  const GaussCode g = to_gauss(d);
  return pd_from_visits(g.signs, g.components);
}

PDCode pd_from_gauss(const GaussCode& g) {
  if (auto reason = check_gauss(g)) throw Error(Errc::schema, *reason);
  return pd_from_visits(g.signs, g.components);
}

std::vector<int> to_dt(const LinkDiagram& d) {
  const int k = d.component_count();
  if (k != 1) throw NotAKnotError(k);
  const auto visits = traverse(d).front();
  std::vector<int> odd_label(d.word.size(), 0);
  std::vector<int> even_label(d.word.size(), 0);
  std::vector<bool> even_over(d.word.size(), false);
  for (std::size_t t = 0; t < visits.size(); ++t) {
    const int label = static_cast<int>(t) + 1;
    const auto& v = visits[t];
    if (label % 2 == 1) {
      odd_label[v.crossing] = label;
    } else {
      even_label[v.crossing] = label;
      even_over[v.crossing] = v.over;
    }
  }
  std::vector<int> dt(d.word.size(), 0);
  for (std::size_t c = 0; c < d.word.size(); ++c) {
    if (odd_label[c] == 0 || even_label[c] == 0) {
      throw Error(Errc::invalid_word, "crossing " + std::to_string(c + 1) +
                                          " lacks an odd/even label pair");
    }
    dt[static_cast<std::size_t>((odd_label[c] - 1) / 2)] =
        even_over[c] ? -even_label[c] : even_label[c];
  }
  return dt;
}

std::optional<std::string> check_pd(const PDCode& pd) {
  const std::size_t arcs = 2 * pd.crossings.size();
  std::vector<int> seen(arcs + 1, 0);
  for (std::size_t c = 0; c < pd.crossings.size(); ++c) {
    for (int a : pd.crossings[c]) {
      if (a < 1 || static_cast<std::size_t>(a) > arcs) {
        return "crossing " + std::to_string(c + 1) + " uses arc " +
               std::to_string(a) + " outside 1.." + std::to_string(arcs);
      }
      ++seen[a];
    }
  }
  for (std::size_t a = 1; a <= arcs; ++a) {
    if (seen[a] != 2) {
      return "arc " + std::to_string(a) + " appears " + std::to_string(seen[a]) +
             " times";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_gauss(const GaussCode& g) {
  std::vector<int> over(g.signs.size(), 0);
  std::vector<int> under(g.signs.size(), 0);
  for (const auto& comp : g.components) {
    for (int v : comp) {
      const std::size_t c = static_cast<std::size_t>(std::abs(v));
      if (v == 0 || c > g.signs.size()) {
        return "visit " + std::to_string(v) + " names no crossing";
      }
      ++(v > 0 ? over : under)[c - 1];
    }
  }
  for (std::size_t c = 0; c < g.signs.size(); ++c) {
    if (over[c] != 1 || under[c] != 1) {
      return "crossing " + std::to_string(c + 1) + " is visited " +
             std::to_string(over[c]) + "x over and " + std::to_string(under[c]) +
             "x under";
    }
    if (g.signs[c] != 1 && g.signs[c] != -1) {
      return "crossing " + std::to_string(c + 1) + " has sign " +
             std::to_string(g.signs[c]);
    }
  }
  return std::nullopt;
}

std::string format_pd(const PDCode& pd) {
  std::ostringstream out;
  for (const auto& x : pd.crossings) {
    out << "X(" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ")\n";
  }
  return out.str();
}

std::string format_gauss(const GaussCode& g) {
  std::ostringstream out;
  out << "crossings=" << g.signs.size() << " components=" << g.components.size()
      << "\nsigns";
  for (int s : g.signs) out << ' ' << s;
  out << '\n';
  for (const auto& comp : g.components) {
    for (std::size_t t = 0; t < comp.size(); ++t) out << (t ? " " : "") << comp[t];
    out << '\n';
  }
  return out.str();
}

std::string format_dt(const std::vector<int>& dt) {
  std::ostringstream out;
  for (std::size_t t = 0; t < dt.size(); ++t) out << (t ? "," : "") << dt[t];
  out << '\n';
  return out.str();
}

std::string format_braid(const LinkDiagram& d, int l) {
  std::ostringstream out;
  out << "n=" << d.strand_count << " l=" << l
      << " components=" << d.component_count() << '\n';
  for (std::size_t t = 0; t < d.word.size(); ++t) out << (t ? " " : "") << d.word[t];
  out << '\n';
  return out.str();
}

BraidFile parse_braid(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw Error(Errc::schema, "braid file is empty");
  BraidFile file;
  if (std::sscanf(header.c_str(), "n=%d l=%d components=%d", &file.n, &file.l,
                  &file.components) != 3) {
    throw Error(Errc::schema, "malformed braid header '" + header + "'");
  }
  std::vector<int> word;
  std::string line;
  if (std::getline(in, line)) {
    std::istringstream letters(line);
    int letter = 0;
    while (letters >> letter) word.push_back(letter);
    if (!letters.eof()) throw Error(Errc::schema, "malformed braid word");
  }
  file.diagram = diagram_from_word(file.n, std::move(word));
  if (file.diagram.component_count() != file.components) {
    throw Error(Errc::schema, "braid header claims " + std::to_string(file.components) +
                                  " components, word closes to " +
                                  std::to_string(file.diagram.component_count()));
  }
  return file;
}

}  // namespace agol
