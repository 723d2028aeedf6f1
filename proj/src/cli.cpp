#include "agol/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "agol/diagram.hpp"
#include "agol/export.hpp"

namespace agol::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::set<std::string> kFormats = {"pd", "gauss", "dt", "svg", "braid"};

struct Failure {
  int exit_code;
  std::string code;
  std::string message;
  std::vector<Issue> issues;
};

json failure_json(const Failure& f) {
  json issues = json::array();
  for (const auto& i : f.issues) issues.push_back({{"pointer", i.pointer}, {"message", i.message}});
  return {{"status", "error"},
          {"exit_code", f.exit_code},
          {"code", f.code},
          {"message", f.message},
          {"issues", issues}};
}

Failure usage(std::string message) {
  return Failure{usage_error, "usage", std::move(message), {}};
}

struct RunConfig {
  int n = 0;
  int l = 0;
  std::optional<int> slope;
  std::string slope_file;
  std::string out_dir;
  std::string formats = "pd,gauss,dt,svg,braid";
  bool expand_twists = false;
  std::string sweep;
};

std::string default_out_dir() {
  if (const char* env = std::getenv("AGOL_LINKS_OUT"); env != nullptr && *env != '\0') {
    return env;
  }
  return "agol-links-out";
}

std::set<std::string> parse_formats(const std::string& list) {
  std::set<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (kFormats.count(item) == 0) throw usage("unknown format '" + item + "'");
    out.insert(item);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage("cannot write '" + path.string() + "'");
  out << text;
}

void check_config(const RunConfig& c) {
  try {
    check_construction_parameters(c.n, c.l);
  } catch (const Error& e) {
    throw usage(e.what());
  }
  if (c.slope && *c.slope == 0) throw usage("--slope must be nonzero");
  if (c.slope && !c.slope_file.empty()) {
    throw usage("--slope and --slope-file are mutually exclusive");
  }
}

// {"s_q": int, "default": int, "loops": {"L3_2": int, ...}}; every field is
// optional and missing slopes fall back to the default range.
FillingSystem load_slope_file(const std::string& path, const LinkTemplate& t) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw usage("slope file is not JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw usage("slope file must be a JSON object");
  auto read_slope = [&](const json& v, const std::string& pointer) {
    if (!v.is_number_integer()) throw usage(pointer + " must be an integer");
    const int s = v.get<int>();
    if (s == 0) throw usage(pointer + " must be nonzero");
    return s;
  };
  FillingSystem f = default_slopes(t);
  if (doc.contains("default")) f = uniform_slopes(t, read_slope(doc["default"], "/default"));
  if (doc.contains("s_q")) f.s_q = read_slope(doc["s_q"], "/s_q");
  if (doc.contains("loops")) {
    if (!doc["loops"].is_object()) throw usage("/loops must be an object");
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < t.loops.size(); ++k) index[t.loops[k].token()] = k;
    for (const auto& [token, v] : doc["loops"].items()) {
      const auto it = index.find(token);
      if (it == index.end()) throw usage("/loops/" + token + " names no loop");
      f.s_loops[it->second] = read_slope(v, "/loops/" + token);
    }
  }
  return f;
}

json slopes_json(const FillingSystem& f) {
  const auto [lo, hi] = std::minmax_element(f.s_loops.begin(), f.s_loops.end());
  json j = {{"s_q", f.s_q},
            {"range", {{"lo", f.range.lo}, {"hi", f.range.hi}}},
            {"loop_min", f.s_loops.empty() ? 0 : *lo},
            {"loop_max", f.s_loops.empty() ? 0 : *hi}};
  return j;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  check_config(c);
  const auto formats = parse_formats(c.formats);

  const LinkTemplate t = build_template(c.n, c.l);
  if (auto issues = validate_template(t); !issues.empty()) {
    throw Failure{validation_failure, "invalid_template", "template failed validation", issues};
  }
  FillingSystem f = default_slopes(t);
  if (c.slope) f = uniform_slopes(t, *c.slope);
  if (!c.slope_file.empty()) f = load_slope_file(c.slope_file, t);

  const long long census = crossing_census(t, f);
  if (c.expand_twists && formats.count("svg") && census > kMaxExpandedCrossings) {
    throw usage("--expand-twists needs at most " + std::to_string(kMaxExpandedCrossings) +
                " crossings, this link has " + std::to_string(census));
  }

  const fs::path dir = c.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(c.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw usage("cannot create '" + dir.string() + "': " + ec.message());

  const PantsPath path = build_path(c.n, c.l);
  const LinkDiagram d = fill(t, f);
  const BoundReport bound = verify_bound(t, f);

  std::map<std::string, bool> checks;
  checks["path_length"] = path.length() == path_length(c.n, c.l);
  checks["endpoint_is_monodromy_image"] = endpoint_matches_monodromy(path);
  checks["crossings_match_census"] = d.crossing_total() == census;
  checks["components_equal_l"] = d.component_count() == c.l;
  checks["bound"] = bound.pass;

  std::vector<std::string> files = {"template.json", "path.json", "report.json"};
  write_file(dir / "template.json", to_json(t).dump(2) + "\n");
  write_file(dir / "path.json", to_json(path).dump() + "\n");

  json notes = json::array();
  if (formats.count("braid")) {
    const std::string text = format_braid(d, c.l);
    checks["braid_round_trip"] = parse_braid(text).diagram.word == d.word;
    write_file(dir / "link.braid", text);
    files.push_back("link.braid");
  }
  if (formats.count("pd") || formats.count("gauss")) {
    const GaussCode g = to_gauss(d);
    const PDCode pd = to_pd(d);
    checks["gauss_pairing"] = !check_gauss(g).has_value();
    checks["pd_arc_doubling"] = !check_pd(pd).has_value();
    checks["pd_from_gauss"] = pd_from_gauss(g) == pd;
    if (formats.count("pd")) {
      write_file(dir / "link.pd", format_pd(pd));
      files.push_back("link.pd");
    }
    if (formats.count("gauss")) {
      write_file(dir / "link.gauss", format_gauss(g));
      files.push_back("link.gauss");
    }
  }
  if (formats.count("dt")) {
    if (d.component_count() == 1) {
      write_file(dir / "link.dt", format_dt(to_dt(d)));
      files.push_back("link.dt");
    } else {
      notes.push_back("dt skipped: DT codes describe knots, this link has " +
                      std::to_string(d.component_count()) + " components");
    }
  }
  if (formats.count("svg")) {
    write_file(dir / "link.svg", render_svg(d, &t, SvgOptions{c.expand_twists}));
    files.push_back("link.svg");
  }

  bool pass = true;
  for (const auto& [name, ok] : checks) pass = pass && ok;

  json census_by_width = json::object();
  for (const auto& [w, count] : width_census(t)) census_by_width[std::to_string(w)] = count;

  json report = {{"status", pass ? "pass" : "fail"},
                 {"n", c.n},
                 {"l", c.l},
                 {"N", c.n / c.l},
                 {"path_length", path.length()},
                 {"loop_census", census_by_width},
                 {"slopes", slopes_json(f)},
                 {"crossing_census", census},
                 {"crossing_total", d.crossing_total()},
                 {"bound", to_json(bound)},
                 {"components", d.component_count()},
                 {"bridge_upper_bound", bridge_upper_bound(d)},
                 {"checks", checks},
                 {"notes", notes},
                 {"files", files},
                 {"out_dir", dir.string()}};
  write_file(dir / "report.json", report.dump(2) + "\n");
  out << report.dump(2) << '\n';
  return pass ? ok : validation_failure;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  json doc;
  try {
    doc = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw Failure{validation_failure, "schema", "not JSON: " + std::string(e.what()),
                  {{"", "document is not JSON"}}};
  }
  std::vector<Issue> issues;
  const LinkTemplate t = template_from_json(doc, issues);
  if (issues.empty()) issues = validate_template(t);
  if (!issues.empty()) {
    throw Failure{validation_failure, "invalid_template",
                  std::to_string(issues.size()) + " issue(s) in " + file, issues};
  }
  json report = {{"status", "pass"},
                 {"file", file},
                 {"n", t.n},
                 {"l", t.l},
                 {"path_length", t.path_length()},
                 {"components", component_count(t.n, t.monodromy_shift)}};
  out << report.dump(2) << '\n';
  return ok;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw usage("--sweep expects nmin:nmax");
  try {
    std::size_t used = 0;
    const int lo = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("lo");
    const std::string rest = text.substr(colon + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("hi");
    if (lo < 4 || hi < lo) throw usage("--sweep needs 4 <= nmin <= nmax");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw usage("--sweep expects nmin:nmax, got '" + text + "'");
  }
}

// Rows come from the closed-form census; each (n, l) is independent.
int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const auto [lo, hi] = parse_range(c.sweep);
  if (c.l < 0) throw usage("--l must be positive");
  bool all_pass = true;
  char buf[64];
  out << "n\tl\tm\tcrossings\tbound_4pi_n5\tmargin\tcomponents\n";
  for (int n = lo; n <= hi; ++n) {
    for (int l = 1; l <= n; ++l) {
      if (n % l != 0 || (c.l > 0 && l != c.l)) continue;
      const LinkTemplate t = build_template(n, l);
      const BoundReport r = verify_bound(t, default_slopes(t));
      all_pass = all_pass && r.pass;
      out << n << '\t' << l << '\t' << path_length(n, l) << '\t' << r.census << '\t';
      std::snprintf(buf, sizeof buf, "%.3f\t%.3f", r.bound, r.margin);
      out << buf << '\t' << component_count(n, t.monodromy_shift) << '\n';
    }
  }
  return all_pass ? ok : validation_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build, check and export the K_N link family", "agol-links"};
  app.require_subcommand(1);
  RunConfig c;
  std::string template_file;

  auto* gen = app.add_subcommand("generate", "build the link and write its artifacts");
  gen->add_option("--n", c.n, "punctures / strands")->required();
  gen->add_option("--l", c.l, "rotation shift, must divide n")->required();
  gen->add_option("--slope", c.slope, "one filling slope 1/s for every loop and B_q");
  gen->add_option("--slope-file", c.slope_file, "JSON slopes: s_q, default, loops{token: s}");
  gen->add_option("--out", c.out_dir, "output directory (default $AGOL_LINKS_OUT)");
  gen->add_option("--formats", c.formats, "comma list of pd,gauss,dt,svg,braid");
  gen->add_flag("--expand-twists", c.expand_twists, "draw every crossing (<= 500)");

  auto* val = app.add_subcommand("validate", "re-check a persisted template");
  val->add_option("template", template_file, "template JSON")->required();

  auto* sweep = app.add_subcommand("sweep", "census and bound table over a range of n");
  sweep->add_option("--sweep", c.sweep, "nmin:nmax")->required();
  sweep->add_option("--l", c.l, "restrict to one l");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << failure_json(usage(e.what())).dump() << '\n';
    return usage_error;
  }

  try {
    if (gen->parsed()) return cmd_generate(c, out);
    if (val->parsed()) return cmd_validate(template_file, out);
    return cmd_sweep(c, out);
  } catch (const Failure& f) {
    err << failure_json(f).dump() << '\n';
    return f.exit_code;
  } catch (const Error& e) {
    err << failure_json(Failure{validation_failure, errc_name(e.code()), e.what(), {}}).dump()
        << '\n';
    return validation_failure;
  }
}

}  // namespace agol::cli
