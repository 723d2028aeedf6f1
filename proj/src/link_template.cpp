#include "agol/link_template.hpp"

#include <algorithm>
#include <numeric>

namespace agol {

namespace {

constexpr const char* kTemplateFormat = "agol-links/template";
constexpr int kTemplateVersion = 1;

std::string loop_pointer(std::size_t k, const char* field) {
  return "/loops/" + std::to_string(k) + "/" + field;
}

}  // namespace

std::string Loop::token() const {
  return "L" + std::to_string(i) + "_" + std::to_string(j);
}

int component_count(int n, int shift) {
  if (n < 1) return 0;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int k = start; !seen[k]; k = ((k - shift) % n + n) % n) seen[k] = true;
  }
  return cycles;
}

LinkTemplate build_template(int n, int l, int extra_full_twists) {
  const PantsPath path = build_path(n, l);
  LinkTemplate t;
  t.n = n;
  t.l = l;
  t.monodromy_shift = l;
  t.extra_full_twists = extra_full_twists;
  t.has_augmentation = true;
  t.loops.reserve(path.moves.size());
  for (const auto& move : path.moves) {
    t.loops.push_back(
        Loop{move.out.index(), move.out.width(), move.out.encircled(), move.step});
  }
  if (component_count(n, t.monodromy_shift) != l) {
    throw Error(Errc::invalid_parameters,
                "monodromy closure does not have l components");
  }
  return t;
}

std::map<int, std::vector<Loop>> loop_heights(const LinkTemplate& t) {
  std::map<int, std::vector<Loop>> fibers;
  for (const auto& loop : t.loops) fibers[loop.i].push_back(loop);
  for (auto& [i, loops] : fibers) {
    std::stable_sort(loops.begin(), loops.end(),
                     [](const Loop& a, const Loop& b) { return a.j > b.j; });
    for (std::size_t a = 0; a < loops.size(); ++a) {
      const Curve ca = beta_curve(loops[a].i, loops[a].j, t.n);
      for (std::size_t b = a + 1; b < loops.size(); ++b) {
        const Curve cb = beta_curve(loops[b].i, loops[b].j, t.n);
        if (geometric_intersection(ca, cb) != 0 || ca.same_class(cb)) {
          throw Error(Errc::invalid_decomposition,
                      "fiber " + std::to_string(i) + " holds intersecting loops " +
                          loops[a].token() + " and " + loops[b].token());
        }
      }
    }
  }
  return fibers;
}

std::map<int, int> width_census(const LinkTemplate& t) {
  std::map<int, int> census;
  for (const auto& loop : t.loops) census[loop.j] += 1;
  return census;
}

std::vector<Issue> validate_template(const LinkTemplate& t) {
  std::vector<Issue> issues;
  if (t.n < 4) issues.push_back({"/n", "n must be at least 4"});
  if (t.l < 1) issues.push_back({"/l", "l must be at least 1"});
  if (t.n >= 4 && t.l >= 1 && t.n % t.l != 0) {
    issues.push_back({"/l", "l does not divide n"});
  }
  if (!issues.empty()) return issues;

  if (t.monodromy_shift != t.l) {
    issues.push_back({"/monodromy_shift", "monodromy shift must equal l"});
  }
  if (component_count(t.n, t.monodromy_shift) != t.l) {
    issues.push_back({"/monodromy_shift",
                      "monodromy closure has " +
                          std::to_string(component_count(t.n, t.monodromy_shift)) +
                          " components, expected l"});
  }
  if (!t.has_augmentation) {
    issues.push_back({"/has_augmentation", "augmentation circle is required"});
  }

  const PantsPath path = build_path(t.n, t.l);
  if (t.loops.size() != path.moves.size()) {
    issues.push_back({"/loops", "expected " + std::to_string(path.moves.size()) +
                                    " loops, found " + std::to_string(t.loops.size())});
  }

  const std::size_t common = std::min(t.loops.size(), path.moves.size());
  for (std::size_t k = 0; k < common; ++k) {
    const Loop& loop = t.loops[k];
    const Curve& expected = path.moves[k].out;
    const std::string name = "loop " + std::to_string(k) + " (" + loop.token() + ")";
    if (loop.step != static_cast<int>(k) + 1) {
      issues.push_back({loop_pointer(k, "step"),
                        name + ": step " + std::to_string(loop.step) +
                            ", expected " + std::to_string(k + 1)});
    }
    try {
      (void)beta_curve(loop.i, loop.j, t.n);
    } catch (const Error& e) {
      const char* field = e.code() == Errc::width_out_of_range ? "j" : "i";
      issues.push_back({loop_pointer(k, field), name + ": " + e.what()});
      continue;
    }
    if (loop.i != expected.index()) {
      issues.push_back({loop_pointer(k, "i"),
                        name + ": height " + std::to_string(loop.i) +
                            " does not match the path (expected " +
                            std::to_string(expected.index()) + ")"});
    }
    if (loop.j != expected.width()) {
      issues.push_back({loop_pointer(k, "j"),
                        name + ": width " + std::to_string(loop.j) +
                            " does not match the path (expected " +
                            std::to_string(expected.width()) + ")"});
    }
    if (loop.strands != beta_curve(loop.i, loop.j, t.n).encircled()) {
      issues.push_back({loop_pointer(k, "strands"),
                        name + ": strand interval does not match the curve"});
    }
  }

  if (issues.empty()) {
    for (const auto& [width, count] : width_census(t)) {
      if (count != 2 * t.n - t.l) {
        issues.push_back({"/loops", "width " + std::to_string(width) + " has " +
                                        std::to_string(count) + " loops"});
      }
    }
    try {
      (void)loop_heights(t);
    } catch (const Error& e) {
      issues.push_back({"/loops", e.what()});
    }
  }
  return issues;
}

nlohmann::json to_json(const LinkTemplate& t) {
  nlohmann::json loops = nlohmann::json::array();
  for (const auto& loop : t.loops) {
    loops.push_back({{"i", loop.i},
                     {"j", loop.j},
                     {"strands", loop.strands},
                     {"step", loop.step}});
  }
  return {{"format", kTemplateFormat},
          {"version", kTemplateVersion},
          {"n", t.n},
          {"l", t.l},
          {"monodromy_shift", t.monodromy_shift},
          {"extra_full_twists", t.extra_full_twists},
          {"has_augmentation", t.has_augmentation},
          {"path_length", t.path_length()},
          {"loops", loops}};
}

LinkTemplate template_from_json(const nlohmann::json& doc,
                                std::vector<Issue>& issues) {
  const std::size_t before = issues.size();
  auto require_int = [&](const nlohmann::json& obj, const char* key,
                         const std::string& pointer, int& out) {
    if (!obj.contains(key)) {
      issues.push_back({pointer, "missing field"});
    } else if (!obj.at(key).is_number_integer()) {
      issues.push_back({pointer, "expected an integer"});
    } else {
      out = obj.at(key).get<int>();
    }
  };

  LinkTemplate t;
  if (!doc.is_object()) {
    issues.push_back({"", "template must be a JSON object"});
    return {};
  }
  if (doc.value("format", std::string{}) != kTemplateFormat) {
    issues.push_back({"/format", "expected \"" + std::string(kTemplateFormat) + "\""});
  }
  int version = 0;
  require_int(doc, "version", "/version", version);
  if (doc.contains("version") && version != kTemplateVersion) {
    issues.push_back({"/version", "unsupported version"});
  }
  require_int(doc, "n", "/n", t.n);
  require_int(doc, "l", "/l", t.l);
  require_int(doc, "monodromy_shift", "/monodromy_shift", t.monodromy_shift);
  require_int(doc, "extra_full_twists", "/extra_full_twists", t.extra_full_twists);
  if (!doc.contains("has_augmentation") || !doc["has_augmentation"].is_boolean()) {
    issues.push_back({"/has_augmentation", "expected a boolean"});
  } else {
    t.has_augmentation = doc["has_augmentation"].get<bool>();
  }
  int declared_length = -1;
  require_int(doc, "path_length", "/path_length", declared_length);

  if (!doc.contains("loops") || !doc["loops"].is_array()) {
    issues.push_back({"/loops", "expected an array"});
  } else {
    const auto& loops = doc["loops"];
    for (std::size_t k = 0; k < loops.size(); ++k) {
      const auto& item = loops[k];
      const std::string base = "/loops/" + std::to_string(k);
      if (!item.is_object()) {
        issues.push_back({base, "expected an object"});
        continue;
      }
      Loop loop;
      require_int(item, "i", base + "/i", loop.i);
      require_int(item, "j", base + "/j", loop.j);
      require_int(item, "step", base + "/step", loop.step);
      if (!item.contains("strands") || !item["strands"].is_array()) {
        issues.push_back({base + "/strands", "expected an array"});
      } else {
        for (std::size_t s = 0; s < item["strands"].size(); ++s) {
          const auto& v = item["strands"][s];
          if (!v.is_number_integer()) {
            issues.push_back({base + "/strands/" + std::to_string(s),
                              "expected an integer"});
          } else {
            loop.strands.push_back(v.get<int>());
          }
        }
      }
      t.loops.push_back(std::move(loop));
    }
    if (declared_length >= 0 &&
        declared_length != static_cast<int>(t.loops.size())) {
      issues.push_back({"/path_length", "path_length " + std::to_string(declared_length) +
                                            " disagrees with " +
                                            std::to_string(t.loops.size()) + " loops"});
    }
  }
  if (issues.size() != before) return {};
  return t;
}

}  // namespace agol
