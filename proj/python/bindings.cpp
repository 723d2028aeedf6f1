#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "agol/diagram.hpp"
#include "agol/export.hpp"
#include "agol/geom_oracle.hpp"

namespace py = pybind11;
using namespace agol;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string template_json(int n, int l, int extra_full_twists) {
  return to_json(build_template(n, l, extra_full_twists)).dump();
}

std::vector<std::pair<std::string, std::string>> validate_json(const std::string& text) {
  std::vector<Issue> issues;
  const auto t = template_from_json(nlohmann::json::parse(text), issues);
  if (issues.empty()) issues = validate_template(t);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& i : issues) out.emplace_back(i.pointer, i.message);
  return out;
}

FillingSystem slopes_for(const LinkTemplate& t, int slope) {
  return slope == 0 ? default_slopes(t) : uniform_slopes(t, slope);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Construction and export of the K_N closed-braid link family";

  static py::exception<Error> agol_error(m, "AgolError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(agol_error.ptr(),
                      (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Curve>(m, "Curve")
      .def_property_readonly("index", &Curve::index)
      .def_property_readonly("width", &Curve::width)
      .def_property_readonly("punctures", &Curve::punctures)
      .def("encircled", &Curve::encircled)
      .def("token", &Curve::token)
      .def("__repr__", [](const Curve& c) { return "<Curve " + c.token() + ">"; });

  m.def("beta_curve", &beta_curve, py::arg("i"), py::arg("j"), py::arg("n"));
  m.def("geometric_intersection", &geometric_intersection);
  m.def("oracle_intersection", &oracle::oracle_intersection,
        "Crossings of explicit polyline realizations");
  m.def("path_length", &path_length);
  m.def("build_path_json",
        [](int n, int l) { return to_json(build_path(n, l)).dump(); });
  m.def("template_json", &template_json, py::arg("n"), py::arg("l"),
        py::arg("extra_full_twists") = 2);
  m.def("validate_template_json", &validate_json,
        "(pointer, message) pairs; empty when the template is valid");
  m.def("component_count", &component_count);
  m.def("slope_range", [](int n, int l) {
    const auto r = slope_range(n, l);
    return std::make_pair(r.lo, r.hi);
  });

  m.def(
      "crossing_census",
      [](int n, int l, int slope) {
        const auto t = build_template(n, l);
        return crossing_census(t, slopes_for(t, slope));
      },
      py::arg("n"), py::arg("l"), py::arg("slope") = 0);
  m.def(
      "bound_report_json",
      [](int n, int l, int slope) {
        const auto t = build_template(n, l);
        return to_json(verify_bound(t, slopes_for(t, slope))).dump();
      },
      py::arg("n"), py::arg("l"), py::arg("slope") = 0);
  m.def(
      "braid_word",
      [](int n, int l, int slope) {
        const auto t = build_template(n, l);
        return fill(t, slopes_for(t, slope)).word;
      },
      py::arg("n"), py::arg("l"), py::arg("slope") = 0,
      "Filled braid word; slope 0 picks the default slopes");

  m.def("closure_components",
        [](int n, std::vector<int> word) {
          return diagram_from_word(n, std::move(word)).component_count();
        });
  m.def("pd_code", [](int n, std::vector<int> word) {
    return to_pd(diagram_from_word(n, std::move(word))).crossings;
  });
  m.def("gauss_code", [](int n, std::vector<int> word) {
    const auto g = to_gauss(diagram_from_word(n, std::move(word)));
    return std::make_pair(g.signs, g.components);
  });
  m.def("dt_code", [](int n, std::vector<int> word) {
    return to_dt(diagram_from_word(n, std::move(word)));
  });
  m.def(
      "render_svg",
      [](int n, int l, int slope, bool expand_twists) {
        const auto t = build_template(n, l);
        return render_svg(fill(t, slopes_for(t, slope)), &t, SvgOptions{expand_twists});
      },
      py::arg("n"), py::arg("l"), py::arg("slope") = 0, py::arg("expand_twists") = false);
}
