#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mwlat/bounds.hpp"
#include "mwlat/error.hpp"
#include "mwlat/io/fixture.hpp"
#include "mwlat/io/parse.hpp"
#include "mwlat/io/report.hpp"

namespace py = pybind11;
using namespace mwlat;

namespace {

// Results cross the boundary as JSON text; the Python side decodes it.
std::string analyze(const std::string& model, const std::string& field, long rho) {
  const WeierstrassModel m = parse_model(model, parse_field_spec(field));
  return nlohmann::json{{"model", model_json(m)}, {"configuration", fiber_configuration_json(fiber_configuration(m), rho)}}
      .dump();
}

std::string base_change(const std::string& model, long p, const std::string& field) {
  return base_change_json(analyze_base_change(parse_model(model, parse_field_spec(field)), p)).dump();
}

std::string classify() { return configuration_table_json(enumerate_rational_L_stable()).dump(); }

std::string tables() {
  const RationalClassification c = enumerate_rational_L_stable();
  return nlohmann::json{{"table1", configuration_table_json(c)}, {"table2", summary_table_json(summary_table(c))}}
      .dump();
}

std::string h1(const std::string& gmodule) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(gmodule);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return h1_json(h1_cyclic(gmodule_from_json(j))).dump();
}

std::string verify_generators(const std::string& name) {
  const Fixture fx = load_named_fixture(name);
  const auto act = fx.action();
  nlohmann::json out = family_json(verify_generator_family(fx.model, fx.family, act));
  out["trace"] = trace(fx.model, act, fx.family.seed).to_string();
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rational elliptic surfaces under cyclic base change";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);
  py::register_exception<FixtureError>(m, "FixtureError", PyExc_RuntimeError);

  m.def("_analyze", &analyze, py::arg("model"), py::arg("field") = "", py::arg("rho") = 10);
  m.def("_base_change", &base_change, py::arg("model"), py::arg("p"), py::arg("field") = "");
  m.def("_classify", &classify);
  m.def("_tables", &tables);
  m.def("_h1", &h1, py::arg("gmodule"));
  m.def("_verify_generators", &verify_generators, py::arg("fixture"));

  m.def("ramification_points_for_genus_zero", &ramification_points_for_genus_zero, py::arg("p"));
  m.def("semistable_rank_jump_bound", &semistable_rank_jump_bound, py::arg("l"), py::arg("eps"), py::arg("p"));
  m.def("stability_threshold", [](long n) { return stability_threshold(n).first_prime; }, py::arg("rank_bound"));
  m.def("wc_kernel_rank_extremal", &wc_kernel_rank_extremal, py::arg("rank_after"), py::arg("p"));
  m.def("coboundary_solve", &coboundary_solve, py::arg("a"));
  m.def("fixture_directory", [] { return fixture_directory().string(); });
}
