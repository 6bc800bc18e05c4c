#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "betacert/certify.hpp"
#include "betacert/errors.hpp"
#include "betacert/expansions.hpp"
#include "betacert/realnum.hpp"
#include "betacert/report.hpp"
#include "betacert/thickness.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace betacert;

namespace {

std::pair<std::string, std::string> bounds(const Enclosure& e, int digits) {
  return {e.lo_string(digits), e.hi_string(digits)};
}

std::optional<Base> base_of(const std::optional<std::string>& q) {
  if (!q) return std::nullopt;
  return parse_base(*q);
}

TheoremOptions options(bool run_count) {
  TheoremOptions o;
  o.run_count = run_count;
  return o;
}

}  // namespace

PYBIND11_MODULE(_betacert, m) {
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<PreconditionViolation>(m, "PreconditionViolation", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  m.def("set_precision", [](int bits) { set_working_precision(bits); });
  m.def("precision", &working_precision);

  m.def(
      "bonacci_root", [](int k, int digits) { return bounds(bonacci_root(k).value, digits); }, py::arg("k"),
      py::arg("digits") = 20);
  m.def("k_threshold", &k_threshold);
  m.def(
      "dim_lower_bound",
      [](int m_, int k, int digits) { return bounds(dim_lower_bound(m_, bonacci_root(k).value, k), digits); },
      py::arg("m"), py::arg("k"), py::arg("digits") = 20);
  m.def(
      "theorem_a_radius", [](int m_, int k, int digits) { return bounds(theorem_a_radius(m_, k), digits); },
      py::arg("m"), py::arg("k"), py::arg("digits") = 20);
  m.def(
      "theorem_b_radius", [](int k, int digits) { return bounds(theorem_b_radius(k), digits); }, py::arg("k"),
      py::arg("digits") = 20);

  m.def("tables_json", [] { return to_json(reproduce_tables()).dump(); });
  m.def(
      "certify_a_json",
      [](int m_, int k, std::optional<std::string> q) {
        py::gil_scoped_release release;
        return to_json(theorem_a_certify(m_, k, base_of(q))).dump();
      },
      py::arg("m"), py::arg("k"), py::arg("q") = std::nullopt);
  m.def(
      "certify_b_json",
      [](int k, std::optional<std::string> q, bool run_count) {
        py::gil_scoped_release release;
        return to_json(theorem_b_certify(k, base_of(q), options(run_count))).dump();
      },
      py::arg("k"), py::arg("q") = std::nullopt, py::arg("run_count") = true);
  m.def(
      "thickness_json",
      [](const std::string& q, int s, int depth) {
        const Enclosure qe = parse_base(q).current();
        return to_json(sk_thickness(qe, s, depth)).dump();
      },
      py::arg("q"), py::arg("s"), py::arg("depth"));
  m.def(
      "count_json",
      [](const std::string& q, const std::string& x, int depth) {
        const Enclosure qe = parse_base(q).current();
        return to_json(count_prefixes(qe, cli::parse_point(x, qe), depth)).dump();
      },
      py::arg("q"), py::arg("x"), py::arg("depth"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
