// Thin string-in/string-out layer; python/egfasym/__init__.py converts to
// int / Fraction / float.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egfasym/asymptotics.hpp"
#include "egfasym/error.hpp"
#include "egfasym/numerics.hpp"
#include "egfasym/params.hpp"
#include "egfasym/richardson.hpp"
#include "egfasym/saddle.hpp"
#include "egfasym/series.hpp"

namespace py = pybind11;
using namespace egfasym;

namespace {

EgfParams make_params(const std::string& m, const std::string& b, const std::string& d, const std::string& r,
                      const std::string& s) {
  return validate(parse_rational(m), parse_rational(b), parse_rational(d), parse_rational(r), parse_rational(s));
}

std::vector<std::string> coefficients(const EgfParams& p, std::size_t max_index, bool exact, int digits) {
  CoeffTable t = [&] {
    py::gil_scoped_release release;
    return egf_coefficients(p, max_index, exact ? CoeffMode::exact() : CoeffMode::floating(digits));
  }();
  std::vector<std::string> out;
  out.reserve(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) out.push_back(t.value_string(n));
  return out;
}

py::dict estimate_dict(const EgfParams& p, std::uint64_t n, const std::string& formula, int digits) {
  const PrecisionContext ctx(digits);
  const AsympEstimate e = estimate(p, n, parse_formula(formula), ctx);
  py::dict out;
  out["n"] = e.n;
  out["formula"] = std::string(to_string(e.formula));
  out["log"] = e.log_value.to_string(digits);
  out["log10"] = e.log10_value().to_double();
  out["value"] = e.rendered();
  out["z"] = e.z.to_string(digits);
  return out;
}

std::vector<std::string> ratios(const EgfParams& p, std::size_t terms, const std::string& formula, int digits,
                                unsigned jobs) {
  const PrecisionContext ctx(digits);
  py::gil_scoped_release release;
  const CoeffTable t = egf_coefficients(p, terms, CoeffMode::floating(digits));
  const RatioSeries rs = ratio_series(t, parse_formula(formula), ctx, "python", jobs);
  std::vector<std::string> out;
  for (const auto& x : rs.ratios) out.push_back(x.to_string(digits));
  return out;
}

std::string extrapolate(const std::vector<std::string>& values, unsigned order, int digits) {
  const PrecisionContext ctx(digits);
  std::vector<Real> f;
  f.reserve(values.size());
  for (const auto& v : values) f.push_back(Real::parse(v, ctx.working_bits()));
  return richardson_extrapolate(f, order, ctx).to_string(digits);
}

}  // namespace

PYBIND11_MODULE(_egfasym, mod) {
  mod.doc() = "Coefficients and asymptotics of exp(m e^{bx} + r e^{dx} + s)";

  static py::exception<Error> error_type(mod, "EgfError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::class_<EgfParams>(mod, "Params")
      .def(py::init(&make_params), py::arg("m"), py::arg("b"), py::arg("d"), py::arg("r"), py::arg("s"))
      .def_property_readonly("m", [](const EgfParams& p) { return p.m().get_str(); })
      .def_property_readonly("b", [](const EgfParams& p) { return p.b().get_str(); })
      .def_property_readonly("d", [](const EgfParams& p) { return p.d().get_str(); })
      .def_property_readonly("r", [](const EgfParams& p) { return p.r().get_str(); })
      .def_property_readonly("s", [](const EgfParams& p) { return p.s().get_str(); })
      .def_property_readonly("regime", [](const EgfParams& p) { return std::string(to_string(classify_regime(p))); })
      .def_property_readonly("prefactor_exponent", [](const EgfParams& p) { return p.prefactor_exponent().get_str(); })
      .def("correction_constant", [](const EgfParams& p) { return correction_constant(p).get_str(); })
      .def("__eq__", [](const EgfParams& a, const EgfParams& b) { return a == b; })
      .def("__repr__", [](const EgfParams& p) { return "Params(" + p.describe() + ")"; });

  mod.def("known_families", [] {
    py::dict out;
    for (const auto& f : known_families()) out[py::str(std::string(f.anum))] = f.params;
    return out;
  });
  mod.def("coefficients", &coefficients, py::arg("params"), py::arg("max_index"), py::arg("exact") = true,
          py::arg("digits") = 64);
  mod.def("estimate", &estimate_dict, py::arg("params"), py::arg("n"), py::arg("formula") = "full",
          py::arg("digits") = 64);
  mod.def("ratios", &ratios, py::arg("params"), py::arg("terms"), py::arg("formula") = "full",
          py::arg("digits") = 64, py::arg("jobs") = 1);
  mod.def("richardson", &extrapolate, py::arg("values"), py::arg("order"), py::arg("digits") = 64);
  mod.def("richardson_weights", [](unsigned order) {
    std::vector<std::string> out;
    for (const auto& w : richardson_weights(order)) out.push_back(w.get_str());
    return out;
  });
  mod.def(
      "lambert_w0",
      [](const std::string& x, int digits) {
        const PrecisionContext ctx(digits);
        return lambert_w0(Real::parse(x, ctx.working_bits()), ctx).to_string(digits);
      },
      py::arg("x"), py::arg("digits") = 64);
  mod.def(
      "saddle",
      [](const EgfParams& p, std::uint64_t n, int digits) {
        const PrecisionContext ctx(digits);
        return saddle_solve(p, n, ctx).z.to_string(digits);
      },
      py::arg("params"), py::arg("n"), py::arg("digits") = 64);
}
