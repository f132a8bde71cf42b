#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resdiff/calculus.hpp"
#include "resdiff/errors.hpp"
#include "resdiff/polynomial.hpp"
#include "resdiff/recovery.hpp"
#include "resdiff/resultant.hpp"

namespace py = pybind11;
using namespace resdiff;

// Rationals cross the boundary as "p" / "p/q" strings; the Python package
// converts them to fractions.Fraction.
namespace {

using Coeffs = std::vector<std::string>;

Polynomial to_poly(const Coeffs& c) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& s : c) v.push_back(Rational::parse(s));
  return Polynomial(std::move(v));
}

Coeffs from_poly(const Polynomial& p) {
  Coeffs out;
  for (const auto& r : p.coefficients()) out.push_back(r.to_string());
  return out;
}

Side to_side(const std::string& s) {
  if (s == "a" || s == "A") return Side::A;
  if (s == "b" || s == "B") return Side::B;
  throw BadRequest("side must be 'a' or 'b'");
}

py::object opt_str(const std::optional<Rational>& r) {
  return r ? py::object(py::str(r->to_string())) : py::object(py::none());
}

py::dict certificate(const RootCertificate& c) {
  py::list conditions;
  for (const auto& cond : c.conditions) {
    conditions.append(py::make_tuple(cond.name, cond.value.to_string(), cond.passed));
  }
  py::dict d;
  d["route"] = std::string(to_string(c.route));
  d["root"] = opt_str(c.root);
  d["multiplicity_in_f"] = c.multiplicity_in_f;
  d["multiplicity_in_g"] = c.multiplicity_in_g ? py::object(py::int_(*c.multiplicity_in_g)) : py::object(py::none());
  d["conditions"] = conditions;
  d["verified"] = c.verified;
  d["certified"] = c.certified();
  d["failure"] = c.failure.empty() ? py::object(py::none()) : py::object(py::str(c.failure));
  return d;
}

py::dict report(const MultiplicityReport& r) {
  py::list chain;
  for (const auto& [k, v] : r.chain) chain.append(py::make_tuple(k, v.to_string()));
  py::dict d;
  d["zero_root_multiplicity"] = r.zero_root_multiplicity;
  d["reduced"] = from_poly(r.reduced);
  d["chain"] = chain;
  d["s_max"] = r.s_max;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact resultants, resultant derivatives and multiple-root recovery";

  py::register_exception<Error>(m, "ResdiffError", PyExc_ValueError);

  m.def("resultant", [](const Coeffs& f, const Coeffs& g) { return resultant(to_poly(f), to_poly(g)).to_string(); });
  m.def("discriminant", [](const Coeffs& f) { return discriminant(to_poly(f)).to_string(); });
  m.def(
      "partial",
      [](const Coeffs& f, const Coeffs& g, const std::string& side, const std::vector<int>& indices,
         const std::string& algorithm) {
        const DerivativeRequest req{to_side(side), indices};
        if (algorithm == "rowsum") return partial_rowsum(to_poly(f), to_poly(g), req).to_string();
        if (algorithm != "jet") throw BadRequest("algorithm must be 'jet' or 'rowsum'");
        return partial(to_poly(f), to_poly(g), req).to_string();
      },
      py::arg("f"), py::arg("g"), py::arg("side"), py::arg("indices"), py::arg("algorithm") = "jet");
  m.def("gradient", [](const Coeffs& f, const Coeffs& g, const std::string& side) {
    Coeffs out;
    for (const auto& r : gradient(to_poly(f), to_poly(g), to_side(side))) out.push_back(r.to_string());
    return out;
  });
  m.def("poly_from_roots", [](const std::vector<std::pair<std::string, int>>& roots, const std::string& leading) {
    RootSpec spec{Rational::parse(leading), {}};
    for (const auto& [r, mult] : roots) spec.roots.push_back({Rational::parse(r), mult});
    return from_poly(poly_from_roots(spec));
  });
  m.def("derivative", [](const Coeffs& f, int k) { return from_poly(derivative(to_poly(f), k)); });
  m.def("shift", [](const Coeffs& f, const std::string& c) { return from_poly(shift(to_poly(f), Rational::parse(c))); });
  m.def("detect_multiplicity", [](const Coeffs& f) { return report(detect_multiplicity(to_poly(f))); });
  m.def("simple_common_root", [](const Coeffs& f, const Coeffs& g) {
    return certificate(simple_common_root(to_poly(f), to_poly(g)));
  });
  m.def("recover_first_order", [](const Coeffs& f, int s) { return certificate(recover_first_order(to_poly(f), s)); });
  m.def("recover_higher_order", [](const Coeffs& f, int s) { return certificate(recover_higher_order(to_poly(f), s)); });
  m.def("common_multiple_root", [](const Coeffs& f, const Coeffs& g, int s, int p) {
    return certificate(common_multiple_root(to_poly(f), to_poly(g), s, p));
  });
  m.def("analyze", [](const Coeffs& f) {
    const Analysis a = analyze(to_poly(f));
    py::dict d;
    d["report"] = report(a.report);
    d["multiplicity"] = a.multiplicity;
    d["root"] = opt_str(a.root);
    d["routes_agree"] = a.routes_agree;
    d["first_order"] = a.first_order ? py::object(certificate(*a.first_order)) : py::object(py::none());
    d["higher_order"] = a.higher_order ? py::object(certificate(*a.higher_order)) : py::object(py::none());
    return d;
  });

#ifdef RESDIFF_VERSION
  m.attr("__version__") = RESDIFF_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
