#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tailcut/combinatorics.hpp"
#include "tailcut/errors.hpp"
#include "tailcut/families.hpp"
#include "tailcut/gamma_solver.hpp"
#include "tailcut/oracle.hpp"
#include "tailcut/resummation.hpp"
#include "tailcut/scalar.hpp"

namespace py = pybind11;
using namespace tailcut;

namespace {

Kind kind_for(int digits) { return digits == 0 ? Kind::exact() : Kind::real(digits); }

Method method_from(const std::string& name, std::optional<int> L, std::optional<int> M, int m) {
  if (name == "power") return PowerMethod{};
  if (name == "factorial") return FactorialMethod{};
  if (name == "pade") return PadeMethod{L.value_or(m / 2), M.value_or(m / 2)};
  throw DomainError("unknown method '" + name + "' (power, factorial, pade)");
}

OracleConfig oracle_config(int digits) {
  OracleConfig cfg;
  cfg.digits = digits;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Remainder approximants for truncated series (zeta, 2F1, pFq, E1)";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<KindMismatch>(m, "KindMismatch", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<DegenerateParameter>(m, "DegenerateParameter", error);
  py::register_exception<DegeneratePade>(m, "DegeneratePade", error);
  py::register_exception<PoleError>(m, "PoleError", error);
  py::register_exception<OracleFailure>(m, "OracleFailure", error);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error);

  py::class_<Kind>(m, "Kind")
      .def_static("exact", &Kind::exact)
      .def_static("real", &Kind::real, py::arg("digits") = kDefaultDigits)
      .def_property_readonly("is_exact", &Kind::is_exact)
      .def_property_readonly("digits", &Kind::digits)
      .def(py::self == py::self)
      .def("__repr__", [](const Kind& k) {
        return k.is_exact() ? std::string("Kind.exact()") : "Kind.real(" + std::to_string(k.digits()) + ")";
      });

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const std::string& text, int digits) { return Scalar::parse(text, kind_for(digits)); }),
           py::arg("text"), py::arg("digits") = 0,
           "Parse '7', '-17/20' or '-0.85'; digits=0 keeps the value exact.")
      .def(py::init([](const py::int_& value, int digits) {
             return Scalar::parse(py::str(value).cast<std::string>(), kind_for(digits));
           }),
           py::arg("value"), py::arg("digits") = 0)
      .def_property_readonly("kind", &Scalar::kind)
      .def_property_readonly("is_exact", &Scalar::is_exact)
      .def("to", &Scalar::to, py::arg("kind"))
      .def("str", &Scalar::str, py::arg("digits") = -1)
      .def("as_fraction",
           [](const Scalar& x) {
             if (!x.is_exact()) throw KindMismatch("as_fraction needs an exact Scalar");
             const mpq_class& q = x.rational();
             return py::module_::import("fractions")
                 .attr("Fraction")(py::int_(py::str(q.get_num().get_str())),
                                   py::int_(py::str(q.get_den().get_str())));
           })
      .def("__float__", &Scalar::to_double)
      .def("__str__", [](const Scalar& x) { return x.str(); })
      .def("__repr__", [](const Scalar& x) { return "Scalar('" + x.str() + "')"; })
      .def(-py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self + long())
      .def(py::self - long())
      .def(py::self * long())
      .def(py::self / long())
      .def(long() + py::self)
      .def(long() - py::self)
      .def(long() * py::self)
      .def(long() / py::self)
      .def(py::self == py::self)
      .def("__lt__", [](const Scalar& a, const Scalar& b) { return a < b; })
      .def("__abs__", [](const Scalar& x) { return abs(x); });
  py::implicitly_convertible<py::str, Scalar>();
  py::implicitly_convertible<py::int_, Scalar>();

  py::class_<FamilySpec>(m, "Family")
      .def_property_readonly("name", &FamilySpec::name)
      .def_property_readonly("alpha", &FamilySpec::alpha)
      .def_property_readonly("kind", &FamilySpec::kind)
      .def("parameters", &FamilySpec::parameters)
      .def("__str__", &FamilySpec::describe)
      .def("__repr__", [](const FamilySpec& f) { return "<Family " + f.name() + " " + f.describe() + ">"; });

  m.def("make_zeta", &make_zeta, py::arg("s"));
  m.def("make_2f1", &make_2f1, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("make_pfq", &make_pfq, py::arg("alphas"), py::arg("betas"), py::arg("z"));
  m.def("make_e1", &make_e1, py::arg("z"));

  m.def("term", &term, py::arg("family"), py::arg("n"), py::arg("kind") = std::nullopt);
  m.def("partial_sum", &partial_sum, py::arg("family"), py::arg("n"), py::arg("kind") = std::nullopt);
  m.def("scale_at", &scale_at, py::arg("family"), py::arg("n"), py::arg("kind") = std::nullopt);

  py::class_<GammaVector>(m, "GammaVector")
      .def_readonly("family", &GammaVector::family)
      .def_readonly("m", &GammaVector::m)
      .def_readonly("coeffs", &GammaVector::coeffs)
      .def_property_readonly("kind", &GammaVector::kind)
      .def("__len__", [](const GammaVector& g) { return g.coeffs.size(); })
      .def("__getitem__", [](const GammaVector& g, std::size_t i) {
        if (i >= g.coeffs.size()) throw py::index_error();
        return g.coeffs[i];
      });

  py::class_<FactorialGamma>(m, "FactorialGamma")
      .def_readonly("coeffs", &FactorialGamma::coeffs)
      .def_readonly("source", &FactorialGamma::source);

  py::class_<PadeApproximant>(m, "PadeApproximant")
      .def_property_readonly("L", &PadeApproximant::L)
      .def_property_readonly("M", &PadeApproximant::M)
      .def_property_readonly("numerator", &PadeApproximant::numerator)
      .def_property_readonly("denominator", &PadeApproximant::denominator)
      .def("__call__", &PadeApproximant::evaluate, py::arg("eps"));

  m.def("solve_gamma", &solve_gamma, py::arg("family"), py::arg("m"));
  m.def("residual_defect", &residual_defect, py::arg("family"), py::arg("gamma"), py::arg("n"),
        py::arg("kind") = std::nullopt);
  m.def("gamma_to_factorial", &gamma_to_factorial, py::arg("gamma"));

  m.def("remainder_power", &remainder_power, py::arg("family"), py::arg("gamma"), py::arg("n"),
        py::arg("kind") = std::nullopt);
  m.def("remainder_factorial", &remainder_factorial, py::arg("family"), py::arg("factorial_gamma"), py::arg("n"),
        py::arg("kind") = std::nullopt);
  m.def("remainder_pade", &remainder_pade, py::arg("family"), py::arg("gamma"), py::arg("n"), py::arg("L"),
        py::arg("M"), py::arg("kind") = std::nullopt);
  m.def(
      "pade_from_series",
      [](const std::vector<Scalar>& coeffs, int L, int M) { return pade_from_series(coeffs, L, M); },
      py::arg("coeffs"), py::arg("L"), py::arg("M"));

  m.def(
      "remainder",
      [](const FamilySpec& f, const GammaVector& g, long n, const std::string& method, std::optional<int> L,
         std::optional<int> M, std::optional<Kind> kind) {
        return remainder_by(f, g, n, method_from(method, L, M, g.m), kind);
      },
      py::arg("family"), py::arg("gamma"), py::arg("n"), py::arg("method") = "power", py::arg("L") = std::nullopt,
      py::arg("M") = std::nullopt, py::arg("kind") = std::nullopt);
  m.def(
      "corrected_sum",
      [](const FamilySpec& f, long n, int order, const std::string& method, std::optional<int> L,
         std::optional<int> M, std::optional<Kind> kind) {
        return corrected_sum(f, n, order, method_from(method, L, M, order), kind);
      },
      py::arg("family"), py::arg("n"), py::arg("m"), py::arg("method") = "power", py::arg("L") = std::nullopt,
      py::arg("M") = std::nullopt, py::arg("kind") = std::nullopt);

  m.def("bernoulli", &bernoulli, py::arg("k"));
  m.def(
      "stirling_first", [](int n, int k) { return py::int_(py::str(stirling_first(n, k).get_str())); },
      py::arg("n"), py::arg("k"));
  m.def("pochhammer", &pochhammer, py::arg("x"), py::arg("k"));

  m.def(
      "zeta_reference", [](const Scalar& s, int digits) { return zeta_reference(s, oracle_config(digits)); },
      py::arg("s"), py::arg("digits") = 80);
  m.def(
      "e1_reference", [](const Scalar& z, int digits) { return e1_reference(z, oracle_config(digits)); },
      py::arg("z"), py::arg("digits") = 80, "z e^z E1(z) to the requested digits.");
  m.def(
      "remainder_exact",
      [](const FamilySpec& f, long n, int digits) { return remainder_exact(f, n, oracle_config(digits)); },
      py::arg("family"), py::arg("n"), py::arg("digits") = 80);
  m.def("euler_maclaurin_zeta_tail", &euler_maclaurin_zeta_tail, py::arg("s"), py::arg("n"), py::arg("m"),
        py::arg("kind") = std::nullopt);
}
