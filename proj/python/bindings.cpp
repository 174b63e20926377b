#include "qlfun/padic_context.hpp"
#include "qlfun/qeuler.hpp"
#include "qlfun/verify.hpp"
#include "qlfun/zeta_arch.hpp"
#include "qlfun/zeta_padic.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qlfun;

namespace {

py::object to_py_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

RationalContext make_context(const std::string& q) {
    Rational qv = Rational::parse(q);
    return qv == Rational(1) ? RationalContext::classical_limit() : RationalContext(qv);
}

PadicQContext make_padic_context(long p, long prec, const std::string& q) {
    Rational qv = Rational::parse(q);
    return qv == Rational(1) ? PadicQContext::classical_limit(p, prec)
                             : PadicQContext(p, prec, qv);
}

DirichletCharacter<PadicNumber> make_padic_character(const std::string& spec_text, long p, long prec) {
    CharacterSpec spec = CharacterSpec::parse(spec_text);
    if (spec.kind == CharacterSpec::Kind::Teichmuller) {
        if (spec.f != p) throw DomainError("teich character prime must equal p");
        return teichmuller_power(spec.t, p, prec);
    }
    if (spec.kind == CharacterSpec::Kind::Quadratic)
        return to_padic(quadratic_character(spec.f), p, prec);
    return to_padic(trivial_character(spec.f), p, prec);
}

SuiteParams params_from_kwargs(const py::kwargs& kwargs) {
    SuiteParams sp;
    for (auto item : kwargs) {
        std::string key = py::cast<std::string>(item.first);
        if (key == "p") sp.p = py::cast<long>(item.second);
        else if (key == "q") sp.q = Rational::parse(py::cast<std::string>(item.second));
        else if (key == "prec") sp.prec = py::cast<long>(item.second);
        else if (key == "trials") sp.trials = py::cast<long>(item.second);
        else if (key == "nmax") sp.nmax = py::cast<long>(item.second);
        else if (key == "mmax") sp.mmax = py::cast<long>(item.second);
        else if (key == "kmax") sp.kmax = py::cast<long>(item.second);
        else if (key == "rmax") sp.rmax = py::cast<long>(item.second);
        else if (key == "r") sp.r = py::cast<long>(item.second);
        else if (key == "k") sp.k = py::cast<long>(item.second);
        else if (key == "j") sp.j = py::cast<long>(item.second);
        else if (key == "eps") sp.eps = py::cast<double>(item.second);
        else if (key == "seed") sp.seed = py::cast<unsigned long>(item.second);
        else throw DomainError("run_suite: unknown parameter '" + key + "'");
    }
    return sp;
}

}  // namespace

PYBIND11_MODULE(_qlfun, m) {
    m.doc() = "q-Euler numbers, q-zeta/l-functions and p-adic q-l-functions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const std::string& text) { return Rational::parse(text); }))
        .def(py::init<long>())
        .def_property_readonly("numerator", [](const Rational& r) { return to_py_int(r.numerator()); })
        .def_property_readonly("denominator",
                               [](const Rational& r) { return to_py_int(r.denominator()); })
        .def("__float__", &Rational::to_double)
        .def("__str__", &Rational::to_string)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.to_string() + "')"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("pow", &Rational::pow)
        .def("valuation", &Rational::valuation);

    py::class_<PadicNumber>(m, "PadicNumber")
        .def_property_readonly("p", &PadicNumber::prime)
        .def_property_readonly("valuation", &PadicNumber::valuation)
        .def_property_readonly("precision", &PadicNumber::precision)
        .def_property_readonly("unit",
                               [](const PadicNumber& x) {
                                   return x.is_zero() ? py::object(py::int_(0)) : to_py_int(x.unit());
                               })
        .def("residue", [](const PadicNumber& x, long k) { return to_py_int(x.residue(k)); })
        .def("is_zero", &PadicNumber::is_zero)
        .def("__str__", &PadicNumber::to_string)
        .def("__repr__", [](const PadicNumber& x) { return "PadicNumber(" + x.to_string() + ")"; })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def("pow", &PadicNumber::pow)
        .def_static("agreement_exponent", &PadicNumber::agreement_exponent);

    m.def("binomial", [](long n, long k) { return to_py_int(binomial(n, k)); },
          "standard binomial coefficient");
    m.def("generalized_binomial",
          [](const std::string& s, long k) { return generalized_binomial(Rational::parse(s), k); },
          "falling-factorial binomial for rational s");
    m.def("classical_euler_number", &classical_euler_number);
    m.def("teichmuller",
          [](long a, long p, long prec) { return teichmuller(Int(a), p, prec); },
          py::arg("a"), py::arg("p"), py::arg("prec"));
    m.def("padic_power", &padic_power, py::arg("base"), py::arg("s"));

    m.def("q_int",
          [](long x, const std::string& q) { return q_int(x, make_context(q)); },
          py::arg("x"), py::arg("q"));
    m.def("q_euler_number",
          [](long m_, const std::string& q) { return q_euler_number(m_, make_context(q)); },
          py::arg("m"), py::arg("q"));
    m.def("q_euler_polynomial",
          [](long n, long a, long F, const std::string& q) {
              return q_euler_polynomial(n, Fraction{a, F}, make_context(q));
          },
          py::arg("n"), py::arg("a"), py::arg("F"), py::arg("q"),
          "E_{n, q^F}(a/F); F = 1 gives the plain polynomial");
    m.def("alt_power_sum",
          [](long n, long m_, const std::string& q) { return alt_power_sum(n, m_, make_context(q)); });
    m.def("alt_power_sum_closed", [](long n, long m_, const std::string& q) {
        return alt_power_sum_closed(n, m_, make_context(q));
    });

    m.def("zeta_E",
          [](std::complex<double> s, long a, long F, std::complex<double> q, double eps) {
              ComplexContext ctx(q);
              SeriesResult r = zeta_E(s, Fraction{a, F}, ctx, Truncation{eps, 2'000'000});
              return py::make_tuple(r.value, r.tail_bound, r.terms);
          },
          py::arg("s"), py::arg("a"), py::arg("F"), py::arg("q"), py::arg("eps") = 1e-10,
          "returns (value, certified_error, terms)");
    m.def("dirichlet_l",
          [](std::complex<double> s, const std::string& chi, std::complex<double> q, double eps) {
              CharacterSpec spec = CharacterSpec::parse(chi);
              DirichletCharacter<Rational> base = spec.kind == CharacterSpec::Kind::Quadratic
                                                      ? quadratic_character(spec.f)
                                                      : trivial_character(spec.f);
              ComplexContext ctx(q);
              SeriesResult r = dirichlet_l(s, to_complex(base), ctx, Truncation{eps, 2'000'000});
              return py::make_tuple(r.value, r.tail_bound, r.terms);
          },
          py::arg("s"), py::arg("chi"), py::arg("q"), py::arg("eps") = 1e-10);

    m.def("volkenborn_approx",
          [](long m_, long level, long p, long prec, const std::string& q) {
              PadicQContext ctx = make_padic_context(p, prec, q);
              return volkenborn_approx(m_, level, ctx);
          },
          py::arg("m"), py::arg("level"), py::arg("p"), py::arg("prec"), py::arg("q"));
    m.def("padic_l",
          [](const std::string& s, const std::string& chi, long p, long prec, const std::string& q) {
              PadicQContext base = make_padic_context(p, prec, q);
              PadicLContext ctx(base, make_padic_character(chi, p, base.work_precision()));
              Rational sv = Rational::parse(s);
              if (sv.is_integer()) return padic_l(sv.numerator().convert_to<long>(), ctx);
              if (sv.valuation(p) < 0) throw DomainError("padic_l: s must lie in Z_p");
              return padic_l(base.embed(sv), ctx);
          },
          py::arg("s"), py::arg("chi"), py::arg("p"), py::arg("prec"), py::arg("q"));
    m.def("theorem5_lhs",
          [](long n, long r, long p, long prec, const std::string& q) {
              return theorem5_lhs_exact(n, r, make_padic_context(p, prec, q));
          },
          py::arg("n"), py::arg("r"), py::arg("p"), py::arg("prec"), py::arg("q"));

    m.def("suite_names", &suite_names);
    m.def("run_suite_json",
          [](const std::string& name, const py::kwargs& kwargs) {
              return run_suite(name, params_from_kwargs(kwargs)).to_json().dump();
          },
          py::arg("name"), "runs a named verification suite, returns the JSON report as a string");
}
