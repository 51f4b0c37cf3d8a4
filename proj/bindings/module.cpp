#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "betasum/combinatorics.hpp"
#include "betasum/identities.hpp"
#include "betasum/integrate.hpp"
#include "betasum/num_format.hpp"
#include "betasum/quadrature.hpp"
#include "betasum/rational.hpp"

namespace py = pybind11;
using namespace betasum;

namespace {

Variant parse_variant(const std::string& name) {
    if (name == "paper-form") {
        return Variant::paper_form;
    }
    if (name == "corrected-form") {
        return Variant::corrected_form;
    }
    throw std::invalid_argument("variant must be 'paper-form' or 'corrected-form'");
}

py::dict identity_report_dict(const IdentityReport& r) {
    py::dict params;
    for (const auto& [k, v] : r.params) {
        params[py::str(k)] = v;
    }
    py::dict d;
    d["identity"] = r.identity;
    d["variant"] = variant_name(r.variant);
    d["params"] = params;
    d["lhs"] = r.lhs.str();
    d["rhs"] = r.rhs.str();
    d["verdict"] = r.pass ? "pass" : "fail";
    d["note"] = r.note;
    d["counts_toward_failure"] = r.counts_toward_failure;
    return d;
}

py::dict numeric_report_dict(const NumericReport& r) {
    py::dict params;
    for (const auto& [k, v] : r.params) {
        params[py::str(k)] = v;
    }
    py::dict d;
    d["identity"] = r.check;
    d["variant"] = r.variant;
    d["params"] = params;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["tolerance"] = r.tolerance;
    d["verdict"] = r.pass ? "pass" : "fail";
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(betasum, m) {
    m.doc() = "Exact verification of inverse binomial coefficient identities via Beta and "
              "Gamma integral representations, with a floating-point validation layer.";

    py::class_<Rational>(m, "Rational")
        .def(py::init<long>(), py::arg("n"))
        .def(py::init<long, long>(), py::arg("num"), py::arg("den"))
        .def(py::init(&Rational::from_string), py::arg("text"))
        .def_property_readonly("numerator", [](const Rational& r) { return py::int_(py::str(r.num().get_str())); })
        .def_property_readonly("denominator", [](const Rational& r) { return py::int_(py::str(r.den().get_str())); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; }, py::is_operator())
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__pow__", [](const Rational& a, long e) { return a.pow(e); });

    py::class_<PiPower>(m, "PiPower")
        .def("__str__", &PiPower::str)
        .def("__repr__", [](const PiPower& p) { return "PiPower('" + p.str() + "')"; })
        .def("__float__", &PiPower::to_double)
        .def("__eq__", [](const PiPower& a, const PiPower& b) { return a == b; }, py::is_operator())
        .def("is_rational", &PiPower::is_rational)
        .def("rational_part", &PiPower::rational_part)
        .def("coefficient", &PiPower::coefficient, py::arg("half_power"));

    m.def("factorial", &betasum::factorial, py::arg("n"));
    m.def("binomial", &betasum::binomial, py::arg("n"), py::arg("k"));
    m.def("multinomial", &betasum::multinomial, py::arg("n"), py::arg("parts"));
    m.def("rise_factor", &betasum::rise_factor, py::arg("n"), py::arg("r"));
    m.def("gamma_half", &betasum::gamma_half, py::arg("two_x"));
    m.def("wallis", &betasum::wallis, py::arg("p"));
    m.def(
        "integrate_prob_simplex",
        [](const std::vector<unsigned>& alpha) {
            return integrate_prob_simplex(SimplexSpec(static_cast<unsigned>(alpha.size()), alpha));
        },
        py::arg("alpha"));

    m.def("lhs_inverse_binom_sum", &betasum::lhs_inverse_binom_sum, py::arg("n"), py::arg("a"), py::arg("b"));
    m.def("rhs_rockett", &betasum::rhs_rockett, py::arg("n"));
    m.def("rhs_eq2", &betasum::rhs_eq2, py::arg("n"));
    m.def(
        "rhs_general_ab",
        [](unsigned n, const Rational& a, const Rational& b, const std::string& variant) {
            return rhs_general_ab(n, a, b, parse_variant(variant));
        },
        py::arg("n"), py::arg("a"), py::arg("b"), py::arg("variant") = "corrected-form");
    m.def("lhs_k_weighted", &betasum::lhs_k_weighted, py::arg("n"));
    m.def("rhs_example2", &betasum::rhs_example2, py::arg("n"));
    m.def("lhs_even_binom", &betasum::lhs_even_binom, py::arg("n"));
    m.def(
        "rhs_even_binom",
        [](unsigned n, const std::string& variant) { return rhs_even_binom(n, parse_variant(variant)); },
        py::arg("n"), py::arg("variant") = "corrected-form");
    m.def("lhs_inv_binom_pow_sum", &betasum::lhs_inv_binom_pow_sum, py::arg("n"), py::arg("m"));
    m.def(
        "rhs_prop_mt12",
        [](unsigned n, unsigned m_, const std::string& variant) {
            return rhs_prop_mt12(n, m_, parse_variant(variant));
        },
        py::arg("n"), py::arg("m"), py::arg("variant") = "corrected-form");

    m.def(
        "run_suite",
        [](const std::vector<std::string>& selection, unsigned n_max, unsigned m_max, std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_suite(selection, SuiteConfig{n_max, m_max, seed, 20})) {
                out.append(identity_report_dict(r));
            }
            return out;
        },
        py::arg("selection"), py::arg("n_max") = 50, py::arg("m_max") = 3, py::arg("seed") = 0);
    m.def(
        "run_method_checks",
        [](unsigned n_max, unsigned m_max, std::uint64_t seed, unsigned instances) {
            py::list out;
            for (const auto& r : run_method_checks(SuiteConfig{n_max, m_max, seed, instances})) {
                out.append(identity_report_dict(r));
            }
            return out;
        },
        py::arg("n_max") = 50, py::arg("m_max") = 3, py::arg("seed") = 0, py::arg("instances") = 20);
    m.def("catalog", []() {
        py::list out;
        for (const auto& e : catalog()) {
            py::dict d;
            d["name"] = e.name;
            d["kind"] = catalog_kind_name(e.kind);
            d["corrected_form"] = e.has_corrected_form;
            d["description"] = e.description;
            d["note"] = e.note;
            out.append(d);
        }
        return out;
    });

    m.def("gamma_real", &betasum::gamma_real, py::arg("x"));
    m.def("generalized_binomial", &betasum::generalized_binomial, py::arg("s"), py::arg("r"));
    m.def(
        "wallis_numeric",
        [](double p) {
            const QuadratureResult q = wallis_numeric(p);
            return py::make_tuple(q.value, q.error_estimate, q.evaluations);
        },
        py::arg("p"));
    m.def(
        "sin_series_check",
        [](double a, unsigned m_, double tol) { return numeric_report_dict(sin_series_check(a, m_, tol)); },
        py::arg("a"), py::arg("m"), py::arg("tol") = 1e-9);
    m.def(
        "dirichlet_mc",
        [](const std::vector<double>& alpha, const std::vector<double>& p, const std::vector<double>& a,
           std::uint64_t samples, std::uint64_t seed) {
            const DirichletSpec spec(alpha, p, a);
            const QuadratureResult q = dirichlet_mc(spec, samples, seed);
            py::dict d;
            d["value"] = q.value;
            d["standard_error"] = q.error_estimate;
            d["samples"] = q.evaluations;
            d["closed_form"] = dirichlet_closed_form(spec);
            return d;
        },
        py::arg("alpha"), py::arg("p"), py::arg("a"), py::arg("samples") = 100000, py::arg("seed") = 0);
    m.def(
        "run_numeric_checks",
        [](double tol, std::uint64_t samples, std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_numeric_checks(NumericConfig{tol, samples, seed})) {
                out.append(numeric_report_dict(r));
            }
            return out;
        },
        py::arg("tol") = 1e-9, py::arg("samples") = 1000000, py::arg("seed") = 0);

    m.attr("__version__") = "0.1.0";
}
