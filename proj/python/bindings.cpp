#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermitia/contour.hpp"
#include "hermitia/errors.hpp"
#include "hermitia/functional.hpp"
#include "hermitia/hermite.hpp"
#include "hermitia/hypergeometric.hpp"
#include "hermitia/quadrature.hpp"
#include "hermitia/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using hermitia::Complex;

namespace {

hermitia::ContourConfig make_config(double rel_tol, double abs_tol, std::optional<double> radius,
                                    double epsilon) {
    hermitia::ContourConfig cfg;
    cfg.quadrature.rel_tol = rel_tol;
    cfg.quadrature.abs_tol = abs_tol;
    cfg.quadrature.truncation_radius = radius;
    cfg.epsilon = epsilon;
    cfg.validate();
    return cfg;
}

#define HERMITIA_CFG_ARGS \
    "rel_tol"_a = 1e-10, "abs_tol"_a = 1e-14, "radius"_a = py::none(), "epsilon"_a = 0.1

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hermite functions of complex degree and the generalized Hermite functional";

    auto base = py::register_exception<hermitia::Error>(m, "HermitiaError", PyExc_ArithmeticError);
    py::register_exception<hermitia::PoleError>(m, "PoleError", base.ptr());
    py::register_exception<hermitia::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<hermitia::NonConvergence>(m, "NonConvergence", base.ptr());
    py::register_exception<hermitia::ParameterPole>(m, "ParameterPole", base.ptr());
    py::register_exception<hermitia::DegenerateDegree>(m, "DegenerateDegree", base.ptr());
    py::register_exception<hermitia::SingularIntegrand>(m, "SingularIntegrand", base.ptr());
    py::register_exception<hermitia::RangeError>(m, "RangeError", base.ptr());

    m.def("gamma", py::overload_cast<Complex>(&hermitia::gamma), "z"_a);
    m.def("reciprocal_gamma", py::overload_cast<Complex>(&hermitia::reciprocal_gamma), "z"_a);
    m.def("kummer_1f1", [](Complex a, Complex b, Complex z) { return hermitia::kummer_1f1(a, b, z); },
          "a"_a, "b"_a, "z"_a);

    m.def(
        "hermite",
        [](Complex tau, Complex z, const std::string& method) -> Complex {
            if (method == "series") return hermitia::hermite_series(tau, z);
            if (method == "1f1") return hermitia::hermite_1f1_form(tau, z);
            if (method == "asymptotic") {
                if (z.imag() != 0.0) throw hermitia::DomainError("asymptotic form needs real x > 0");
                return hermitia::hermite_asymptotic(tau, z.real(), hermitia::HermiteEvalConfig{}.asymptotic_terms);
            }
            if (method != "auto") throw py::value_error("unknown method: " + method);
            return hermitia::hermite(tau, z);
        },
        "tau"_a, "z"_a, "method"_a = "auto");
    m.def("hermite_derivative",
          [](Complex tau, Complex z) { return hermitia::hermite_derivative(tau, z); }, "tau"_a, "z"_a);

    m.def(
        "moments",
        [](Complex tau, unsigned max_n) {
            const hermitia::GeneralizedHermiteFunctional g(tau);
            std::vector<Complex> out;
            for (unsigned n = 0; n <= max_n; ++n) out.push_back(g.moment(n));
            return out;
        },
        "tau"_a, "max_n"_a);

    m.def(
        "apply",
        [](Complex tau, std::vector<Complex> coeffs, const std::string& via, double rel_tol,
           double abs_tol, std::optional<double> radius, double epsilon) -> Complex {
            const hermitia::Polynomial p(std::move(coeffs));
            const auto cfg = make_config(rel_tol, abs_tol, radius, epsilon);
            if (via == "quadrature") return hermitia::apply_via_quadrature(tau, p, cfg.quadrature);
            if (via == "contour") return hermitia::apply_via_contour(tau, p, cfg);
            if (via != "moments") throw py::value_error("unknown route: " + via);
            return hermitia::GeneralizedHermiteFunctional(tau).apply(p);
        },
        "tau"_a, "coeffs"_a, "via"_a = "moments", HERMITIA_CFG_ARGS);

    m.def(
        "weight_integral",
        [](Complex z, Complex tau, double rel_tol, double abs_tol, std::optional<double> radius,
           double epsilon) {
            return hermitia::hermite_weight_integral(
                z, tau, make_config(rel_tol, abs_tol, radius, epsilon).quadrature);
        },
        "z"_a, "tau"_a, HERMITIA_CFG_ARGS);

    m.def(
        "contour_moment",
        [](unsigned n, Complex tau, double rel_tol, double abs_tol, std::optional<double> radius,
           double epsilon) {
            return hermitia::contour_moment_c1(n, tau, make_config(rel_tol, abs_tol, radius, epsilon));
        },
        "n"_a, "tau"_a, HERMITIA_CFG_ARGS);

    m.def(
        "gamma_via",
        [](Complex tau, const std::string& method, double rel_tol, double abs_tol,
           std::optional<double> radius, double epsilon) -> Complex {
            const auto cfg = make_config(rel_tol, abs_tol, radius, epsilon);
            if (method == "realline") return hermitia::gamma_via_realline(tau, cfg.quadrature);
            if (method == "loop") return hermitia::gamma_via_loop(tau, cfg);
            if (method == "sine") return hermitia::gamma_via_sine_form(tau, cfg);
            if (method == "reciprocal") return hermitia::reciprocal_gamma_via_contour(tau, cfg);
            if (method == "reference") return hermitia::gamma(tau + 1.0);
            throw py::value_error("unknown method: " + method);
        },
        "tau"_a, "method"_a, HERMITIA_CFG_ARGS);

    m.def(
        "verify",
        [](const std::string& suite, std::optional<std::vector<Complex>> grid, double tol,
           bool deterministic) {
            const auto parsed = hermitia::parse_suite(suite);
            if (!parsed) throw py::value_error("unknown suite: " + suite);
            const auto taus = grid ? *grid : hermitia::default_tau_grid();
            if (taus.empty()) throw py::value_error("empty tau grid");
            hermitia::VerifyConfig cfg;
            cfg.tolerance = tol;
            py::gil_scoped_release release;
            return hermitia::report_to_json(hermitia::run_suite(*parsed, taus, cfg), deterministic);
        },
        "suite"_a, "tau_grid"_a = py::none(), "tol"_a = 1e-8, "deterministic"_a = true);
}
