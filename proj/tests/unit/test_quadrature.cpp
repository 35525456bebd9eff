#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "hermitia/errors.hpp"
#include "hermitia/functional.hpp"
#include "hermitia/hypergeometric.hpp"
#include "hermitia/quadrature.hpp"
#include "oracles/reference_values.hpp"
#include "support.hpp"

using hermitia::Complex;
using hermitia::Polynomial;
using testing::close;

namespace {

const double kZs[] = {0.0, 0.5, 1.0, 2.3};
const Complex kTaus[] = {-0.5, 0.5, 1.3, 2.7};

}  // namespace

TEST_CASE("half-line integrals with known values") {
    const auto gauss = hermitia::integrate_halfline([](double x) { return std::exp(-x * x); });
    CHECK(close(gauss, hermitia::kSqrtPi / 2.0, 1e-12));
    const auto first = hermitia::integrate_halfline([](double x) { return x * std::exp(-x * x); });
    CHECK(close(first, 0.5, 1e-12));
    const auto singular =
        hermitia::integrate_halfline([](double x) { return std::exp(-x * x) / std::sqrt(x); });
    CHECK(close(singular, oracle::kGammaQuarter / 2.0, 1e-10));
    CHECK(std::abs(oracle::kGammaQuarter / 2.0 - 1.8128049541) < 1e-10);
}

TEST_CASE("refinement differences shrink by at least 4x past level 6") {
    const auto est = hermitia::tanh_sinh_levels([](double x) { return std::exp(-x * x); }, 0.0, 8.0, 10);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon();
    for (std::size_t k = 7; k < est.size(); ++k) {
        const double prev = std::abs(est[k - 1] - est[k - 2]);
        const double diff = std::abs(est[k] - est[k - 1]);
        CAPTURE(k);
        CHECK(diff <= std::max(prev / 4.0, floor));
    }
    CHECK(close(est.back(), hermitia::kSqrtPi / 2.0, 1e-15));
}

TEST_CASE("tanh-sinh error paths") {
    hermitia::QuadratureConfig cfg;
    CHECK_THROWS_AS(hermitia::tanh_sinh([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0, cfg),
                    hermitia::SingularIntegrand);
    cfg.rel_tol = 1e-300;
    cfg.abs_tol = 1e-300;
    cfg.max_levels = 4;
    CHECK_THROWS_AS(hermitia::tanh_sinh([](double x) { return std::sin(40.0 * x); }, 0.0, 3.0, cfg),
                    hermitia::NonConvergence);
}

TEST_CASE("config validation") {
    hermitia::QuadratureConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.max_levels = 3;
    CHECK_THROWS_AS(cfg.validate(), hermitia::DomainError);
    cfg = {};
    cfg.max_levels = 17;
    CHECK_THROWS_AS(cfg.validate(), hermitia::DomainError);
    cfg = {};
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), hermitia::DomainError);
    cfg = {};
    cfg.truncation_radius = -1.0;
    CHECK_THROWS_AS(cfg.validate(), hermitia::DomainError);
}

TEST_CASE("auto radius") {
    CHECK(hermitia::auto_radius(1e-14, 0.0) == 8.0);
    CHECK(hermitia::auto_radius(1e-14, 40.0) == doctest::Approx(std::sqrt(std::log(1e14)) + 12.0));
}

TEST_CASE("weight integral matches the closed form") {
    CHECK(close(hermitia::hermite_weight_integral(0.0, 0.0), hermitia::kSqrtPi / 2.0, 1e-12));
    CHECK(close(hermitia::hermite_weight_integral(2.0, 2.0), hermitia::kSqrtPi, 1e-12));
    for (const Complex tau : kTaus) {
        for (const double z : kZs) {
            CAPTURE(tau);
            CAPTURE(z);
            CHECK(close(hermitia::hermite_weight_integral(z, tau), hermitia::closed_form_313(z, tau), 1e-8));
        }
        CHECK(close(hermitia::hermite_weight_integral(tau, tau), hermitia::closed_form_313(tau, tau), 1e-8));
    }
}

TEST_CASE("weight integral against independent quadrature") {
    for (const auto& c : oracle::kWeight) {
        CAPTURE(c.z);
        CAPTURE(c.tau);
        CHECK(close(hermitia::hermite_weight_integral(c.z, c.tau), c.value, 1e-9));
    }
}

TEST_CASE("Laplace transform of 1F1 by quadrature") {
    const auto& c = oracle::kLaplace[1];
    hermitia::QuadratureConfig cfg;
    cfg.truncation_radius = 60.0;
    const Complex via_quadrature = hermitia::integrate_halfline(
        [&](double t) {
            return std::exp((c.alpha - 1.0) * std::log(t) - c.s * t) * hermitia::kummer_1f1(c.a1, c.b1, t);
        },
        cfg);
    CHECK(close(via_quadrature, c.value, 1e-8));
}

TEST_CASE("closed form") {
    CHECK(close(hermitia::closed_form_313(0.0, 0.0), hermitia::kSqrtPi / 2.0, 1e-15));
    CHECK(close(hermitia::closed_form_313(2.0, 0.0), hermitia::kSqrtPi / 4.0, 1e-14));
    const Complex tau(0.3, 0.4);
    CHECK(close(hermitia::closed_form_313(tau, tau), hermitia::kSqrtPi * hermitia::gamma(tau + 1.0) / 2.0, 1e-14));
    // Orthogonality: 1/Gamma vanishes at (z - n)/2 + 1 = 0, -1, ...
    CHECK(hermitia::closed_form_313(1.0, 3.0) == 0.0);
}

TEST_CASE("orthogonality at integer degree") {
    for (const int n : {1, 2, 3}) {
        CHECK(close(hermitia::hermite_weight_integral(double(n), double(n)),
                    hermitia::closed_form_313(double(n), double(n)), 1e-10));
        for (int m = n - 2; m >= 0; m -= 2) {
            CAPTURE(n);
            CAPTURE(m);
            CHECK(std::abs(hermitia::hermite_weight_integral(double(m), double(n))) <= 1e-10);
        }
    }
}

TEST_CASE("domain and envelope errors") {
    CHECK_THROWS_AS(hermitia::hermite_weight_integral(-1.0, 0.5), hermitia::DomainError);
    CHECK_THROWS_AS(hermitia::hermite_weight_integral(0.5, Complex(0.5, 3.5)), hermitia::NonConvergence);
    CHECK_THROWS_AS(hermitia::apply_via_quadrature(-1.2, Polynomial{1.0}), hermitia::DomainError);
}

TEST_CASE("functional through quadrature") {
    for (const Complex tau : {Complex(-0.5), Complex(0.3), Complex(0.5), Complex(1.3), Complex(2.7), Complex(0.5, 0.5)}) {
        CHECK(close(hermitia::apply_via_quadrature(tau, Polynomial{1.0}), 1.0, 1e-9));
        CHECK(hermitia::apply_via_quadrature(tau, Polynomial::monomial(1)) == 0.0);
        const hermitia::GeneralizedHermiteFunctional g(tau);
        for (unsigned deg = 0; deg <= 12; ++deg) {
            const Polynomial p = Polynomial::monomial(deg);
            CAPTURE(tau);
            CAPTURE(deg);
            CHECK(close(hermitia::apply_via_quadrature(tau, p), g.apply(p), 1e-8));
        }
    }
    CHECK(close(hermitia::apply_via_quadrature(0.5, Polynomial::monomial(2)), 15.0 / 16.0, 1e-8));
}

TEST_CASE("Gamma from the real line") {
    CHECK(close(hermitia::gamma_via_realline(0.0), 1.0, 1e-12));
    CHECK(close(hermitia::gamma_via_realline(1.0), 1.0, 1e-12));
    CHECK(close(hermitia::gamma_via_realline(0.5), hermitia::kSqrtPi / 2.0, 1e-10));
    for (const Complex tau : {Complex(-0.5), Complex(0.3), Complex(2.7), Complex(0.5, 0.5)}) {
        CHECK(close(hermitia::gamma_via_realline(tau), hermitia::gamma(tau + 1.0), 1e-9));
    }
}

TEST_CASE("results are bit-reproducible") {
    const Complex a = hermitia::hermite_weight_integral(0.5, Complex(1.3, 0.2));
    const Complex b = hermitia::hermite_weight_integral(0.5, Complex(1.3, 0.2));
    CHECK(a == b);
}
