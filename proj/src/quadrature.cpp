#include "hermitia/quadrature.hpp"

#include <cmath>
#include <string>

#include "hermitia/errors.hpp"
#include "hermitia/summation.hpp"

namespace hermitia {

namespace {

// Beyond |t| = 6 the node distance to an endpoint drops under ~1e-300.
constexpr double kMaxAbscissa = 6.0;
constexpr int kMinLevels = 3;

void check_envelope(Complex tau, const char* what) {
    if (std::abs(tau.imag()) > kRealLineImagEnvelope) {
        throw NonConvergence(std::string(what) + ": |Im tau| exceeds the tested envelope of 3");
    }
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        throw DomainError("QuadratureConfig: tolerances must be positive");
    }
    if (truncation_radius && !(*truncation_radius > 0.0)) {
        throw DomainError("QuadratureConfig: truncation_radius must be positive");
    }
    if (max_levels < 4 || max_levels > 16) {
        throw DomainError("QuadratureConfig: max_levels must lie in [4, 16]");
    }
    hermite.validate();
}

namespace {

// Weighted samples of f on the tanh-sinh grid mapped to [a, b].
class TanhSinhGrid {
public:
    TanhSinhGrid(const RealIntegrand& f, double a, double b) : f_(f), a_(a), b_(b) {}

    Complex sample(double t) const {
        const double width = b_ - a_;
        const double u = 0.5 * kPi * std::sinh(t);
        const double e = std::exp(-2.0 * std::abs(u));
        const double near = e / (1.0 + e);  // distance fraction to the closer end
        const double x = u < 0.0 ? a_ + width * near : b_ - width * near;
        if (near == 0.0 || x <= a_ || x >= b_) {
            return 0.0;
        }
        const double cu = std::cosh(u);
        const double weight = width * 0.5 * kPi * std::cosh(t) / (2.0 * cu * cu);
        if (weight == 0.0) {
            return 0.0;
        }
        const Complex fx = f_(x);
        if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
            throw SingularIntegrand("tanh_sinh: non-finite integrand at x = " + std::to_string(x));
        }
        return fx * weight;
    }

    // Level 0 uses step 1 over the integers in [-kMaxAbscissa, kMaxAbscissa].
    Complex level_zero() {
        const int base = static_cast<int>(kMaxAbscissa);
        for (int k = -base; k <= base; ++k) {
            sum_.add(sample(static_cast<double>(k)));
        }
        return sum_.value();
    }

    // Adds the odd multiples of 2^-level and returns the refined estimate.
    Complex refine(int level) {
        const int base = static_cast<int>(kMaxAbscissa);
        const double h = std::ldexp(1.0, -level);
        const int count = base << level;
        for (int k = -count + 1; k < count; k += 2) {
            sum_.add(sample(k * h));
        }
        return sum_.value() * h;
    }

private:
    const RealIntegrand& f_;
    double a_;
    double b_;
    CompensatedSum sum_;
};

}  // namespace

QuadratureTrace tanh_sinh(const RealIntegrand& f, double a, double b,
                          const QuadratureConfig& cfg) {
    TanhSinhGrid grid(f, a, b);
    QuadratureTrace trace;
    trace.estimates.push_back(grid.level_zero());
    for (int level = 1; level <= cfg.max_levels; ++level) {
        const Complex estimate = grid.refine(level);
        const Complex previous = trace.estimates.back();
        trace.estimates.push_back(estimate);
        if (level >= kMinLevels &&
            std::abs(estimate - previous) <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate))) {
            trace.value = estimate;
            return trace;
        }
    }
    throw NonConvergence("tanh_sinh: max_levels reached without meeting tolerance");
}

std::vector<Complex> tanh_sinh_levels(const RealIntegrand& f, double a, double b, int levels) {
    if (levels < 0 || levels > 20) {
        throw DomainError("tanh_sinh_levels: levels must lie in [0, 20]");
    }
    TanhSinhGrid grid(f, a, b);
    std::vector<Complex> out{grid.level_zero()};
    for (int level = 1; level <= levels; ++level) {
        out.push_back(grid.refine(level));
    }
    return out;
}

double auto_radius(double abs_tol, double growth) {
    return std::max(8.0, std::sqrt(std::log(1.0 / abs_tol)) + 2.0 + std::abs(growth) / 4.0);
}

Complex integrate_halfline(const RealIntegrand& f, const QuadratureConfig& cfg) {
    const double radius = cfg.truncation_radius.value_or(auto_radius(cfg.abs_tol, 0.0));
    return tanh_sinh(f, 0.0, radius, cfg).value;
}

Complex hermite_weight_integral(Complex z, Complex tau, const QuadratureConfig& cfg) {
    if (!(z.real() > -1.0)) {
        throw DomainError("hermite_weight_integral: requires Re z > -1");
    }
    check_envelope(tau, "hermite_weight_integral");
    const double radius =
        cfg.truncation_radius.value_or(auto_radius(cfg.abs_tol, z.real() + tau.real()));
    auto integrand = [&](double x) {
        return std::exp(z * std::log(x) - x * x) * hermite(tau, x, cfg.hermite);
    };
    return tanh_sinh(integrand, 0.0, radius, cfg).value;
}

Complex closed_form_313(Complex z, Complex tau) {
    const Complex two_pow = std::exp(-(z - tau + 1.0) * std::log(2.0));
    return require_finite(kSqrtPi * two_pow * gamma(z + 1.0) *
                              reciprocal_gamma((z - tau) / 2.0 + 1.0),
                          "closed_form_313");
}

Complex apply_via_quadrature(Complex tau, const Polynomial& p, const QuadratureConfig& cfg) {
    if (!(tau.real() > -1.0)) {
        throw DomainError("apply_via_quadrature: requires Re tau > -1");
    }
    check_envelope(tau, "apply_via_quadrature");
    const Polynomial folded = p.even_part_doubled();
    if (folded.is_zero()) {
        return 0.0;
    }
    const double radius = cfg.truncation_radius.value_or(
        auto_radius(cfg.abs_tol, static_cast<double>(folded.degree()) + 2.0 * tau.real()));
    auto integrand = [&](double x) {
        return folded(x) * std::exp(tau * std::log(x) - x * x) * hermite(tau, x, cfg.hermite);
    };
    const Complex integral = tanh_sinh(integrand, 0.0, radius, cfg).value;
    return require_finite(integral * reciprocal_gamma(tau + 1.0) / kSqrtPi,
                          "apply_via_quadrature");
}

Complex gamma_via_realline(Complex tau, const QuadratureConfig& cfg) {
    return 2.0 / kSqrtPi * hermite_weight_integral(tau, tau, cfg);
}

}  // namespace hermitia
