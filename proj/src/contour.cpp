#include "hermitia/contour.hpp"

#include <cmath>
#include <string>

#include "hermitia/errors.hpp"
#include "hermitia/summation.hpp"

namespace hermitia {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * kPi;

// Extrapolation ladder for the C1 indentation limit.
constexpr int kMaxLadder = 24;
constexpr double kLadderRatio = 0.5;

void check_path_params(double epsilon, double truncation, const char* what) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0) || !(truncation >= 1.0)) {
        throw DomainError(std::string(what) + ": requires 0 < epsilon < 1 <= truncation");
    }
}

void check_envelope(Complex tau, const char* what) {
    if (std::abs(tau.imag()) > kContourImagEnvelope) {
        throw NonConvergence(std::string(what) + ": |Im tau| exceeds the tested envelope of 2");
    }
}

double loop_radius(const ContourConfig& cfg, Complex tau) {
    return cfg.quadrature.truncation_radius.value_or(
        auto_radius(cfg.quadrature.abs_tol, 2.0 * tau.real()));
}

// e^(2 pi i tau) - 1, rejecting integer tau.
Complex monodromy_gap(Complex tau, const char* what) {
    const Complex gap = std::exp(kTwoPi * kI * tau) - 1.0;
    if (std::abs(gap) < 1e-8) {
        throw DomainError(std::string(what) + ": tau must not be an integer");
    }
    return gap;
}

// Real-line part of the C1 integrand: |zeta|^tau H_tau(|zeta|) at radius r.
Complex radial_weight(Complex tau, double r, const HermiteEvalConfig& hcfg) {
    return std::exp(tau * std::log(r)) * hermite(tau, r, hcfg);
}

Complex c1_integrand(unsigned n, Complex tau, Complex zeta, const HermiteEvalConfig& hcfg) {
    const double r = std::abs(zeta);
    return std::pow(zeta, static_cast<int>(n)) * radial_weight(tau, r, hcfg) *
           std::exp(-zeta * zeta);
}

}  // namespace

ContourSegment ContourSegment::line(Complex from, Complex to, double arg) {
    ContourSegment s;
    s.kind_ = Kind::Line;
    s.from_ = from;
    s.to_ = to;
    s.arg_ = arg;
    return s;
}

ContourSegment ContourSegment::arc(double radius, double theta0, double theta1) {
    ContourSegment s;
    s.kind_ = Kind::Arc;
    s.radius_ = radius;
    s.theta0_ = theta0;
    s.theta1_ = theta1;
    return s;
}

Complex ContourSegment::point(double s) const {
    if (kind_ == Kind::Line) {
        return from_ + s * (to_ - from_);
    }
    return std::polar(radius_, theta0_ + s * (theta1_ - theta0_));
}

Complex ContourSegment::tangent(double s) const {
    if (kind_ == Kind::Line) {
        return to_ - from_;
    }
    const double theta = theta0_ + s * (theta1_ - theta0_);
    return kI * std::polar(radius_, theta) * (theta1_ - theta0_);
}

double ContourSegment::arg(double s) const {
    if (kind_ == Kind::Line) {
        return arg_;
    }
    return theta0_ + s * (theta1_ - theta0_);
}

ContourPath build_c1(double epsilon, double truncation) {
    check_path_params(epsilon, truncation, "build_c1");
    ContourPath path;
    path.epsilon = epsilon;
    path.truncation = truncation;
    path.segments = {
        ContourSegment::line(truncation, epsilon, 0.0),
        ContourSegment::arc(epsilon, 0.0, kPi),
        ContourSegment::line(-epsilon, -truncation, kPi),
    };
    return path;
}

ContourPath build_c_loop(double epsilon, double truncation) {
    check_path_params(epsilon, truncation, "build_c_loop");
    ContourPath path;
    path.epsilon = epsilon;
    path.truncation = truncation;
    path.segments = {
        ContourSegment::line(truncation, epsilon, 0.0),
        ContourSegment::arc(epsilon, 0.0, kTwoPi),
        ContourSegment::line(epsilon, truncation, kTwoPi),
    };
    return path;
}

Complex integrate_contour(const ContourIntegrand& f, const ContourPath& path,
                          const QuadratureConfig& cfg) {
    CompensatedSum total;
    for (const auto& segment : path.segments) {
        auto pulled_back = [&](double s) {
            return f(segment.point(s), segment.arg(s)) * segment.tangent(s);
        };
        total.add(tanh_sinh(pulled_back, 0.0, 1.0, cfg).value);
    }
    return total.value();
}

Complex tracked_power(Complex zeta, double arg, Complex power) {
    return std::exp(power * Complex(std::log(std::abs(zeta)), arg));
}

void ContourConfig::validate() const {
    quadrature.validate();
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw DomainError("ContourConfig: epsilon must lie in (0, 1)");
    }
}

Complex indented_moment_c1(unsigned n, Complex tau, double epsilon, double truncation,
                           const QuadratureConfig& cfg) {
    const auto path = build_c1(epsilon, truncation);
    return integrate_contour(
        [&](Complex zeta, double) { return c1_integrand(n, tau, zeta, cfg.hermite); }, path,
        cfg);
}

Complex contour_moment_c1(unsigned n, Complex tau, const ContourConfig& cfg) {
    check_envelope(tau, "contour_moment_c1");
    const auto& qcfg = cfg.quadrature;
    const double radius =
        qcfg.truncation_radius.value_or(auto_radius(qcfg.abs_tol, n + 2.0 * tau.real()));
    check_path_params(cfg.epsilon, radius, "contour_moment_c1");
    if (near_nonpositive_integer(static_cast<double>(n) + tau + 1.0, 1e-10)) {
        throw DomainError("contour_moment_c1: n + tau + 1 is a nonpositive integer, the indentation limit diverges");
    }

    auto integrand = [&](Complex zeta, double) {
        return c1_integrand(n, tau, zeta, qcfg.hermite);
    };
    // The outer lines (|zeta| >= eps) are shared by every rung of the ladder;
    // each rung adds the strips between eps and its own detour radius.
    const ContourPath outer{{ContourSegment::line(radius, cfg.epsilon, 0.0),
                             ContourSegment::line(-cfg.epsilon, -radius, kPi)},
                            cfg.epsilon,
                            radius};
    const Complex outer_value = integrate_contour(integrand, outer, qcfg);

    // I(eps_k) = I + sum_j e_j eps_k^(n + tau + 1 + j): eliminate one exponent
    // per column (generalized Richardson).
    std::vector<std::vector<Complex>> table;
    Complex strips = 0.0;
    double eps_prev = cfg.epsilon;
    Complex best = 0.0;
    for (int k = 0; k < kMaxLadder; ++k) {
        const double eps_k = cfg.epsilon * std::pow(kLadderRatio, k);
        if (k > 0) {
            const ContourPath strip{{ContourSegment::line(eps_prev, eps_k, 0.0),
                                     ContourSegment::line(-eps_k, -eps_prev, kPi)},
                                    eps_k,
                                    radius};
            strips += integrate_contour(integrand, strip, qcfg);
        }
        const ContourPath detour{{ContourSegment::arc(eps_k, 0.0, kPi)}, eps_k, radius};
        const Complex rung = outer_value + strips + integrate_contour(integrand, detour, qcfg);
        eps_prev = eps_k;

        std::vector<Complex> row{rung};
        for (int j = 0; j < k; ++j) {
            const Complex factor =
                std::exp((static_cast<double>(n) + tau + 1.0 + static_cast<double>(j)) *
                         std::log(kLadderRatio));
            row.push_back((row[j] - factor * table[k - 1][j]) / (1.0 - factor));
        }
        table.push_back(std::move(row));
        const Complex estimate = table[k][k];
        if (k >= 2) {
            const double change = std::abs(estimate - best);
            if (change <= std::max(qcfg.abs_tol, qcfg.rel_tol * std::abs(estimate))) {
                return estimate;
            }
        }
        best = estimate;
    }
    throw NonConvergence("contour_moment_c1: indentation limit did not settle");
}

Complex apply_via_contour(Complex tau, const Polynomial& p, const ContourConfig& cfg) {
    if (near_nonnegative_integer(tau, 1e-10) ||
        (tau.real() < 0.0 && near_nonpositive_integer(tau, 1e-10))) {
        throw DomainError("apply_via_contour: tau must not be an integer");
    }
    CompensatedSum sum;
    const auto& c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] != 0.0) {
            sum.add(c[n] * contour_moment_c1(static_cast<unsigned>(n), tau, cfg));
        }
    }
    return require_finite(-sum.value() * reciprocal_gamma(tau + 1.0) / kSqrtPi,
                          "apply_via_contour");
}

Complex gamma_via_loop(Complex tau, const ContourConfig& cfg) {
    const Complex gap = monodromy_gap(tau, "gamma_via_loop");
    check_envelope(tau, "gamma_via_loop");
    const auto path = build_c_loop(cfg.epsilon, loop_radius(cfg, tau));
    const auto& hcfg = cfg.quadrature.hermite;
    const Complex loop = integrate_contour(
        [&](Complex zeta, double arg) {
            return tracked_power(zeta, arg, tau) * hermite(tau, zeta, hcfg) *
                   std::exp(-zeta * zeta);
        },
        path, cfg.quadrature);
    return require_finite(2.0 * loop / (kSqrtPi * gap), "gamma_via_loop");
}

Complex gamma_via_sine_form(Complex tau, const ContourConfig& cfg) {
    monodromy_gap(tau, "gamma_via_sine_form");
    check_envelope(tau, "gamma_via_sine_form");
    const auto path = build_c_loop(cfg.epsilon, loop_radius(cfg, tau));
    const auto& hcfg = cfg.quadrature.hermite;
    const Complex loop = integrate_contour(
        [&](Complex zeta, double arg) {
            return tracked_power(zeta, arg - kPi, tau) * hermite(tau, zeta, hcfg) *
                   std::exp(-zeta * zeta);
        },
        path, cfg.quadrature);
    return require_finite(loop / (kI * kSqrtPi * sin_pi(tau)), "gamma_via_sine_form");
}

Complex reciprocal_gamma_via_contour(Complex tau, const ContourConfig& cfg) {
    check_envelope(tau, "reciprocal_gamma_via_contour");
    const Complex sigma = -1.0 - tau;
    const auto path = build_c_loop(cfg.epsilon, loop_radius(cfg, sigma));
    const auto& hcfg = cfg.quadrature.hermite;
    const Complex loop = integrate_contour(
        [&](Complex zeta, double arg) {
            return tracked_power(zeta, arg - kPi, sigma) * hermite(sigma, zeta, hcfg) *
                   std::exp(-zeta * zeta);
        },
        path, cfg.quadrature);
    return require_finite(kI * loop / (kPi * kSqrtPi), "reciprocal_gamma_via_contour");
}

}  // namespace hermitia
