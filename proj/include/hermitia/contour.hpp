#pragma once

#include <functional>
#include <vector>

#include "hermitia/functional.hpp"
#include "hermitia/quadrature.hpp"
#include "hermitia/scalar.hpp"

namespace hermitia {

/// A straight line or a circular arc, parameterized by s in [0, 1], carrying a
/// continuous argument of its points for branch tracking of zeta^tau.
class ContourSegment {
public:
    enum class Kind { Line, Arc };

    /// Line from `from` to `to`; every point carries the argument `arg`.
    static ContourSegment line(Complex from, Complex to, double arg);

    /// Arc of `radius` about the origin from angle theta0 to theta1; the
    /// tracked argument equals the angle.
    static ContourSegment arc(double radius, double theta0, double theta1);

    Kind kind() const { return kind_; }
    Complex point(double s) const;
    Complex tangent(double s) const;  // d point / ds
    double arg(double s) const;

    Complex start() const { return point(0.0); }
    Complex end() const { return point(1.0); }

private:
    Kind kind_ = Kind::Line;
    Complex from_, to_;
    double radius_ = 0.0;
    double theta0_ = 0.0;
    double theta1_ = 0.0;
    double arg_ = 0.0;
};

struct ContourPath {
    std::vector<ContourSegment> segments;
    double epsilon = 0.1;
    double truncation = 8.0;
};

/// C1: +R -> +eps along the real axis, the upper semicircle |zeta| = eps to
/// -eps, then -eps -> -R. Requires 0 < eps < 1 <= R.
ContourPath build_c1(double epsilon, double truncation);

/// C: R -> eps with arg 0, the full circle |zeta| = eps counterclockwise, then
/// eps -> R with arg 2 pi. Requires 0 < eps < 1 <= R.
ContourPath build_c_loop(double epsilon, double truncation);

/// Integrand evaluated at a path point and its tracked argument.
using ContourIntegrand = std::function<Complex(Complex zeta, double arg)>;

/// Sum of per-segment tanh-sinh integrals, in segment order.
Complex integrate_contour(const ContourIntegrand& f, const ContourPath& path,
                          const QuadratureConfig& cfg = {});

/// exp(power (ln|zeta| + i arg)).
Complex tracked_power(Complex zeta, double arg, Complex power);

struct ContourConfig {
    QuadratureConfig quadrature;
    double epsilon = 0.1;

    void validate() const;
};

/// Integral of zeta^n |zeta|^tau H_tau(|zeta|) e^(-zeta^2) over build_c1(eps, R)
/// for the given finite eps. Depends on eps as O(eps^(n + Re tau + 1)) since
/// the integrand is not holomorphic.
Complex indented_moment_c1(unsigned n, Complex tau, double epsilon, double truncation,
                           const QuadratureConfig& cfg = {});

/// The C1 moment I_n(tau): the limit of indented_moment_c1 as the origin
/// detour shrinks, extrapolated from eps, eps/2, eps/4, ...
/// Odd n gives 0; even n gives -sqrt(pi) Gamma(n+tau+1) / (2^n (n/2)!).
Complex contour_moment_c1(unsigned n, Complex tau, const ContourConfig& cfg = {});

/// <G_H(tau), p> = -(1/(sqrt(pi) Gamma(tau+1))) sum_n p_n I_n(tau). Requires tau not an integer.
Complex apply_via_contour(Complex tau, const Polynomial& p, const ContourConfig& cfg = {});

/// Gamma(tau+1) = 2/(sqrt(pi)(e^(2 pi i tau) - 1)) int_C zeta^tau H_tau(zeta) e^(-zeta^2) dzeta.
Complex gamma_via_loop(Complex tau, const ContourConfig& cfg = {});

/// Gamma(tau+1) = 1/(i sqrt(pi) sin(pi tau)) int_C (-zeta)^tau H_tau(zeta) e^(-zeta^2) dzeta,
/// with arg(-zeta) = arg(zeta) - pi along C.
Complex gamma_via_sine_form(Complex tau, const ContourConfig& cfg = {});

/// 1/Gamma(tau+1) = i pi^(-3/2) int_C (-zeta)^(-1-tau) H_{-1-tau}(zeta) e^(-zeta^2) dzeta.
Complex reciprocal_gamma_via_contour(Complex tau, const ContourConfig& cfg = {});

/// Largest |Im tau| for which the contour representations are evaluated.
inline constexpr double kContourImagEnvelope = 2.0;

}  // namespace hermitia
