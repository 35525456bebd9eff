#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hermitia/functional.hpp"
#include "hermitia/hermite.hpp"
#include "hermitia/scalar.hpp"

namespace hermitia {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    /// Upper cut-off R of (0, inf); nullopt selects it from abs_tol.
    std::optional<double> truncation_radius;
    int max_levels = 12;
    HermiteEvalConfig hermite;

    void validate() const;
};

using RealIntegrand = std::function<Complex(double)>;

/// Per-level record of a tanh-sinh run; estimates[k] uses step 2^-k.
struct QuadratureTrace {
    Complex value;
    std::vector<Complex> estimates;
};

/// Tanh-sinh quadrature of f over [a, b]. Nodes near `a` are placed without
/// cancellation, so f may be integrably singular at a = 0. Levels are refined
/// until consecutive estimates differ by at most max(abs_tol, rel_tol |I|).
/// Throws NonConvergence or SingularIntegrand.
QuadratureTrace tanh_sinh(const RealIntegrand& f, double a, double b,
                          const QuadratureConfig& cfg);

/// Truncation radius max(8, sqrt(ln(1/abs_tol)) + 2 + growth/4), where growth
/// bounds the power of x multiplying e^(-x^2).
/// Estimates at levels 0..levels with no stopping rule.
std::vector<Complex> tanh_sinh_levels(const RealIntegrand& f, double a, double b, int levels);

double auto_radius(double abs_tol, double growth);

/// int_0^R f(x) dx with R from cfg (or auto_radius(abs_tol, 0)).
Complex integrate_halfline(const RealIntegrand& f, const QuadratureConfig& cfg = {});

/// int_0^inf x^z H_tau(x) e^(-x^2) dx by quadrature. Requires Re z > -1.
Complex hermite_weight_integral(Complex z, Complex tau, const QuadratureConfig& cfg = {});

/// sqrt(pi) 2^-(z-tau+1) Gamma(z+1) / Gamma((z-tau)/2 + 1).
Complex closed_form_313(Complex z, Complex tau);

/// <G_H(tau), p> as (1/(sqrt(pi) Gamma(tau+1))) int |x|^tau H_tau(|x|) p(x) e^(-x^2) dx,
/// folded onto the half line. Requires Re tau > -1.
Complex apply_via_quadrature(Complex tau, const Polynomial& p,
                             const QuadratureConfig& cfg = {});

/// Gamma(tau+1) = (2/sqrt(pi)) int_0^inf x^tau H_tau(x) e^(-x^2) dx.
Complex gamma_via_realline(Complex tau, const QuadratureConfig& cfg = {});

/// Largest |Im tau| for which the real-line representations are evaluated.
inline constexpr double kRealLineImagEnvelope = 3.0;

}  // namespace hermitia
