#pragma once

#include "hermitia/scalar.hpp"

namespace hermitia {

/// Evaluation controls for the Hermite function H_tau(z).
struct HermiteEvalConfig {
    double series_tol = 1e-15;
    /// Real arguments at or beyond this use the asymptotic expansion.
    double asymptotic_threshold = 12.0;
    /// Truncation index n of the asymptotic expansion.
    int asymptotic_terms = 10;
    /// Real arguments in [continuation_floor, asymptotic_threshold) are reached
    /// by integrating the Hermite ODE inward from the asymptotic region; the
    /// hypergeometric form loses about e^(x^2) ulps to cancellation there.
    double continuation_floor = 2.5;

    /// Throws DomainError if any field is out of range.
    void validate() const;
};

/// H_tau(z) through Kummer functions:
///   2^tau sqrt(pi) / Gamma((1-tau)/2) 1F1(-tau/2; 1/2; z^2)
///   + 2^tau z Gamma(-1/2) / Gamma(-tau/2) 1F1((1-tau)/2; 3/2; z^2).
/// Accurate to about eps * e^(Re z^2) relative.
Complex hermite_1f1_form(Complex tau, Complex z);

/// H_tau(z) by its power series in z. Undefined at nonnegative integer degree
/// (throws DegenerateDegree within 1e-10 of one).
Complex hermite_series(Complex tau, Complex z, double tol = 1e-16);

/// Large-x expansion (2x)^tau sum_{k<=n} (-1)^k (-tau)_{2k} (2x)^{-2k} / k!,
/// cut at the smallest term. Requires x > 0.
Complex hermite_asymptotic(Complex tau, double x, int n_terms);

/// H_tau(z) for any complex degree and argument.
Complex hermite(Complex tau, Complex z, const HermiteEvalConfig& cfg = {});

/// d/dz H_tau(z) = 2 tau H_{tau-1}(z).
Complex hermite_derivative(Complex tau, Complex z, const HermiteEvalConfig& cfg = {});

}  // namespace hermitia
