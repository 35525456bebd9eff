#pragma once

#include "hermitia/scalar.hpp"

namespace hermitia {

struct SeriesControl {
    double tol = 1e-16;
    int max_terms = 10000;
};

/// Kummer's confluent series 1F1(a; b; z), summed until three consecutive
/// terms fall below tol * |partial sum|.
/// Throws ParameterPole when b + k hits zero before the series terminates and
/// NonConvergence when the term cap is reached.
Complex kummer_1f1(Complex a, Complex b, Complex z, SeriesControl control = {});

/// Gauss's value 2F1(a, b; c; 1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
/// Requires Re(c - a - b) > 0.
Complex gauss_2f1_at_unit(Complex a, Complex b, Complex c);

/// Closed form of the Laplace transform
///   int_0^inf t^(alpha-1) 1F1(a1; b1; t) e^(-s t) dt
///     = Gamma(alpha) s^(-alpha) 2F1(a1, alpha; b1; 1/s).
/// At s = 1 the 2F1 factor is Gauss's value; for |s| > 1 it is summed directly.
Complex laplace_1f1(Complex a1, Complex b1, Complex alpha, Complex s);

}  // namespace hermitia
