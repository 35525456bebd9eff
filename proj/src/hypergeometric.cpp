#include "hermitia/hypergeometric.hpp"

#include <cmath>

#include "hermitia/errors.hpp"
#include "hermitia/summation.hpp"

namespace hermitia {

Complex kummer_1f1(Complex a, Complex b, Complex z, SeriesControl control) {
    CompensatedSum sum;
    Complex term = 1.0;
    sum.add(term);
    int quiet = 0;
    for (int k = 0; k < control.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const Complex numer = (a + kd) * z;
        if (numer == 0.0) {
            return require_finite(sum.value(), "kummer_1f1");
        }
        const Complex denom_b = b + kd;
        if (std::abs(denom_b) < kPoleWindow) {
            throw ParameterPole("kummer_1f1: lower parameter b is a nonpositive integer");
        }
        term *= numer / (denom_b * (kd + 1.0));
        sum.add(term);
        if (std::abs(term) <= control.tol * std::abs(sum.value())) {
            if (++quiet == 3) {
                return require_finite(sum.value(), "kummer_1f1");
            }
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("kummer_1f1: term cap reached");
}

namespace {

// 2F1(a, b; c; w) by its power series: |w| < 1, or w = 1 when the series terminates.
Complex gauss_2f1_series(Complex a, Complex b, Complex c, Complex w) {
    CompensatedSum sum;
    Complex term = 1.0;
    sum.add(term);
    int quiet = 0;
    for (int k = 0; k < 100000; ++k) {
        const double kd = static_cast<double>(k);
        const Complex numer = (a + kd) * (b + kd) * w;
        if (numer == 0.0) {
            return sum.value();
        }
        if (std::abs(c + kd) < kPoleWindow) {
            throw ParameterPole("2F1 series: lower parameter is a nonpositive integer");
        }
        term *= numer / ((c + kd) * (kd + 1.0));
        sum.add(term);
        if (std::abs(term) <= 1e-16 * std::abs(sum.value())) {
            if (++quiet == 3) {
                return sum.value();
            }
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("2F1 series: term cap reached");
}

}  // namespace

Complex gauss_2f1_at_unit(Complex a, Complex b, Complex c) {
    const Complex excess = c - a - b;
    if (!(excess.real() > 0.0)) {
        throw DomainError("gauss_2f1_at_unit: requires Re(c - a - b) > 0");
    }
    // A terminating series is summed exactly rather than through Gamma values.
    for (const Complex p : {a, b}) {
        if (p.imag() == 0.0 && p.real() <= 0.0 && p.real() >= -1000.0 &&
            p.real() == std::floor(p.real())) {
            return require_finite(gauss_2f1_series(a, b, c, 1.0), "gauss_2f1_at_unit");
        }
    }
    return require_finite(
        gamma(c) * gamma(excess) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b),
        "gauss_2f1_at_unit");
}

Complex laplace_1f1(Complex a1, Complex b1, Complex alpha, Complex s) {
    if (!(alpha.real() > 0.0) || !(s.real() > 0.0)) {
        throw DomainError("laplace_1f1: requires Re(alpha) > 0 and Re(s) > 0");
    }
    const Complex prefactor = gamma(alpha) * std::exp(-alpha * std::log(s));
    Complex hyper;
    if (s == 1.0) {
        hyper = a1 == 0.0 ? Complex(1.0) : gauss_2f1_at_unit(a1, alpha, b1);
    } else if (std::abs(s) > 1.0) {
        hyper = gauss_2f1_series(a1, alpha, b1, 1.0 / s);
    } else {
        throw DomainError("laplace_1f1: 2F1 at 1/s needs |s| > 1 or s = 1");
    }
    return require_finite(prefactor * hyper, "laplace_1f1");
}

}  // namespace hermitia
