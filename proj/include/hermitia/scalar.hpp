#pragma once

#include <complex>
#include <numbers>

namespace hermitia {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;

/// Distance below which an argument counts as sitting on a Gamma pole.
inline constexpr double kPoleWindow = 1e-12;

/// True when z lies within `window` of {0, -1, -2, ...}.
bool near_nonpositive_integer(Complex z, double window = kPoleWindow);

/// True when z lies within `window` of {0, 1, 2, ...}.
bool near_nonnegative_integer(Complex z, double window);

/// sin(pi z) with argument reduction, accurate near the integers.
Complex sin_pi(Complex z);

/// Euler Gamma. Lanczos (g = 7, 9 terms) for Re z >= 1/2, reflection otherwise.
/// Throws PoleError at nonpositive integers and RangeError on overflow.
Complex gamma(Complex z);

/// 1/Gamma(z); an entire function, exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

// Real overloads. They also make an unqualified gamma(double) ambiguous under
// `using namespace hermitia` instead of silently binding glibc's ::gamma (= lgamma).
inline Complex gamma(double x) { return gamma(Complex(x)); }
inline Complex reciprocal_gamma(double x) { return reciprocal_gamma(Complex(x)); }

/// Rising factorial (a)_n.
Complex pochhammer(Complex a, unsigned n);

/// n! as a double.
double factorial(unsigned n);

/// Throws RangeError if either component is NaN or infinite.
Complex require_finite(Complex v, const char* what);

}  // namespace hermitia
