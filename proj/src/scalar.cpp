#include "hermitia/scalar.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hermitia/errors.hpp"

namespace hermitia {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

// Requires Re z >= 1/2.
Complex lanczos_gamma(Complex z) {
    z -= 1.0;
    Complex series = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + kLanczosG + 0.5;
    return std::exp(kLogSqrtTwoPi + (z + 0.5) * std::log(t) - t) * series;
}

}  // namespace

bool near_nonpositive_integer(Complex z, double window) {
    if (z.real() > window) {
        return false;
    }
    const double nearest = std::round(z.real());
    return nearest <= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= window;
}

bool near_nonnegative_integer(Complex z, double window) {
    if (z.real() < -window) {
        return false;
    }
    const double nearest = std::round(z.real());
    return nearest >= 0.0 && std::abs(z - Complex(nearest, 0.0)) <= window;
}

Complex sin_pi(Complex z) {
    // sin(pi(x + iy)) with x reduced to [-1/2, 1/2] around the nearest integer k.
    const double k = std::round(z.real());
    const double x = z.real() - k;
    const double y = z.imag();
    const double sign = std::fmod(k, 2.0) == 0.0 ? 1.0 : -1.0;
    return sign * Complex(std::sin(kPi * x) * std::cosh(kPi * y),
                          std::cos(kPi * x) * std::sinh(kPi * y));
}

Complex require_finite(Complex v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw RangeError(std::string(what) + ": non-finite result");
    }
    return v;
}

Complex gamma(Complex z) {
    if (near_nonpositive_integer(z)) {
        throw PoleError("gamma: pole at z = " + std::to_string(z.real()));
    }
    if (z.real() < 0.5) {
        return require_finite(kPi / (sin_pi(z) * lanczos_gamma(1.0 - z)), "gamma");
    }
    return require_finite(lanczos_gamma(z), "gamma");
}

Complex reciprocal_gamma(Complex z) {
    if (near_nonpositive_integer(z)) {
        return 0.0;
    }
    if (z.real() < 0.5) {
        return require_finite(sin_pi(z) * lanczos_gamma(1.0 - z) / kPi,
                              "reciprocal_gamma");
    }
    return require_finite(1.0 / lanczos_gamma(z), "reciprocal_gamma");
}

Complex pochhammer(Complex a, unsigned n) {
    auto product = [&] {
        Complex acc = 1.0;
        for (unsigned k = 0; k < n; ++k) {
            acc *= a + static_cast<double>(k);
        }
        return acc;
    };
    if (n <= 64 || near_nonpositive_integer(a, 0.05)) {
        return require_finite(product(), "pochhammer");
    }
    // A pole of Gamma(a + n) cannot occur once a is away from the nonpositive
    // integers, but the ratio may still overflow.
    try {
        const Complex ratio = gamma(a + static_cast<double>(n)) * reciprocal_gamma(a);
        if (std::isfinite(ratio.real()) && std::isfinite(ratio.imag())) {
            return ratio;
        }
    } catch (const Error&) {
    }
    return require_finite(product(), "pochhammer");
}

double factorial(unsigned n) {
    double acc = 1.0;
    for (unsigned k = 2; k <= n; ++k) {
        acc *= static_cast<double>(k);
    }
    return acc;
}

}  // namespace hermitia
