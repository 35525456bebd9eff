#include "hermitia/hermite.hpp"

#include <cmath>

#include "hermitia/errors.hpp"
#include "hermitia/hypergeometric.hpp"
#include "hermitia/summation.hpp"

namespace hermitia {

namespace {

constexpr double kIntegerDegreeWindow = 1e-10;
constexpr double kLn2 = 0.69314718055994530942;

Complex hermite_polynomial(int n, Complex z) {
    Complex prev = 1.0;
    if (n == 0) {
        return prev;
    }
    Complex cur = 2.0 * z;
    for (int k = 1; k < n; ++k) {
        const Complex next = 2.0 * z * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Taylor-steps y'' - 2x y' + 2 tau y = 0 from (x_from, y, dy) down to x_to.
// Inward integration keeps H_tau dominant over the e^(x^2) companion solution.
Complex continue_inward(Complex tau, double x_from, Complex y, Complex dy, double x_to) {
    double x = x_from;
    while (x > x_to) {
        // |2 x h| <= 2 bounds the growth of rounding in the alternating tail by e^2.
        const double h = std::max(x_to - x, -1.0 / x);
        Complex c_prev = y;   // c_k
        Complex c_cur = dy;   // c_{k+1}
        CompensatedSum y_next;
        CompensatedSum dy_next;
        y_next.add(c_prev);
        y_next.add(c_cur * h);
        dy_next.add(c_cur);
        double h_pow = h;  // h^(k+1)
        int quiet = 0;
        for (int k = 0; k < 200; ++k) {
            const double kd = static_cast<double>(k);
            const Complex c_next =
                (2.0 * x * (kd + 1.0) * c_cur + (2.0 * kd - 2.0 * tau) * c_prev) /
                ((kd + 1.0) * (kd + 2.0));
            const Complex dterm = (kd + 2.0) * c_next * h_pow;
            h_pow *= h;
            const Complex term = c_next * h_pow;
            y_next.add(term);
            dy_next.add(dterm);
            c_prev = c_cur;
            c_cur = c_next;
            if (std::abs(term) <= 1e-18 * std::abs(y_next.value()) &&
                std::abs(dterm) <= 1e-18 * std::abs(dy_next.value())) {
                if (++quiet == 2) {
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        y = y_next.value();
        dy = dy_next.value();
        x += h;
    }
    return y;
}

}  // namespace

void HermiteEvalConfig::validate() const {
    if (!(series_tol > 0.0)) {
        throw DomainError("HermiteEvalConfig: series_tol must be positive");
    }
    if (!(asymptotic_threshold >= 8.0)) {
        throw DomainError("HermiteEvalConfig: asymptotic_threshold must be >= 8");
    }
    if (asymptotic_terms < 1 || asymptotic_terms > 30) {
        throw DomainError("HermiteEvalConfig: asymptotic_terms must lie in [1, 30]");
    }
    if (!(continuation_floor >= 1.0) || !(continuation_floor < asymptotic_threshold)) {
        throw DomainError(
            "HermiteEvalConfig: continuation_floor must lie in [1, asymptotic_threshold)");
    }
}

Complex hermite_1f1_form(Complex tau, Complex z) {
    const Complex two_pow = std::exp(tau * kLn2);
    const Complex z2 = z * z;
    const Complex even_weight = reciprocal_gamma((1.0 - tau) / 2.0);
    const Complex odd_weight = reciprocal_gamma(-tau / 2.0);
    Complex value = 0.0;
    if (even_weight != 0.0) {
        value += even_weight * kummer_1f1(-tau / 2.0, 0.5, z2);
    }
    if (odd_weight != 0.0 && z != 0.0) {
        // Gamma(-1/2) = -2 sqrt(pi); the common sqrt(pi) is applied below.
        value -= 2.0 * z * odd_weight * kummer_1f1((1.0 - tau) / 2.0, 1.5, z2);
    }
    return require_finite(two_pow * kSqrtPi * value, "hermite_1f1_form");
}

Complex hermite_series(Complex tau, Complex z, double tol) {
    if (near_nonnegative_integer(tau, kIntegerDegreeWindow)) {
        throw DegenerateDegree("hermite_series: degree is a nonnegative integer");
    }
    // Gamma((m - tau)/2) for even and odd m, advanced by Gamma(s + 1) = s Gamma(s).
    Complex gamma_even = gamma(-tau / 2.0);
    Complex gamma_odd = gamma((1.0 - tau) / 2.0);
    CompensatedSum sum;
    Complex power = 1.0;  // (-2z)^m / m!
    int quiet = 0;
    for (int m = 0; m < 10000; ++m) {
        const Complex g = (m % 2 == 0) ? gamma_even : gamma_odd;
        const Complex term = g * power;
        sum.add(term);
        if (std::abs(term) <= tol * std::abs(sum.value())) {
            if (++quiet == 3) {
                return require_finite(0.5 * reciprocal_gamma(-tau) * sum.value(),
                                      "hermite_series");
            }
        } else {
            quiet = 0;
        }
        if (m % 2 == 0) {
            gamma_even *= (static_cast<double>(m) - tau) / 2.0;
        } else {
            gamma_odd *= (static_cast<double>(m) - tau) / 2.0;
        }
        power *= -2.0 * z / static_cast<double>(m + 1);
    }
    throw NonConvergence("hermite_series: term cap reached");
}

Complex hermite_asymptotic(Complex tau, double x, int n_terms) {
    if (!(x > 0.0)) {
        throw DomainError("hermite_asymptotic: requires x > 0");
    }
    if (n_terms < 0) {
        throw DomainError("hermite_asymptotic: n_terms must be nonnegative");
    }
    // At nonnegative integer degree the series terminates and is exact.
    const bool terminating = tau.imag() == 0.0 && tau.real() >= 0.0 &&
                             tau.real() == std::floor(tau.real());
    const double inv_sq = 1.0 / (4.0 * x * x);
    CompensatedSum sum;
    Complex term = 1.0;
    sum.add(term);
    for (int k = 0; k < n_terms; ++k) {
        const double two_k = 2.0 * k;
        const Complex next = -term * (two_k - tau) * (two_k + 1.0 - tau) * inv_sq /
                             static_cast<double>(k + 1);
        if (next == 0.0 || (!terminating && std::abs(next) >= std::abs(term))) {
            break;
        }
        sum.add(next);
        term = next;
    }
    return require_finite(std::exp(tau * std::log(2.0 * x)) * sum.value(),
                          "hermite_asymptotic");
}

Complex hermite(Complex tau, Complex z, const HermiteEvalConfig& cfg) {
    if (near_nonnegative_integer(tau, kIntegerDegreeWindow)) {
        const int n = static_cast<int>(std::round(tau.real()));
        if (z.imag() == 0.0 && z.real() < 0.0) {
            const Complex h = hermite_polynomial(n, -z);
            return n % 2 == 0 ? h : -h;
        }
        return require_finite(hermite_polynomial(n, z), "hermite");
    }
    if (z.imag() == 0.0 && z.real() > 0.0) {
        const double x = z.real();
        if (x >= cfg.asymptotic_threshold) {
            return hermite_asymptotic(tau, x, cfg.asymptotic_terms);
        }
        if (x >= cfg.continuation_floor) {
            const double x0 = cfg.asymptotic_threshold;
            const Complex y = hermite_asymptotic(tau, x0, cfg.asymptotic_terms);
            const Complex dy =
                2.0 * tau * hermite_asymptotic(tau - 1.0, x0, cfg.asymptotic_terms);
            return require_finite(continue_inward(tau, x0, y, dy, x), "hermite");
        }
    }
    return hermite_1f1_form(tau, z);
}

Complex hermite_derivative(Complex tau, Complex z, const HermiteEvalConfig& cfg) {
    if (tau == 0.0) {
        return 0.0;
    }
    return 2.0 * tau * hermite(tau - 1.0, z, cfg);
}

}  // namespace hermitia
