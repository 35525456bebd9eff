#pragma once

#include <cmath>
#include <complex>

namespace hermitia {

/// Neumaier-compensated running sum of complex terms, component-wise.
class CompensatedSum {
public:
    void add(std::complex<double> term) {
        re_.add(term.real());
        im_.add(term.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    struct Lane {
        double sum = 0.0;
        double carry = 0.0;
        void add(double x) {
            const double t = sum + x;
            if (std::abs(sum) >= std::abs(x)) {
                carry += (sum - t) + x;
            } else {
                carry += (x - t) + sum;
            }
            sum = t;
        }
        double value() const { return sum + carry; }
    };
    Lane re_;
    Lane im_;
};

}  // namespace hermitia
