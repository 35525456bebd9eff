#include "hermitia/functional.hpp"

#include <cmath>
#include <utility>

#include "hermitia/errors.hpp"
#include "hermitia/summation.hpp"

namespace hermitia {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
}

Polynomial Polynomial::monomial(unsigned n) {
    std::vector<Complex> c(n + 1, 0.0);
    c[n] = 1.0;
    return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex x) const {
    Complex acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::even_part_doubled() const {
    std::vector<Complex> c(coeffs_.size(), 0.0);
    for (std::size_t n = 0; n < coeffs_.size(); n += 2) {
        c[n] = 2.0 * coeffs_[n];
    }
    return Polynomial(std::move(c));
}

GeneralizedHermiteFunctional::GeneralizedHermiteFunctional(Complex tau)
    : tau_(tau), even_moments_{1.0} {
    if (tau.real() < -0.5 && near_nonpositive_integer(tau, 1e-10)) {
        throw DomainError("GeneralizedHermiteFunctional: tau must not be a negative integer");
    }
}

GeneralizedHermiteFunctional::GeneralizedHermiteFunctional(
    const GeneralizedHermiteFunctional& other)
    : tau_(other.tau_) {
    std::shared_lock lock(other.mutex_);
    even_moments_ = other.even_moments_;
}

GeneralizedHermiteFunctional& GeneralizedHermiteFunctional::operator=(
    const GeneralizedHermiteFunctional& other) {
    if (this != &other) {
        std::vector<Complex> copy;
        {
            std::shared_lock lock(other.mutex_);
            copy = other.even_moments_;
        }
        std::unique_lock lock(mutex_);
        tau_ = other.tau_;
        even_moments_ = std::move(copy);
    }
    return *this;
}

Complex GeneralizedHermiteFunctional::moment(unsigned n) const {
    if (n % 2 == 1) {
        return 0.0;
    }
    const std::size_t k = n / 2;
    {
        std::shared_lock lock(mutex_);
        if (k < even_moments_.size()) {
            return even_moments_[k];
        }
    }
    std::unique_lock lock(mutex_);
    // m_{2j+2} = m_{2j} (tau + 2j + 1)(tau + 2j + 2) / (4 (j + 1))
    while (even_moments_.size() <= k) {
        const double j = static_cast<double>(even_moments_.size() - 1);
        const Complex next = even_moments_.back() * (tau_ + 2.0 * j + 1.0) *
                             (tau_ + 2.0 * j + 2.0) / (4.0 * (j + 1.0));
        even_moments_.push_back(next);
    }
    return even_moments_[k];
}

Complex GeneralizedHermiteFunctional::apply(const Polynomial& p) const {
    CompensatedSum sum;
    const auto& c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); n += 2) {
        if (c[n] != 0.0) {
            sum.add(c[n] * moment(static_cast<unsigned>(n)));
        }
    }
    return sum.value();
}

Complex moment_via_relation(Complex tau, unsigned n) {
    if (n % 2 == 1) {
        return 0.0;
    }
    const unsigned k = n / 2;
    // Classical Hermite moment: (2k)! / (k! 4^k).
    const double classical = factorial(2 * k) / (factorial(k) * std::ldexp(1.0, 2 * static_cast<int>(k)));
    return pochhammer(tau + 1.0, n) / factorial(n) * classical;
}

Complex second_order_residual(Complex tau, unsigned n) {
    const GeneralizedHermiteFunctional g(tau);
    const double nd = static_cast<double>(n);
    return -2.0 * (nd + 2.0) * g.moment(n + 2) +
           (nd + tau + 2.0) * (nd + tau + 1.0) * g.moment(n);
}

Complex first_order_residual_hermite(unsigned n) {
    const GeneralizedHermiteFunctional g(0.0);
    const Complex derivative_part = n == 0 ? Complex(0.0) : -static_cast<double>(n) * g.moment(n - 1);
    return derivative_part + 2.0 * g.moment(n + 1);
}

SymmetricSplit symmetrize(std::function<double(double)> weight) {
    SymmetricSplit split;
    split.even = [weight](double x) { return 0.5 * (weight(x) + weight(-x)); };
    split.odd = [weight](double x) {
        if (x == 0.0) {
            return 0.0;
        }
        return (weight(x) - weight(-x)) / (2.0 * x);
    };
    return split;
}

}  // namespace hermitia
