#pragma once

#include <functional>
#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "hermitia/scalar.hpp"

namespace hermitia {

/// Polynomial with complex coefficients in the monomial basis; coeffs()[n]
/// multiplies x^n. Canonical form drops trailing zeros; the zero polynomial
/// is stored as {0}.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs)
        : Polynomial(std::vector<Complex>(coeffs)) {}

    static Polynomial monomial(unsigned n);

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    Complex operator()(Complex x) const;

    /// p(x) + p(-x).
    Polynomial even_part_doubled() const;

private:
    std::vector<Complex> coeffs_;
};

/// The generalized Hermite moment functional of index tau:
/// moment(2k) = (tau+1)_{2k} / (k! 4^k), odd moments vanish.
///
/// Moments are cached; concurrent readers are safe and the cache only grows.
class GeneralizedHermiteFunctional {
public:
    /// Throws DomainError when tau is within 1e-10 of a negative integer.
    explicit GeneralizedHermiteFunctional(Complex tau);

    GeneralizedHermiteFunctional(const GeneralizedHermiteFunctional& other);
    GeneralizedHermiteFunctional& operator=(const GeneralizedHermiteFunctional& other);

    Complex tau() const { return tau_; }

    Complex moment(unsigned n) const;

    /// <G_H(tau), p>.
    Complex apply(const Polynomial& p) const;

private:
    Complex tau_;
    mutable std::shared_mutex mutex_;
    mutable std::vector<Complex> even_moments_;  // index k holds moment(2k)
};

/// (tau+1)_n / n! times the n-th moment of the classical Hermite functional.
Complex moment_via_relation(Complex tau, unsigned n);

/// n-th moment of the functional
///   (x^2 G)'' + (2x(x^2 - tau - 2) G)' + (-4x^2 + (tau+1)(tau+2)) G,
/// i.e. -2(n+2) m_{n+2} + (n+tau+2)(n+tau+1) m_n. Vanishes identically.
Complex second_order_residual(Complex tau, unsigned n);

/// n-th moment of G_H' + 2x G_H for the classical functional (tau = 0).
Complex first_order_residual_hermite(unsigned n);

/// Even/odd split of a weight L on the real line: L(x) = U(|x|) + x V(|x|).
struct SymmetricSplit {
    std::function<double(double)> even;  // U
    std::function<double(double)> odd;   // V, with V(0) = 0
};

SymmetricSplit symmetrize(std::function<double(double)> weight);

}  // namespace hermitia
