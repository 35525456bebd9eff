#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace testing {

using C = std::complex<double>;

inline double rel_err(C got, C want) {
    const double scale = std::abs(want);
    return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got - want);
}

inline bool close(C got, C want, double rel, double abs = 0.0) {
    const double d = std::abs(got - want);
    return d <= abs || d <= rel * std::abs(want);
}

// Fixed-seed sampler so failures reproduce.
class Sampler {
public:
    explicit Sampler(unsigned seed = 20240611u) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    C complex_in_box(double re_lo, double re_hi, double im_lo, double im_hi) {
        return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
