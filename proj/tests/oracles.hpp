// Test-only oracles, independent of the library's evaluation paths:
// quadrature and finite differences used to pin expected values.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "nhtwist/state.hpp"

namespace oracles {

using Fn = std::function<double(double)>;

inline double simpson(const Fn& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

inline double adaptive_simpson_rec(const Fn& f, double a, double b, double whole,
                                   double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = simpson(f, a, m);
    const double right = simpson(f, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, m, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson quadrature of f over [a, b].
inline double integrate(const Fn& f, double a, double b, double tol = 1e-12) {
    if (a == b) return 0.0;
    return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, 40);
}

/// Central difference with fixed step (no scaling; the caller picks h).
inline double fd_derivative(const Fn& f, double t, double h = 1e-5) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

/// Second derivative from the 5-point stencil on uniformly spaced samples
/// y[i-2..i+2] with spacing h.
inline double fd_second_derivative(const double* y, double h) {
    return (-y[0] + 16.0 * y[1] - 30.0 * y[2] + 16.0 * y[3] - y[4]) /
           (12.0 * h * h);
}

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline nhtwist::Vec3 random_vec(Rng& rng, double lo, double hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline nhtwist::CanonicalState random_state(Rng& rng, double t_lo, double t_hi) {
    return {uniform(rng, t_lo, t_hi), random_vec(rng, -2.0, 2.0),
            random_vec(rng, -2.0, 2.0)};
}

}  // namespace oracles
