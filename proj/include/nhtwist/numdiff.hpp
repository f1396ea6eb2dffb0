#pragma once

#include <functional>

#include "nhtwist/vec3.hpp"

namespace nhtwist {

// Central finite differences. Steps are scaled per coordinate by
// (1 + |coordinate|) so the same base step works across magnitudes.

inline double central_derivative(const std::function<double(double)>& g,
                                 double at, double h) {
    const double step = h * (1.0 + std::abs(at));
    return (g(at + step) - g(at - step)) / (2.0 * step);
}

inline Vec3 gradient(const std::function<double(const Vec3&)>& g,
                     const Vec3& at, double h) {
    Vec3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        const double step = h * (1.0 + std::abs(at[i]));
        Vec3 plus = at;
        Vec3 minus = at;
        plus[i] += step;
        minus[i] -= step;
        out[i] = (g(plus) - g(minus)) / (2.0 * step);
    }
    return out;
}

/// Curl of a vector field, component by component from central differences
/// of the partials dF_k/dx_j.
inline Vec3 curl(const std::function<Vec3(const Vec3&)>& field,
                 const Vec3& at, double h) {
    double d[3][3];  // d[k][j] = dF_k / dx_j
    for (std::size_t j = 0; j < 3; ++j) {
        const double step = h * (1.0 + std::abs(at[j]));
        Vec3 plus = at;
        Vec3 minus = at;
        plus[j] += step;
        minus[j] -= step;
        const Vec3 fp = field(plus);
        const Vec3 fm = field(minus);
        for (std::size_t k = 0; k < 3; ++k) {
            d[k][j] = (fp[k] - fm[k]) / (2.0 * step);
        }
    }
    return {d[2][1] - d[1][2], d[0][2] - d[2][0], d[1][0] - d[0][1]};
}

}  // namespace nhtwist
