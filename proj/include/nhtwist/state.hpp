#pragma once

#include "nhtwist/vec3.hpp"

namespace nhtwist {

/// Point of the canonical phase space extended by time: (t, x_i, p_i).
struct CanonicalState {
    double t = 0.0;
    Vec3 x;
    Vec3 p;

    bool finite() const noexcept {
        return std::isfinite(t) && x.finite() && p.finite();
    }
};

/// Time derivative of a CanonicalState (dt/dt = 1 is implicit).
struct StateDeriv {
    Vec3 xdot;
    Vec3 pdot;
};

}  // namespace nhtwist
