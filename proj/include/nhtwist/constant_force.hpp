#pragma once

#include "nhtwist/deformation.hpp"
#include "nhtwist/state.hpp"

namespace nhtwist {

/// Initial position and velocity. Velocity means xdot(t0), not p/m; the
/// matching momentum follows from the equations of motion.
struct InitialData {
    Vec3 x0;
    Vec3 v0;
};

namespace constant_force {

/// Nonrelativistic particle of mass m in a constant external force.
struct Params {
    double m = 1.0;
    Vec3 force;
};

void validate(const Params& params);

/// H = p^2/2m - F.x + F_1 f(t) p_2/2 - F_2 f(t) p_1/2.
double hamiltonian(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec);

/// Canonical equations:
///   xdot_1 = p_1/m - f(t) F_2/2,  xdot_2 = p_2/m + f(t) F_1/2,
///   xdot_3 = p_3/m,               pdot_i = F_i.
StateDeriv eom_rhs(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec);

/// Total force in the Newton equation m xddot = G(t):
///   G_1 = F_1 - m fdot F_2/2,  G_2 = F_2 + m fdot F_1/2,  G_3 = F_3.
/// Position-independent by construction.
Vec3 newton_force(double t, const Params& params, const DeformationSpec& spec);

/// Finite-difference curl of newton_force with respect to x at the given
/// point. Zero up to FD noise for every deformation.
Vec3 curl_newton_force_fd(double t, const Params& params,
                          const DeformationSpec& spec, const Vec3& at, double h);

/// Closed-form position for motion started at t = 0 from init:
///   x_1(t) = x0_1 + v0_1 t + F_1 t^2/2m - (F_2/2) (I(t) - f(0) t)
///   x_2(t) = x0_2 + v0_2 t + F_2 t^2/2m + (F_1/2) (I(t) - f(0) t)
///   x_3(t) = x0_3 + v0_3 t + F_3 t^2/2m
/// with I(t) the antiderivative of f. The f(0) t terms come from the
/// convention that v0 is the initial velocity xdot(0); they vanish for every
/// family except K1.
Vec3 analytic_position(double t, const Params& params,
                       const DeformationSpec& spec, const InitialData& init);

/// Nonstationary potential with -grad V = newton_force:
///   V = -F.x - (m fdot/2)(F_1 x_2 - F_2 x_1).
double potential(const Vec3& x, double t, const Params& params,
                 const DeformationSpec& spec);

/// Momentum matching xdot(t0) = v0:
///   p_1 = m (v0_1 + f(t0) F_2/2),  p_2 = m (v0_2 - f(t0) F_1/2),  p_3 = m v0_3.
Vec3 initial_momentum(const InitialData& init, const Params& params,
                      const DeformationSpec& spec, double t0 = 0.0);

/// State at t0 with position x0 and momentum set so that xdot(t0) = v0.
CanonicalState initial_state(const InitialData& init, const Params& params,
                             const DeformationSpec& spec, double t0 = 0.0);

}  // namespace constant_force
}  // namespace nhtwist
