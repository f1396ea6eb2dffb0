#pragma once

#include "nhtwist/constant_force.hpp"  // InitialData
#include "nhtwist/deformation.hpp"
#include "nhtwist/state.hpp"

namespace nhtwist::oscillator {

/// Isotropic harmonic oscillator of mass m and frequency omega.
struct Params {
    double m = 1.0;
    double omega = 1.0;
};

void validate(const Params& params);

/// M_f(t) = m / (1 + m^2 omega^2 f^2(t) / 4). Lies in (0, m], with equality
/// exactly when f(t) = 0.
double effective_mass(double t, const Params& params, const DeformationSpec& spec);

/// L_3 = x_1 p_2 - x_2 p_1.
double angular_momentum_z(const CanonicalState& state);

/// Transformed oscillator Hamiltonian on canonical phase space:
///   H_f = (p_1^2 + p_2^2)/2M_f + m omega^2 (x_1^2 + x_2^2)/2
///         - f(t) m omega^2 L_3 / 2 + p_3^2/2m + m omega^2 x_3^2/2.
/// The angular-momentum coupling carries a minus sign: this is what the
/// representation map produces, and it is the convention under which the
/// Newton force and curl formulas below hold.
double hamiltonian(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec);

/// Canonical equations of H_f:
///   xdot_1 = p_1/M_f + f m omega^2 x_2/2,  pdot_1 = -m omega^2 x_1 + f m omega^2 p_2/2,
///   xdot_2 = p_2/M_f - f m omega^2 x_1/2,  pdot_2 = -m omega^2 x_2 - f m omega^2 p_1/2,
///   xdot_3 = p_3/m,                        pdot_3 = -m omega^2 x_3.
StateDeriv eom_rhs(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec);

/// xdot as a function of the state (eliminates momenta).
Vec3 velocity(const CanonicalState& state, const Params& params,
              const DeformationSpec& spec);

/// Momentum such that xdot(t0) = v0 at position x0.
Vec3 initial_momentum(const InitialData& init, const Params& params,
                      const DeformationSpec& spec, double t0 = 0.0);

CanonicalState initial_state(const InitialData& init, const Params& params,
                             const DeformationSpec& spec, double t0 = 0.0);

/// Total force in the Newton equation m xddot = H(x, xdot, t):
///   H_1 = (m^2 w^2 f/2)(fdot M_f xdot_1 + 2 xdot_2)
///         + (m^2 w^2 fdot/2)(1 - m w^2 M_f f^2/2) x_2 - m w^2 x_1,
///   H_2 = (m^2 w^2 f/2)(fdot M_f xdot_2 - 2 xdot_1)
///         + (m^2 w^2 fdot/2)(m w^2 M_f f^2/2 - 1) x_1 - m w^2 x_2,
///   H_3 = -m w^2 x_3.
/// Velocity-dependent; linear in x at frozen (xdot, t).
Vec3 newton_force(const Vec3& x, const Vec3& xdot, double t,
                  const Params& params, const DeformationSpec& spec);

/// Closed-form curl of newton_force with respect to x at frozen (xdot, t):
///   e_3 * m^2 w^2 fdot(t) [m w^2 M_f(t) f^2(t)/2 - 1].
Vec3 curl_newton_force(double t, const Params& params, const DeformationSpec& spec);

/// Finite-difference counterpart of curl_newton_force.
Vec3 curl_newton_force_fd(const Vec3& x, const Vec3& xdot, double t,
                          const Params& params, const DeformationSpec& spec,
                          double h);

/// True iff the deformation-generated force term stays conservative, i.e.
/// fdot vanishes identically: kappa = 0, or family K1 in the Galilean limit.
/// Decided structurally, not by sampling.
bool is_conservative(const DeformationSpec& spec);

}  // namespace nhtwist::oscillator
