#include "nhtwist/oscillator.hpp"

#include <cmath>

#include "nhtwist/errors.hpp"
#include "nhtwist/numdiff.hpp"

namespace nhtwist::oscillator {

void validate(const Params& params) {
    if (!(std::isfinite(params.m) && params.m > 0.0)) {
        throw ConfigError("oscillator: mass must be positive");
    }
    if (!(std::isfinite(params.omega) && params.omega > 0.0)) {
        throw ConfigError("oscillator: omega must be positive");
    }
}

double effective_mass(double t, const Params& params, const DeformationSpec& spec) {
    validate(params);
    const double f = eval_f(spec, t);
    const double mw = params.m * params.omega;
    return params.m / (1.0 + 0.25 * mw * mw * f * f);
}

double angular_momentum_z(const CanonicalState& state) {
    return state.x.x * state.p.y - state.x.y * state.p.x;
}

double hamiltonian(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec) {
    const double M = effective_mass(state.t, params, spec);
    const double f = eval_f(spec, state.t);
    const double m = params.m;
    const double w2 = params.omega * params.omega;
    const Vec3& x = state.x;
    const Vec3& p = state.p;
    return (p.x * p.x + p.y * p.y) / (2.0 * M) +
           0.5 * m * w2 * (x.x * x.x + x.y * x.y) -
           0.5 * f * m * w2 * angular_momentum_z(state) +
           p.z * p.z / (2.0 * m) + 0.5 * m * w2 * x.z * x.z;
}

StateDeriv eom_rhs(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec) {
    const double M = effective_mass(state.t, params, spec);
    const double f = eval_f(spec, state.t);
    const double m = params.m;
    const double w2 = params.omega * params.omega;
    const double g = 0.5 * f * m * w2;  // strength of the L3 coupling
    const Vec3& x = state.x;
    const Vec3& p = state.p;
    StateDeriv d;
    d.xdot = {p.x / M + g * x.y, p.y / M - g * x.x, p.z / m};
    d.pdot = {-m * w2 * x.x + g * p.y, -m * w2 * x.y - g * p.x, -m * w2 * x.z};
    return d;
}

Vec3 velocity(const CanonicalState& state, const Params& params,
              const DeformationSpec& spec) {
    return eom_rhs(state, params, spec).xdot;
}

Vec3 initial_momentum(const InitialData& init, const Params& params,
                      const DeformationSpec& spec, double t0) {
    const double M = effective_mass(t0, params, spec);
    const double f = eval_f(spec, t0);
    const double g = 0.5 * f * params.m * params.omega * params.omega;
    return {M * (init.v0.x - g * init.x0.y),
            M * (init.v0.y + g * init.x0.x),
            params.m * init.v0.z};
}

CanonicalState initial_state(const InitialData& init, const Params& params,
                             const DeformationSpec& spec, double t0) {
    return {t0, init.x0, initial_momentum(init, params, spec, t0)};
}

Vec3 newton_force(const Vec3& x, const Vec3& xdot, double t,
                  const Params& params, const DeformationSpec& spec) {
    const double M = effective_mass(t, params, spec);
    const double f = eval_f(spec, t);
    const double fdot = eval_f_dot(spec, t);
    const double m = params.m;
    const double w2 = params.omega * params.omega;
    const double m2w2 = m * m * w2;
    const double shear = 0.5 * m * w2 * M * f * f;  // m w^2 M_f f^2 / 2
    return {0.5 * m2w2 * f * (fdot * M * xdot.x + 2.0 * xdot.y) +
                0.5 * m2w2 * fdot * (1.0 - shear) * x.y - m * w2 * x.x,
            0.5 * m2w2 * f * (fdot * M * xdot.y - 2.0 * xdot.x) +
                0.5 * m2w2 * fdot * (shear - 1.0) * x.x - m * w2 * x.y,
            -m * w2 * x.z};
}

Vec3 curl_newton_force(double t, const Params& params, const DeformationSpec& spec) {
    const double M = effective_mass(t, params, spec);
    const double f = eval_f(spec, t);
    const double fdot = eval_f_dot(spec, t);
    const double m = params.m;
    const double w2 = params.omega * params.omega;
    return {0.0, 0.0, m * m * w2 * fdot * (0.5 * m * w2 * M * f * f - 1.0)};
}

Vec3 curl_newton_force_fd(const Vec3& x, const Vec3& xdot, double t,
                          const Params& params, const DeformationSpec& spec,
                          double h) {
    if (!(h > 0.0)) throw ConfigError("curl_newton_force_fd: step must be positive");
    return curl(
        [&](const Vec3& at) { return newton_force(at, xdot, t, params, spec); },
        x, h);
}

bool is_conservative(const DeformationSpec& spec) {
    validate(spec);
    return spec.kappa == 0.0 ||
           (spec.family == Family::K1 && spec.variant == Variant::GalileanLimit);
}

}  // namespace nhtwist::oscillator
