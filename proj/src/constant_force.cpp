#include "nhtwist/constant_force.hpp"

#include <cmath>

#include "nhtwist/errors.hpp"
#include "nhtwist/numdiff.hpp"

namespace nhtwist::constant_force {

void validate(const Params& params) {
    if (!(std::isfinite(params.m) && params.m > 0.0)) {
        throw ConfigError("constant_force: mass must be positive");
    }
    if (!params.force.finite()) {
        throw ConfigError("constant_force: force must be finite");
    }
}

double hamiltonian(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec) {
    validate(params);
    const double f = eval_f(spec, state.t);
    const Vec3& F = params.force;
    return dot(state.p, state.p) / (2.0 * params.m) - dot(F, state.x) +
           0.5 * f * (F.x * state.p.y - F.y * state.p.x);
}

StateDeriv eom_rhs(const CanonicalState& state, const Params& params,
                   const DeformationSpec& spec) {
    validate(params);
    const double f = eval_f(spec, state.t);
    const Vec3& F = params.force;
    StateDeriv d;
    d.xdot = {state.p.x / params.m - 0.5 * f * F.y,
              state.p.y / params.m + 0.5 * f * F.x,
              state.p.z / params.m};
    d.pdot = F;
    return d;
}

Vec3 newton_force(double t, const Params& params, const DeformationSpec& spec) {
    validate(params);
    const double fdot = eval_f_dot(spec, t);
    const Vec3& F = params.force;
    return {F.x - 0.5 * params.m * fdot * F.y,
            F.y + 0.5 * params.m * fdot * F.x,
            F.z};
}

Vec3 curl_newton_force_fd(double t, const Params& params,
                          const DeformationSpec& spec, const Vec3& at, double h) {
    if (!(h > 0.0)) throw ConfigError("curl_newton_force_fd: step must be positive");
    return curl([&](const Vec3&) { return newton_force(t, params, spec); }, at, h);
}

Vec3 analytic_position(double t, const Params& params,
                       const DeformationSpec& spec, const InitialData& init) {
    validate(params);
    const Vec3& F = params.force;
    const double half_t2_over_m = 0.5 * t * t / params.m;
    // integral of f corrected so that the deformation terms vanish at t=0
    // together with their first derivative (v0 is xdot(0))
    const double intf = eval_f_antiderivative(spec, t) - eval_f(spec, 0.0) * t;
    return {init.x0.x + init.v0.x * t + F.x * half_t2_over_m - 0.5 * F.y * intf,
            init.x0.y + init.v0.y * t + F.y * half_t2_over_m + 0.5 * F.x * intf,
            init.x0.z + init.v0.z * t + F.z * half_t2_over_m};
}

double potential(const Vec3& x, double t, const Params& params,
                 const DeformationSpec& spec) {
    validate(params);
    const double fdot = eval_f_dot(spec, t);
    const Vec3& F = params.force;
    return -dot(F, x) - 0.5 * params.m * fdot * (F.x * x.y - F.y * x.x);
}

Vec3 initial_momentum(const InitialData& init, const Params& params,
                      const DeformationSpec& spec, double t0) {
    validate(params);
    const double f = eval_f(spec, t0);
    const Vec3& F = params.force;
    return {params.m * (init.v0.x + 0.5 * f * F.y),
            params.m * (init.v0.y - 0.5 * f * F.x),
            params.m * init.v0.z};
}

CanonicalState initial_state(const InitialData& init, const Params& params,
                             const DeformationSpec& spec, double t0) {
    return {t0, init.x0, initial_momentum(init, params, spec, t0)};
}

}  // namespace nhtwist::constant_force
