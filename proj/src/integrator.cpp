#include "nhtwist/integrator.hpp"

#include <cmath>

#include "nhtwist/errors.hpp"

namespace nhtwist {
namespace {

CanonicalState advance(const CanonicalState& s, const StateDeriv& d, double dt) {
    return {s.t + dt, s.x + dt * d.xdot, s.p + dt * d.pdot};
}

CanonicalState rk4_step(const Rhs& rhs, const CanonicalState& s, double dt) {
    const StateDeriv k1 = rhs(s);
    const StateDeriv k2 = rhs(advance(s, k1, 0.5 * dt));
    const StateDeriv k3 = rhs(advance(s, k2, 0.5 * dt));
    const StateDeriv k4 = rhs(advance(s, k3, dt));
    CanonicalState out;
    out.t = s.t + dt;
    out.x = s.x + (dt / 6.0) * (k1.xdot + 2.0 * k2.xdot + 2.0 * k3.xdot + k4.xdot);
    out.p = s.p + (dt / 6.0) * (k1.pdot + 2.0 * k2.pdot + 2.0 * k3.pdot + k4.pdot);
    return out;
}

// Step times for a fixed-step run over [t0, t_end]; the final time is hit
// exactly. n_steps counts full steps, the remainder is folded into the last.
struct StepPlan {
    double dt;       // signed
    long n_steps;    // total steps including the (possibly short) last one
    double last_dt;  // signed length of the final step
};

StepPlan plan_steps(double t0, double t_end, double step) {
    const double span = t_end - t0;
    const double dir = span > 0.0 ? 1.0 : -1.0;
    const double dt = dir * step;
    long n_full = static_cast<long>(std::floor(std::abs(span) / step));
    double last = span - static_cast<double>(n_full) * dt;
    // fold a negligible trailing step into the previous one
    if (std::abs(last) < 1e-12 * step && n_full > 0) {
        return {dt, n_full, dt + last};
    }
    return {dt, n_full + 1, last};
}

Trajectory run_fixed(const Rhs& rhs, const CanonicalState& initial,
                     const IntegrationConfig& cfg,
                     const std::vector<Diagnostic>& diagnostics,
                     double step_override) {
    const StepPlan plan = plan_steps(cfg.t0, cfg.t_end, step_override);

    Trajectory traj;
    for (const auto& d : diagnostics) {
        traj.diagnostics.emplace(d.name, std::vector<double>{});
    }
    auto record = [&](const CanonicalState& s) {
        traj.samples.push_back(s);
        for (const auto& d : diagnostics) {
            traj.diagnostics[d.name].push_back(d.fn(s));
        }
    };

    CanonicalState s = initial;
    s.t = cfg.t0;
    if (!s.finite()) {
        throw NumericsError("integrate: initial state is not finite", s.t);
    }
    record(s);
    for (long i = 0; i < plan.n_steps; ++i) {
        const bool last = i == plan.n_steps - 1;
        s = rk4_step(rhs, s, last ? plan.last_dt : plan.dt);
        // pin t to the step grid so roundoff cannot accumulate over long runs
        s.t = last ? cfg.t_end : cfg.t0 + static_cast<double>(i + 1) * plan.dt;
        if (!s.finite()) {
            throw NumericsError("integrate: state became non-finite", s.t);
        }
        if (last || (i + 1) % cfg.record_every == 0) {
            record(s);
        }
    }
    return traj;
}

}  // namespace

void validate(const IntegrationConfig& cfg) {
    if (!(std::isfinite(cfg.t0) && std::isfinite(cfg.t_end)) || cfg.t_end == cfg.t0) {
        throw ConfigError("integration: need finite t0 != t_end");
    }
    if (!(cfg.step > 0.0) || !std::isfinite(cfg.step)) {
        throw ConfigError("integration: step must be positive");
    }
    if (cfg.step > std::abs(cfg.t_end - cfg.t0)) {
        throw ConfigError("integration: step exceeds the integration window");
    }
    if (cfg.record_every < 1) {
        throw ConfigError("integration: record_every must be >= 1");
    }
}

Trajectory integrate(const Rhs& rhs, const CanonicalState& initial,
                     const IntegrationConfig& cfg,
                     const std::vector<Diagnostic>& diagnostics) {
    validate(cfg);
    Trajectory traj = run_fixed(rhs, initial, cfg, diagnostics, cfg.step);
    if (cfg.method == Method::RK4Halved) {
        // The half-step run lands on every base-step boundary, so recorded
        // samples line up one-to-one.
        IntegrationConfig half = cfg;
        half.record_every = 2 * cfg.record_every;
        Trajectory fine = run_fixed(rhs, initial, half, {}, 0.5 * cfg.step);
        std::vector<double> est(traj.size(), 0.0);
        const std::size_t n = std::min(traj.size(), fine.size());
        for (std::size_t i = 0; i < n; ++i) {
            est[i] = norm(traj.samples[i].x - fine.samples[i].x) / 15.0;
        }
        traj.diagnostics["err_est"] = std::move(est);
    }
    return traj;
}

std::optional<double> estimate_order(const Rhs& rhs, const CanonicalState& initial,
                                     double t_end, double base_step) {
    const double t0 = initial.t;
    if (!(std::isfinite(t_end)) || t_end == t0) {
        throw ConfigError("estimate_order: need t_end != initial.t");
    }
    double h = base_step > 0.0 ? base_step : std::abs(t_end - t0) / 25.0;

    auto final_state = [&](double step) {
        IntegrationConfig cfg;
        cfg.t0 = t0;
        cfg.t_end = t_end;
        cfg.step = step;
        cfg.record_every = 1 << 20;  // endpoints only
        return integrate(rhs, initial, cfg).back();
    };

    const CanonicalState ref = final_state(h / 8.0);
    const double scale = 1.0 + norm(ref.x) + norm(ref.p);
    double err[3];
    for (int i = 0; i < 3; ++i) {
        const CanonicalState s = final_state(h / static_cast<double>(1 << i));
        err[i] = std::sqrt(dot(s.x - ref.x, s.x - ref.x) +
                           dot(s.p - ref.p, s.p - ref.p));
        if (err[i] < 1e-13 * scale) return std::nullopt;  // at roundoff, not estimable
    }
    const double r1 = std::log2(err[0] / err[1]);
    const double r2 = std::log2(err[1] / err[2]);
    return 0.5 * (r1 + r2);
}

}  // namespace nhtwist
