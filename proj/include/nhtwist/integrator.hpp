#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nhtwist/state.hpp"

namespace nhtwist {

using Rhs = std::function<StateDeriv(const CanonicalState&)>;

enum class Method {
    RK4,        ///< classical fixed-step Runge-Kutta
    RK4Halved,  ///< RK4 plus a step/2 run recording a Richardson error estimate
};

struct IntegrationConfig {
    double t0 = 0.0;
    double t_end = 1.0;
    double step = 1e-3;
    Method method = Method::RK4;
    int record_every = 1;  ///< keep every n-th step (endpoints always kept)
};

void validate(const IntegrationConfig& cfg);

/// Recorded run. Sample times are strictly monotone in the direction of
/// integration and uniformly spaced apart from the (shortened) final step.
/// diagnostics holds named per-sample columns parallel to samples.
struct Trajectory {
    std::vector<CanonicalState> samples;
    std::map<std::string, std::vector<double>> diagnostics;

    const CanonicalState& front() const { return samples.front(); }
    const CanonicalState& back() const { return samples.back(); }
    std::size_t size() const { return samples.size(); }
};

/// Named per-sample quantity evaluated along the run (energy, f(t), ...).
struct Diagnostic {
    std::string name;
    std::function<double(const CanonicalState&)> fn;
};

/// Fixed-step RK4 from cfg.t0 to cfg.t_end, landing exactly on t_end (the
/// last step is shortened). t_end < t0 integrates backward. With
/// Method::RK4Halved a second run at step/2 is compared at the recorded
/// samples and the per-sample position error estimate |x_h - x_h/2| / 15 is
/// stored in the "err_est" diagnostic column.
/// Throws NumericsError with the blow-up time if the state stops being finite.
Trajectory integrate(const Rhs& rhs, const CanonicalState& initial,
                     const IntegrationConfig& cfg,
                     const std::vector<Diagnostic>& diagnostics = {});

/// Empirical convergence order from final-state errors at steps h, h/2, h/4
/// against an h/8 reference: mean of log2 of consecutive error ratios.
/// Returns nullopt when the errors are too close to roundoff to be
/// informative (e.g. a zero or polynomial right-hand side that RK4 integrates
/// exactly). base_step <= 0 picks (t_end - t0) / 25.
std::optional<double> estimate_order(const Rhs& rhs, const CanonicalState& initial,
                                     double t_end, double base_step = 0.0);

}  // namespace nhtwist
