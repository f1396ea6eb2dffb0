#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nhtwist/deformation.hpp"

namespace nhtwist {

enum class Model { ConstantForce, Oscillator };

const char* to_string(Model model);
Model model_from_string(const std::string& name);

/// Per-configuration outcome of a check suite.
struct CheckResult {
    DeformationSpec spec;
    double max_residual = 0.0;
    bool passed = false;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> results;
    bool all_passed = false;
};

/// The 18 family x variant configurations with fixed kappa and tau.
std::vector<DeformationSpec> default_configurations(double kappa, double tau);

/// Deformed brackets at randomized states, residual tolerance tol.
SuiteResult run_bracket_suite(const std::vector<DeformationSpec>& specs,
                              int states_per_config, double tol, std::uint64_t seed);

/// Jacobi identity over all coordinate triples at randomized states.
SuiteResult run_jacobi_suite(const std::vector<DeformationSpec>& specs,
                             int states_per_config, double tol, std::uint64_t seed);

/// Conservativeness of the deformation-generated force term.
/// ConstantForce: FD curl of the Newton force at random (x, t); passes iff
/// the curl stays below tol everywhere (it does, for every family).
/// Oscillator: checks FD-vs-analytic agreement of the curl and passes iff
/// the analytic curl stays below tol, i.e. iff the force is conservative --
/// over all 18 configurations only kappa = 0 and canonical pass.
SuiteResult run_curl_suite(Model model, const std::vector<DeformationSpec>& specs,
                           int points_per_config, double tol, std::uint64_t seed);

/// |f_NH(t; tau = tau_limit) - f_limit(t)| <= tol * (1 + |f_limit(t)|) on a
/// grid over [0, t_max], for the NH configurations among specs.
SuiteResult run_limit_suite(const std::vector<DeformationSpec>& specs,
                            double tau_limit, double t_max, double tol);

/// RK4 trajectory of the constant-force model against the closed-form
/// solution, relative position tolerance tol.
SuiteResult run_oracle_suite(const std::vector<DeformationSpec>& specs,
                             double t_end, double step, double tol,
                             std::uint64_t seed);

nlohmann::json to_json(const SuiteResult& suite);

}  // namespace nhtwist
