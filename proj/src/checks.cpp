#include "nhtwist/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nhtwist/constant_force.hpp"
#include "nhtwist/errors.hpp"
#include "nhtwist/integrator.hpp"
#include "nhtwist/oscillator.hpp"
#include "nhtwist/phase_space.hpp"
#include "nhtwist/serialize.hpp"

namespace nhtwist {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 random_vec(Rng& rng, double lo, double hi) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

CanonicalState random_state(Rng& rng, double t_lo, double t_hi) {
    return {uniform(rng, t_lo, t_hi), random_vec(rng, -2.0, 2.0),
            random_vec(rng, -2.0, 2.0)};
}

SuiteResult finalize(std::string suite, std::vector<CheckResult> results) {
    SuiteResult out;
    out.suite = std::move(suite);
    out.results = std::move(results);
    out.all_passed =
        std::all_of(out.results.begin(), out.results.end(),
                    [](const CheckResult& r) { return r.passed; });
    return out;
}

}  // namespace

const char* to_string(Model model) {
    return model == Model::ConstantForce ? "constant_force" : "oscillator";
}

Model model_from_string(const std::string& name) {
    if (name == "constant_force") return Model::ConstantForce;
    if (name == "oscillator") return Model::Oscillator;
    throw ConfigError("unknown model '" + name +
                      "' (expected constant_force or oscillator)");
}

std::vector<DeformationSpec> default_configurations(double kappa, double tau) {
    std::vector<DeformationSpec> out;
    out.reserve(kAllFamilies.size() * kAllVariants.size());
    for (Family f : kAllFamilies) {
        for (Variant v : kAllVariants) {
            out.push_back({f, v, kappa, tau});
        }
    }
    return out;
}

SuiteResult run_bracket_suite(const std::vector<DeformationSpec>& specs,
                              int states_per_config, double tol, std::uint64_t seed) {
    std::vector<CheckResult> results;
    for (const DeformationSpec& spec : specs) {
        Rng rng(seed);
        CheckResult r{spec, 0.0, true, ""};
        for (int i = 0; i < states_per_config; ++i) {
            const BracketReport report =
                verify_deformed_brackets(spec, random_state(rng, 0.0, 3.0), tol);
            r.max_residual = std::max(r.max_residual, report.max_residual);
            r.passed = r.passed && report.passed;
        }
        results.push_back(std::move(r));
    }
    return finalize("brackets", std::move(results));
}

SuiteResult run_jacobi_suite(const std::vector<DeformationSpec>& specs,
                             int states_per_config, double tol, std::uint64_t seed) {
    std::vector<CheckResult> results;
    for (const DeformationSpec& spec : specs) {
        Rng rng(seed);
        CheckResult r{spec, 0.0, true, ""};
        for (int i = 0; i < states_per_config; ++i) {
            const BracketReport report =
                verify_jacobi(spec, random_state(rng, 0.0, 3.0), tol);
            r.max_residual = std::max(r.max_residual, report.max_residual);
            r.passed = r.passed && report.passed;
        }
        results.push_back(std::move(r));
    }
    return finalize("jacobi", std::move(results));
}

SuiteResult run_curl_suite(Model model, const std::vector<DeformationSpec>& specs,
                           int points_per_config, double tol, std::uint64_t seed) {
    std::vector<CheckResult> results;
    for (const DeformationSpec& spec : specs) {
        Rng rng(seed);
        CheckResult r{spec, 0.0, true, ""};
        if (model == Model::ConstantForce) {
            constant_force::Params params{1.0, {1.0, -0.5, 0.25}};
            for (int i = 0; i < points_per_config; ++i) {
                const double t = uniform(rng, 0.0, 3.0);
                const Vec3 at = random_vec(rng, -2.0, 2.0);
                // The force is position-independent, so any step works.
                const Vec3 c = constant_force::curl_newton_force_fd(
                    t, params, spec, at, 1e-2);
                r.max_residual = std::max(r.max_residual, norm(c));
            }
            r.passed = r.max_residual <= tol;
        } else {
            oscillator::Params params{1.0, 1.0};
            double max_curl = 0.0;
            double max_mismatch = 0.0;
            for (int i = 0; i < points_per_config; ++i) {
                const double t = uniform(rng, 0.0, 3.0);
                const Vec3 x = random_vec(rng, -2.0, 2.0);
                const Vec3 xdot = random_vec(rng, -2.0, 2.0);
                const Vec3 analytic = oscillator::curl_newton_force(t, params, spec);
                // Linear in x at frozen velocity: large step, zero truncation.
                const Vec3 fd = oscillator::curl_newton_force_fd(
                    x, xdot, t, params, spec, 5e-2);
                max_curl = std::max(max_curl, norm(analytic));
                max_mismatch = std::max(
                    max_mismatch, norm(fd - analytic) / (1.0 + norm(analytic)));
            }
            r.max_residual = max_curl;
            r.note = "fd_vs_analytic=" + format_double(max_mismatch);
            r.passed = max_curl <= tol && max_mismatch <= 1e-6;
        }
        results.push_back(std::move(r));
    }
    return finalize(std::string("curl_") + to_string(model), std::move(results));
}

SuiteResult run_limit_suite(const std::vector<DeformationSpec>& specs,
                            double tau_limit, double t_max, double tol) {
    std::vector<CheckResult> results;
    for (const DeformationSpec& spec : specs) {
        if (spec.variant == Variant::GalileanLimit) continue;
        DeformationSpec nh = spec;
        nh.tau = tau_limit;
        const DeformationSpec lim = galilean_limit_of(nh);
        CheckResult r{nh, 0.0, true, ""};
        const int n = 301;
        for (int i = 0; i < n; ++i) {
            const double t = t_max * static_cast<double>(i) / (n - 1);
            const double f_lim = eval_f(lim, t);
            const double dev =
                std::abs(eval_f(nh, t) - f_lim) / (1.0 + std::abs(f_lim));
            r.max_residual = std::max(r.max_residual, dev);
        }
        r.passed = r.max_residual <= tol;
        results.push_back(std::move(r));
    }
    return finalize("limits", std::move(results));
}

SuiteResult run_oracle_suite(const std::vector<DeformationSpec>& specs,
                             double t_end, double step, double tol,
                             std::uint64_t seed) {
    std::vector<CheckResult> results;
    for (const DeformationSpec& spec : specs) {
        Rng rng(seed);
        constant_force::Params params{uniform(rng, 0.5, 2.0),
                                      random_vec(rng, -1.0, 1.0)};
        InitialData init{random_vec(rng, -1.0, 1.0), random_vec(rng, -1.0, 1.0)};

        IntegrationConfig cfg;
        cfg.t0 = 0.0;
        cfg.t_end = t_end;
        cfg.step = step;
        cfg.record_every = 100;
        const Rhs rhs = [&](const CanonicalState& s) {
            return constant_force::eom_rhs(s, params, spec);
        };

        CheckResult r{spec, 0.0, false, ""};
        try {
            const Trajectory traj =
                integrate(rhs, constant_force::initial_state(init, params, spec), cfg);
            for (const CanonicalState& s : traj.samples) {
                const Vec3 exact =
                    constant_force::analytic_position(s.t, params, spec, init);
                const double rel = norm(s.x - exact) / (1.0 + norm(exact));
                r.max_residual = std::max(r.max_residual, rel);
            }
            r.passed = r.max_residual <= tol;
        } catch (const NumericsError& e) {
            r.note = e.what();
        }
        results.push_back(std::move(r));
    }
    return finalize("oracle", std::move(results));
}

nlohmann::json to_json(const SuiteResult& suite) {
    nlohmann::json configs = nlohmann::json::array();
    for (const CheckResult& r : suite.results) {
        nlohmann::json row = {{"config", to_json(r.spec)},
                              {"max_residual", r.max_residual},
                              {"passed", r.passed}};
        if (!r.note.empty()) row["note"] = r.note;
        configs.push_back(std::move(row));
    }
    return {{"suite", suite.suite},
            {"configs", std::move(configs)},
            {"passed", suite.all_passed}};
}

}  // namespace nhtwist
