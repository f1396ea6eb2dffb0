#include "nhtwist/phase_space.hpp"

#include <array>
#include <cmath>

#include "nhtwist/errors.hpp"

namespace nhtwist {
namespace {

// Step used inside the verify_* routines; see header.
constexpr double kVerifyStep = 0.25;

double partial(const Observable& obs, const CanonicalState& at, bool wrt_x,
               std::size_t i, double h) {
    CanonicalState plus = at;
    CanonicalState minus = at;
    double& vp = wrt_x ? plus.x[i] : plus.p[i];
    double& vm = wrt_x ? minus.x[i] : minus.p[i];
    const double step = h * (1.0 + std::abs(wrt_x ? at.x[i] : at.p[i]));
    vp += step;
    vm -= step;
    const double fp = obs(plus);
    const double fm = obs(minus);
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
        throw NumericsError("poisson_bracket: observable evaluated non-finite",
                            at.t);
    }
    return (fp - fm) / (2.0 * step);
}

double bracket_impl(const Observable& a, const Observable& b,
                    const CanonicalState& at, double h) {
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        sum += partial(a, at, true, i, h) * partial(b, at, false, i, h) -
               partial(a, at, false, i, h) * partial(b, at, true, i, h);
    }
    return sum;
}

// The six noncommutative coordinates as observables, with labels.
struct LabeledObservable {
    std::string name;
    Observable fn;
};

std::array<LabeledObservable, 6> coordinate_observables(const DeformationSpec& spec) {
    std::array<LabeledObservable, 6> out;
    const std::array<const char*, 6> names = {"xbar1", "xbar2", "xbar3",
                                              "pbar1", "pbar2", "pbar3"};
    for (std::size_t i = 0; i < 6; ++i) {
        const bool is_x = i < 3;
        const std::size_t comp = i % 3;
        out[i].name = names[i];
        out[i].fn = [spec, is_x, comp](const CanonicalState& s) {
            const NoncommutativeCoords nc = to_noncommutative(s, spec);
            return is_x ? nc.xbar[comp] : nc.pbar[comp];
        };
    }
    return out;
}

BracketReport finalize(std::vector<BracketCheck> checks, double tol) {
    BracketReport report;
    report.checks = std::move(checks);
    report.tolerance = tol;
    for (const auto& c : report.checks) {
        report.max_residual = std::max(report.max_residual, c.residual);
    }
    report.passed = report.max_residual <= tol;
    return report;
}

}  // namespace

NoncommutativeCoords to_noncommutative(const CanonicalState& state,
                                       const DeformationSpec& spec) {
    const double f = eval_f(spec, state.t);
    NoncommutativeCoords out;
    out.xbar = {state.x.x - 0.5 * f * state.p.y,
                state.x.y + 0.5 * f * state.p.x,
                state.x.z};
    out.pbar = state.p;
    return out;
}

CanonicalState from_noncommutative(const NoncommutativeCoords& coords, double t,
                                   const DeformationSpec& spec) {
    const double f = eval_f(spec, t);
    CanonicalState out;
    out.t = t;
    out.p = coords.pbar;
    out.x = {coords.xbar.x + 0.5 * f * coords.pbar.y,
             coords.xbar.y - 0.5 * f * coords.pbar.x,
             coords.xbar.z};
    return out;
}

double poisson_bracket(const Observable& a, const Observable& b,
                       const CanonicalState& at, double h) {
    if (!(h > 0.0)) throw ConfigError("poisson_bracket: step must be positive");
    return bracket_impl(a, b, at, h);
}

BracketReport verify_deformed_brackets(const DeformationSpec& spec,
                                       const CanonicalState& at, double tol) {
    if (!(tol > 0.0)) throw ConfigError("verify_deformed_brackets: tol must be positive");
    const auto obs = coordinate_observables(spec);
    const double f = eval_f(spec, at.t);

    std::vector<BracketCheck> checks;
    auto check = [&](std::size_t i, std::size_t j, double expected) {
        const double value = bracket_impl(obs[i].fn, obs[j].fn, at, kVerifyStep);
        const double residual =
            std::abs(value - expected) / (1.0 + std::abs(expected));
        checks.push_back({"{" + obs[i].name + "," + obs[j].name + "}", residual});
    };

    // position-position: only {xbar1, xbar2} is deformed
    check(0, 1, f);
    check(0, 2, 0.0);
    check(1, 2, 0.0);
    // position-momentum: canonical delta
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            check(i, 3 + j, i == j ? 1.0 : 0.0);
        }
    }
    // momentum-momentum
    check(3, 4, 0.0);
    check(3, 5, 0.0);
    check(4, 5, 0.0);

    return finalize(std::move(checks), tol);
}

BracketReport verify_jacobi(const DeformationSpec& spec,
                            const CanonicalState& at, double tol) {
    if (!(tol > 0.0)) throw ConfigError("verify_jacobi: tol must be positive");
    const auto obs = coordinate_observables(spec);
    const double scale = 1.0 + std::abs(eval_f(spec, at.t));

    auto nested = [&](const Observable& a, const Observable& b,
                      const Observable& c) {
        Observable inner = [&b, &c](const CanonicalState& s) {
            return bracket_impl(b, c, s, kVerifyStep);
        };
        return bracket_impl(a, inner, at, kVerifyStep);
    };

    std::vector<BracketCheck> checks;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            for (std::size_t k = j + 1; k < 6; ++k) {
                const double cyc = nested(obs[i].fn, obs[j].fn, obs[k].fn) +
                                   nested(obs[j].fn, obs[k].fn, obs[i].fn) +
                                   nested(obs[k].fn, obs[i].fn, obs[j].fn);
                checks.push_back(
                    {"jacobi(" + obs[i].name + "," + obs[j].name + "," +
                         obs[k].name + ")",
                     std::abs(cyc) / scale});
            }
        }
    }
    return finalize(std::move(checks), tol);
}

}  // namespace nhtwist
