#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nhtwist/deformation.hpp"
#include "nhtwist/state.hpp"

namespace nhtwist {

/// Noncommutative coordinates (xbar_i, pbar_i) realized on the canonical
/// phase space.
struct NoncommutativeCoords {
    Vec3 xbar;
    Vec3 pbar;
};

/// Representation map at the state's time:
///   xbar_1 = x_1 - f(t) p_2 / 2,  xbar_2 = x_2 + f(t) p_1 / 2,
///   xbar_3 = x_3,                 pbar_i = p_i.
NoncommutativeCoords to_noncommutative(const CanonicalState& state,
                                       const DeformationSpec& spec);

/// Inverse of the map at fixed time t.
CanonicalState from_noncommutative(const NoncommutativeCoords& coords, double t,
                                   const DeformationSpec& spec);

/// Real-valued function of a phase-space point (time enters as a parameter).
using Observable = std::function<double(const CanonicalState&)>;

/// {A, B} = sum_i (dA/dx_i dB/dp_i - dA/dp_i dB/dx_i), by central finite
/// differences with base step h scaled per coordinate by (1 + |value|).
/// Throws NumericsError if an observable evaluates non-finite.
double poisson_bracket(const Observable& a, const Observable& b,
                       const CanonicalState& at, double h = 1e-5);

struct BracketCheck {
    std::string name;
    double residual = 0.0;
};

/// Outcome of a bracket verification. passed iff max_residual <= tolerance.
struct BracketReport {
    std::vector<BracketCheck> checks;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Checks the deformed algebra at the given state:
///   {xbar_1, xbar_2} = f(t),  {xbar_1, xbar_3} = {xbar_2, xbar_3} = 0,
///   {xbar_i, pbar_j} = delta_ij,  {pbar_i, pbar_j} = 0.
/// Residuals are scaled by (1 + |expected|). The coordinate observables are
/// linear in (x, p), so the check differentiates with a large step (0.25):
/// central differences are exact for linear functions and the large step
/// keeps roundoff small even when f(t) is huge.
BracketReport verify_deformed_brackets(const DeformationSpec& spec,
                                       const CanonicalState& at, double tol);

/// Evaluates {A,{B,C}} + {B,{C,A}} + {C,{A,B}} for all 20 triples drawn from
/// {xbar_1, xbar_2, xbar_3, pbar_1, pbar_2, pbar_3} at the state's time.
/// f(t) enters the brackets as a constant, so the identity holds exactly and
/// residuals measure finite-difference noise; they are scaled by (1 + |f(t)|).
BracketReport verify_jacobi(const DeformationSpec& spec,
                            const CanonicalState& at, double tol);

}  // namespace nhtwist
