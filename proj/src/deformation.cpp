#include "nhtwist/deformation.hpp"

#include <cmath>

#include "nhtwist/errors.hpp"

namespace nhtwist {
namespace {

// Building blocks for one NH variant at a fixed time. sigma distinguishes the
// hyperbolic (+1) and trigonometric (-1) function pairs, which share the
// differentiation rules dC/dt = sigma S / tau and dS/dt = C / tau. c_minus_1
// holds C - 1 evaluated without cancellation (2 sinh^2(u/2), resp.
// -2 sin^2(u/2)), which matters for K4-K6 when |t| << tau.
struct Blocks {
    double sigma;
    double c;
    double s;
    double c_minus_1;
};

Blocks make_blocks(Variant variant, double u) {
    if (variant == Variant::NHPlus) {
        const double half = std::sinh(0.5 * u);
        return {+1.0, std::cosh(u), std::sinh(u), 2.0 * half * half};
    }
    const double half = std::sin(0.5 * u);
    return {-1.0, std::cos(u), std::sin(u), -2.0 * half * half};
}

double limit_f(Family family, double kappa, double t) {
    switch (family) {
        case Family::K1: return kappa;
        case Family::K2: return kappa * t;
        case Family::K3: return kappa * t * t;
        case Family::K4: return kappa * t * t * t * t;
        case Family::K5: return 0.5 * kappa * t * t;
        case Family::K6: return 0.5 * kappa * t * t * t;
    }
    return 0.0;
}

double limit_f_dot(Family family, double kappa, double t) {
    switch (family) {
        case Family::K1: return 0.0;
        case Family::K2: return kappa;
        case Family::K3: return 2.0 * kappa * t;
        case Family::K4: return 4.0 * kappa * t * t * t;
        case Family::K5: return kappa * t;
        case Family::K6: return 1.5 * kappa * t * t;
    }
    return 0.0;
}

double limit_f_integral(Family family, double kappa, double t) {
    const double t2 = t * t;
    switch (family) {
        case Family::K1: return kappa * t;
        case Family::K2: return 0.5 * kappa * t2;
        case Family::K3: return kappa * t2 * t / 3.0;
        case Family::K4: return kappa * t2 * t2 * t / 5.0;
        case Family::K5: return kappa * t2 * t / 6.0;
        case Family::K6: return 0.125 * kappa * t2 * t2;
    }
    return 0.0;
}

}  // namespace

void validate(const DeformationSpec& spec) {
    if (!std::isfinite(spec.kappa)) {
        throw ConfigError("deformation: kappa must be finite");
    }
    if (spec.variant != Variant::GalileanLimit &&
        !(std::isfinite(spec.tau) && spec.tau > 0.0)) {
        throw ConfigError("deformation: tau must be positive for NH variants");
    }
}

double eval_f(const DeformationSpec& spec, double t) {
    validate(spec);
    if (spec.kappa == 0.0) return 0.0;
    if (spec.variant == Variant::GalileanLimit) {
        return limit_f(spec.family, spec.kappa, t);
    }
    const double tau = spec.tau;
    const double k = spec.kappa;
    const Blocks b = make_blocks(spec.variant, t / tau);
    switch (spec.family) {
        case Family::K1: return k * b.c * b.c;
        case Family::K2: return k * tau * b.c * b.s;
        case Family::K3: return k * tau * tau * b.s * b.s;
        case Family::K4: return 4.0 * k * tau * tau * tau * tau * b.c_minus_1 * b.c_minus_1;
        case Family::K5: return b.sigma * k * tau * tau * b.c_minus_1 * b.c;
        case Family::K6: return b.sigma * k * tau * tau * tau * b.c_minus_1 * b.s;
    }
    return 0.0;
}

double eval_f_dot(const DeformationSpec& spec, double t) {
    validate(spec);
    if (spec.kappa == 0.0) return 0.0;
    if (spec.variant == Variant::GalileanLimit) {
        return limit_f_dot(spec.family, spec.kappa, t);
    }
    const double tau = spec.tau;
    const double k = spec.kappa;
    const Blocks b = make_blocks(spec.variant, t / tau);
    switch (spec.family) {
        case Family::K1: return 2.0 * b.sigma * k * b.c * b.s / tau;
        case Family::K2: return k * (b.c * b.c + b.sigma * b.s * b.s);
        case Family::K3: return 2.0 * k * tau * b.s * b.c;
        case Family::K4: return 8.0 * b.sigma * k * tau * tau * tau * b.c_minus_1 * b.s;
        case Family::K5: return k * tau * b.s * (2.0 * b.c - 1.0);
        case Family::K6:
            return k * tau * tau * (b.s * b.s + b.sigma * b.c * b.c_minus_1);
    }
    return 0.0;
}

double eval_f_antiderivative(const DeformationSpec& spec, double t) {
    validate(spec);
    if (spec.kappa == 0.0) return 0.0;
    if (spec.variant == Variant::GalileanLimit) {
        return limit_f_integral(spec.family, spec.kappa, t);
    }
    const double tau = spec.tau;
    const double k = spec.kappa;
    const Blocks b = make_blocks(spec.variant, t / tau);
    const double sc = b.s * b.c;
    switch (spec.family) {
        case Family::K1: return k * (0.5 * t + 0.5 * tau * sc);
        case Family::K2: return 0.5 * k * tau * tau * b.s * b.s;
        case Family::K3:
            return b.sigma * k * tau * tau * (0.5 * tau * sc - 0.5 * t);
        case Family::K4:
            return 4.0 * k * tau * tau * tau * tau *
                   (1.5 * t + 0.5 * tau * sc - 2.0 * tau * b.s);
        case Family::K5:
            return b.sigma * k * tau * tau * (0.5 * t + 0.5 * tau * sc - tau * b.s);
        case Family::K6:
            return k * tau * tau * tau * tau *
                   (0.5 * b.sigma * b.s * b.s - b.c_minus_1);
    }
    return 0.0;
}

DeformationSpec galilean_limit_of(const DeformationSpec& spec) {
    validate(spec);
    if (spec.variant == Variant::GalileanLimit) {
        throw ConfigError("galilean_limit_of: spec is already a limit spec");
    }
    DeformationSpec out = spec;
    out.variant = Variant::GalileanLimit;
    return out;
}

const char* to_string(Family family) {
    switch (family) {
        case Family::K1: return "k1";
        case Family::K2: return "k2";
        case Family::K3: return "k3";
        case Family::K4: return "k4";
        case Family::K5: return "k5";
        case Family::K6: return "k6";
    }
    return "?";
}

const char* to_string(Variant variant) {
    switch (variant) {
        case Variant::NHPlus: return "nh+";
        case Variant::NHMinus: return "nh-";
        case Variant::GalileanLimit: return "limit";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    for (Family f : kAllFamilies) {
        if (name == to_string(f)) return f;
    }
    throw ConfigError("unknown deformation family '" + name + "' (expected k1..k6)");
}

Variant variant_from_string(const std::string& name) {
    for (Variant v : kAllVariants) {
        if (name == to_string(v)) return v;
    }
    throw ConfigError("unknown variant '" + name + "' (expected nh+, nh- or limit)");
}

std::string config_label(const DeformationSpec& spec) {
    return std::string(to_string(spec.family)) + "/" + to_string(spec.variant);
}

}  // namespace nhtwist
