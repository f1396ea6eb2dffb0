#pragma once

#include <array>
#include <string>

namespace nhtwist {

/// The six deformation-function families. With C = cosh|cos(t/tau) and
/// S = sinh|sin(t/tau) (NH+ hyperbolic, NH- trigonometric):
///
///   K1:  f = kappa C^2                      ->  kappa            (limit)
///   K2:  f = kappa tau C S                  ->  kappa t
///   K3:  f = kappa tau^2 S^2                ->  kappa t^2
///   K4:  f = 4 kappa tau^4 (C - 1)^2        ->  kappa t^4
///   K5:  f = +/- kappa tau^2 (C - 1) C      ->  kappa t^2 / 2
///   K6:  f = +/- kappa tau^3 (C - 1) S      ->  kappa t^3 / 2
///
/// The +/- in K5/K6 is + for NH+ and - for NH-; "limit" is the tau -> inf
/// reduction (GalileanLimit variant), where the polynomial forms are used
/// directly.
enum class Family { K1, K2, K3, K4, K5, K6 };

enum class Variant { NHPlus, NHMinus, GalileanLimit };

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::K1, Family::K2, Family::K3, Family::K4, Family::K5, Family::K6};

inline constexpr std::array<Variant, 3> kAllVariants = {
    Variant::NHPlus, Variant::NHMinus, Variant::GalileanLimit};

/// Which deformation function to use and with what parameters. kappa is the
/// deformation strength (units vary per family so that f has units of
/// length^2; kept a raw real). tau is the cosmological time scale of the NH
/// variants and is ignored in the Galilean limit.
struct DeformationSpec {
    Family family = Family::K1;
    Variant variant = Variant::GalileanLimit;
    double kappa = 0.0;
    double tau = 1.0;
};

/// Throws ConfigError unless the spec is usable: tau must be positive and
/// finite for the NH variants, kappa finite.
void validate(const DeformationSpec& spec);

/// f(t) for the given family/variant. kappa = 0 gives identically zero.
double eval_f(const DeformationSpec& spec, double t);

/// Exact analytic df/dt.
double eval_f_dot(const DeformationSpec& spec, double t);

/// Exact analytic integral of f from 0 to t (vanishes at t = 0).
double eval_f_antiderivative(const DeformationSpec& spec, double t);

/// Same family and kappa with variant = GalileanLimit. Throws ConfigError if
/// the spec already is a limit spec, to catch caller confusion.
DeformationSpec galilean_limit_of(const DeformationSpec& spec);

const char* to_string(Family family);
const char* to_string(Variant variant);

Family family_from_string(const std::string& name);    // "k1".."k6"
Variant variant_from_string(const std::string& name);  // "nh+", "nh-", "limit"

/// Short label like "k3/nh-" for reports and logs.
std::string config_label(const DeformationSpec& spec);

}  // namespace nhtwist
