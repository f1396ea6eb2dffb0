#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nhtwist/constant_force.hpp"
#include "nhtwist/deformation.hpp"
#include "nhtwist/integrator.hpp"
#include "nhtwist/oscillator.hpp"
#include "nhtwist/phase_space.hpp"

namespace nhtwist {

/// Doubles are printed with 17 significant digits so that written data can be
/// compared bit-for-bit and round-trips through text.
std::string format_double(double v);

// {"family":"k1".."k6","variant":"nh+"|"nh-"|"limit","kappa":num,"tau":num?}
nlohmann::json to_json(const DeformationSpec& spec);
DeformationSpec deformation_spec_from_json(const nlohmann::json& j);

// {"m":num,"F":[num,num,num]}
nlohmann::json to_json(const constant_force::Params& params);
constant_force::Params constant_force_params_from_json(const nlohmann::json& j);

// {"m":num,"omega":num}
nlohmann::json to_json(const oscillator::Params& params);
oscillator::Params oscillator_params_from_json(const nlohmann::json& j);

// {"checks":[{"name":str,"residual":num}],"max_residual":num,"passed":bool}
nlohmann::json to_json(const BracketReport& report);

/// CSV with the fixed header t,x1,x2,x3,p1,p2,p3,energy,f_t. The energy and
/// f_t columns come from the trajectory's diagnostics and must be present.
/// Output is deterministic: same trajectory, same bytes.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Array of sample objects: {"t":..,"x":[..],"p":[..]} plus one key per
/// diagnostic column.
nlohmann::json trajectory_to_json(const Trajectory& traj);

}  // namespace nhtwist
