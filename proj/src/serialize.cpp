#include "nhtwist/serialize.hpp"

#include <cstdio>
#include <ostream>

#include "nhtwist/errors.hpp"

namespace nhtwist {
namespace {

using nlohmann::json;

Vec3 vec3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw ConfigError(std::string(what) + ": expected an array of 3 numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

double require_number(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ConfigError(std::string(what) + ": missing numeric field '" + key + "'");
    }
    return j[key].get<double>();
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const DeformationSpec& spec) {
    json j;
    j["family"] = to_string(spec.family);
    j["variant"] = to_string(spec.variant);
    j["kappa"] = spec.kappa;
    if (spec.variant != Variant::GalileanLimit) j["tau"] = spec.tau;
    return j;
}

DeformationSpec deformation_spec_from_json(const json& j) {
    DeformationSpec spec;
    if (!j.contains("family") || !j.contains("variant")) {
        throw ConfigError("deformation: need 'family' and 'variant'");
    }
    spec.family = family_from_string(j["family"].get<std::string>());
    spec.variant = variant_from_string(j["variant"].get<std::string>());
    spec.kappa = require_number(j, "kappa", "deformation");
    if (j.contains("tau")) spec.tau = j["tau"].get<double>();
    validate(spec);
    return spec;
}

json to_json(const constant_force::Params& params) {
    return {{"m", params.m}, {"F", to_json(params.force)}};
}

constant_force::Params constant_force_params_from_json(const json& j) {
    constant_force::Params params;
    params.m = require_number(j, "m", "constant_force params");
    if (j.contains("F")) params.force = vec3_from_json(j["F"], "constant_force F");
    validate(params);
    return params;
}

json to_json(const oscillator::Params& params) {
    return {{"m", params.m}, {"omega", params.omega}};
}

oscillator::Params oscillator_params_from_json(const json& j) {
    oscillator::Params params;
    params.m = require_number(j, "m", "oscillator params");
    params.omega = require_number(j, "omega", "oscillator params");
    validate(params);
    return params;
}

json to_json(const BracketReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"residual", c.residual}});
    }
    return {{"checks", std::move(checks)},
            {"max_residual", report.max_residual},
            {"passed", report.passed}};
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    const auto energy = traj.diagnostics.find("energy");
    const auto f_t = traj.diagnostics.find("f_t");
    if (energy == traj.diagnostics.end() || f_t == traj.diagnostics.end()) {
        throw ConfigError("trajectory CSV needs 'energy' and 'f_t' diagnostics");
    }
    out << "t,x1,x2,x3,p1,p2,p3,energy,f_t\n";
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const CanonicalState& s = traj.samples[i];
        out << format_double(s.t) << ',' << format_double(s.x.x) << ','
            << format_double(s.x.y) << ',' << format_double(s.x.z) << ','
            << format_double(s.p.x) << ',' << format_double(s.p.y) << ','
            << format_double(s.p.z) << ',' << format_double(energy->second[i])
            << ',' << format_double(f_t->second[i]) << '\n';
    }
}

json trajectory_to_json(const Trajectory& traj) {
    json samples = json::array();
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const CanonicalState& s = traj.samples[i];
        json row = {{"t", s.t}, {"x", to_json(s.x)}, {"p", to_json(s.p)}};
        for (const auto& [name, column] : traj.diagnostics) {
            row[name] = column[i];
        }
        samples.push_back(std::move(row));
    }
    return samples;
}

}  // namespace nhtwist
