#include <doctest.h>

#include <sstream>

#include "nhtwist/checks.hpp"
#include "nhtwist/errors.hpp"
#include "nhtwist/serialize.hpp"
#include "oracles.hpp"

using namespace nhtwist;
using nlohmann::json;

TEST_CASE("deformation spec round-trips through JSON") {
    oracles::Rng rng(271);
    for (Family fam : kAllFamilies) {
        for (Variant var : kAllVariants) {
            const DeformationSpec spec{fam, var, oracles::uniform(rng, -1.0, 1.0),
                                       oracles::uniform(rng, 0.5, 5.0)};
            const DeformationSpec back = deformation_spec_from_json(to_json(spec));
            CHECK(back.family == spec.family);
            CHECK(back.variant == spec.variant);
            CHECK(back.kappa == spec.kappa);
            if (var != Variant::GalileanLimit) CHECK(back.tau == spec.tau);
        }
    }
}

TEST_CASE("spec JSON uses the documented field names") {
    const json j = to_json(DeformationSpec{Family::K3, Variant::NHMinus, 0.25, 2.0});
    CHECK(j["family"] == "k3");
    CHECK(j["variant"] == "nh-");
    CHECK(j["kappa"] == 0.25);
    CHECK(j["tau"] == 2.0);
    // limit specs do not carry tau
    CHECK_FALSE(to_json(DeformationSpec{Family::K3, Variant::GalileanLimit, 0.25, 2.0})
                    .contains("tau"));
    CHECK_THROWS_AS(deformation_spec_from_json(json{{"family", "k9"},
                                                    {"variant", "nh-"},
                                                    {"kappa", 1.0}}),
                    ConfigError);
    CHECK_THROWS_AS(deformation_spec_from_json(json{{"family", "k1"}}), ConfigError);
}

TEST_CASE("model params round-trip") {
    const constant_force::Params cf =
        constant_force_params_from_json(json{{"m", 1.5}, {"F", {0.1, -0.2, 0.3}}});
    CHECK(cf.m == 1.5);
    CHECK(cf.force.y == -0.2);
    CHECK(to_json(cf)["F"][2] == 0.3);
    CHECK_THROWS_AS(constant_force_params_from_json(json{{"m", -1.0}}), ConfigError);

    const oscillator::Params osc =
        oscillator_params_from_json(json{{"m", 2.0}, {"omega", 0.7}});
    CHECK(osc.omega == 0.7);
    CHECK(to_json(osc)["m"] == 2.0);
    CHECK_THROWS_AS(oscillator_params_from_json(json{{"m", 2.0}}), ConfigError);
}

TEST_CASE("bracket report JSON shape") {
    BracketReport report;
    report.checks = {{"{xbar1,xbar2}", 1e-9}, {"{pbar1,pbar2}", 2e-9}};
    report.max_residual = 2e-9;
    report.tolerance = 1e-6;
    report.passed = true;
    const json j = to_json(report);
    CHECK(j["checks"].is_array());
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["name"] == "{xbar1,xbar2}");
    CHECK(j["checks"][0]["residual"] == 1e-9);
    CHECK(j["max_residual"] == 2e-9);
    CHECK(j["passed"] == true);
}

TEST_CASE("trajectory CSV: fixed header, deterministic bytes") {
    Trajectory traj;
    traj.samples = {{0.0, {1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}},
                    {0.5, {1.1, 2.2, 3.3}, {4.4, 5.5, 6.6}}};
    traj.diagnostics["energy"] = {10.0, 11.0};
    traj.diagnostics["f_t"] = {0.25, 0.5};

    std::ostringstream a, b;
    write_trajectory_csv(a, traj);
    write_trajectory_csv(b, traj);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, a.str().find('\n')) ==
          "t,x1,x2,x3,p1,p2,p3,energy,f_t");
    // 17 significant digits survive a text round trip
    Trajectory precise = traj;
    precise.samples[0].x.x = 0.1234567890123456789;
    std::ostringstream c;
    write_trajectory_csv(c, precise);
    CHECK(c.str().find(format_double(precise.samples[0].x.x)) != std::string::npos);
    CHECK(std::stod(format_double(precise.samples[0].x.x)) ==
          precise.samples[0].x.x);

    Trajectory missing;
    missing.samples = traj.samples;
    std::ostringstream d;
    CHECK_THROWS_AS(write_trajectory_csv(d, missing), ConfigError);
}

TEST_CASE("trajectory JSON is an array of sample objects") {
    Trajectory traj;
    traj.samples = {{0.0, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}};
    traj.diagnostics["energy"] = {0.5};
    traj.diagnostics["f_t"] = {0.0};
    const json j = trajectory_to_json(traj);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["t"] == 0.0);
    CHECK(j[0]["x"][0] == 1.0);
    CHECK(j[0]["p"][1] == 1.0);
    CHECK(j[0]["energy"] == 0.5);
    CHECK(j[0]["f_t"] == 0.0);
}

TEST_CASE("suite results serialize with per-config rows") {
    const auto specs = default_configurations(0.5, 1.0);
    CHECK(specs.size() == 18);
    const SuiteResult suite = run_limit_suite(specs, 1e6, 3.0, 1e-4);
    CHECK(suite.results.size() == 12);  // NH configurations only
    const json j = to_json(suite);
    CHECK(j["suite"] == "limits");
    CHECK(j["configs"].size() == 12);
    CHECK(j.contains("passed"));
}
