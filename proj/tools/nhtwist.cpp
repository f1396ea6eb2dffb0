// nhtwist: simulate, verify and sweep classical dynamics on twist-deformed
// Newton-Hooke space-times.
//
// Exit codes: 0 success / all checks passed, 1 check failure, 2 bad
// configuration, 3 numerical failure (integration blow-up).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "nhtwist/checks.hpp"
#include "nhtwist/constant_force.hpp"
#include "nhtwist/errors.hpp"
#include "nhtwist/integrator.hpp"
#include "nhtwist/oscillator.hpp"
#include "nhtwist/phase_space.hpp"
#include "nhtwist/serialize.hpp"

namespace {

using namespace nhtwist;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
    Model model = Model::ConstantForce;
    DeformationSpec spec{Family::K1, Variant::GalileanLimit, 0.5, 1.0};
    constant_force::Params cf{1.0, {1.0, 0.0, 0.0}};
    oscillator::Params osc{1.0, 1.0};
    InitialData init{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    IntegrationConfig integration{0.0, 10.0, 1e-3, Method::RK4, 10};
    std::string out_path;
    std::string format = "csv";
};

std::string fmt_vec(const Vec3& v) {
    return "(" + format_double(v.x) + ", " + format_double(v.y) + ", " +
           format_double(v.z) + ")";
}

json to_json(const RunConfig& cfg) {
    json j;
    j["model"] = to_string(cfg.model);
    j["deformation"] = nhtwist::to_json(cfg.spec);
    if (cfg.model == Model::ConstantForce) {
        j["constant_force"] = nhtwist::to_json(cfg.cf);
    } else {
        j["oscillator"] = nhtwist::to_json(cfg.osc);
    }
    j["initial"] = {{"x0", {cfg.init.x0.x, cfg.init.x0.y, cfg.init.x0.z}},
                    {"v0", {cfg.init.v0.x, cfg.init.v0.y, cfg.init.v0.z}}};
    j["integration"] = {
        {"t0", cfg.integration.t0},
        {"t_end", cfg.integration.t_end},
        {"step", cfg.integration.step},
        {"method", cfg.integration.method == Method::RK4 ? "rk4" : "rk4_halved"},
        {"record_every", cfg.integration.record_every}};
    j["output"] = {{"path", cfg.out_path}, {"format", cfg.format}};
    return j;
}

Vec3 vec3_from(const std::vector<double>& v, const char* what) {
    if (v.size() != 3) {
        throw ConfigError(std::string(what) + ": expected three comma-separated values");
    }
    return {v[0], v[1], v[2]};
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config file '" + path + "': " + e.what());
    }
    if (j.contains("model")) cfg.model = model_from_string(j["model"].get<std::string>());
    if (j.contains("deformation")) {
        cfg.spec = deformation_spec_from_json(j["deformation"]);
    }
    if (j.contains("constant_force")) {
        cfg.cf = constant_force_params_from_json(j["constant_force"]);
    }
    if (j.contains("oscillator")) {
        cfg.osc = oscillator_params_from_json(j["oscillator"]);
    }
    if (j.contains("initial")) {
        const json& init = j["initial"];
        if (init.contains("x0")) {
            cfg.init.x0 = vec3_from(init["x0"].get<std::vector<double>>(), "initial.x0");
        }
        if (init.contains("v0")) {
            cfg.init.v0 = vec3_from(init["v0"].get<std::vector<double>>(), "initial.v0");
        }
    }
    if (j.contains("integration")) {
        const json& jc = j["integration"];
        if (jc.contains("t0")) cfg.integration.t0 = jc["t0"].get<double>();
        if (jc.contains("t_end")) cfg.integration.t_end = jc["t_end"].get<double>();
        if (jc.contains("step")) cfg.integration.step = jc["step"].get<double>();
        if (jc.contains("record_every")) {
            cfg.integration.record_every = jc["record_every"].get<int>();
        }
        if (jc.contains("method")) {
            const std::string m = jc["method"].get<std::string>();
            if (m == "rk4") {
                cfg.integration.method = Method::RK4;
            } else if (m == "rk4_halved") {
                cfg.integration.method = Method::RK4Halved;
            } else {
                throw ConfigError("integration.method must be rk4 or rk4_halved");
            }
        }
    }
    if (j.contains("output")) {
        const json& jo = j["output"];
        if (jo.contains("path")) cfg.out_path = jo["path"].get<std::string>();
        if (jo.contains("format")) cfg.format = jo["format"].get<std::string>();
    }
}

Rhs make_rhs(const RunConfig& cfg) {
    if (cfg.model == Model::ConstantForce) {
        return [cfg](const CanonicalState& s) {
            return constant_force::eom_rhs(s, cfg.cf, cfg.spec);
        };
    }
    return [cfg](const CanonicalState& s) {
        return oscillator::eom_rhs(s, cfg.osc, cfg.spec);
    };
}

CanonicalState make_initial(const RunConfig& cfg) {
    if (cfg.model == Model::ConstantForce) {
        return constant_force::initial_state(cfg.init, cfg.cf, cfg.spec,
                                             cfg.integration.t0);
    }
    return oscillator::initial_state(cfg.init, cfg.osc, cfg.spec,
                                     cfg.integration.t0);
}

std::vector<Diagnostic> make_diagnostics(const RunConfig& cfg) {
    std::vector<Diagnostic> out;
    if (cfg.model == Model::ConstantForce) {
        out.push_back({"energy", [cfg](const CanonicalState& s) {
                           return constant_force::hamiltonian(s, cfg.cf, cfg.spec);
                       }});
    } else {
        out.push_back({"energy", [cfg](const CanonicalState& s) {
                           return oscillator::hamiltonian(s, cfg.osc, cfg.spec);
                       }});
    }
    out.push_back({"f_t", [cfg](const CanonicalState& s) {
                       return eval_f(cfg.spec, s.t);
                   }});
    if (cfg.model == Model::Oscillator) {
        out.push_back({"M_f", [cfg](const CanonicalState& s) {
                           return oscillator::effective_mass(s.t, cfg.osc, cfg.spec);
                       }});
    }
    return out;
}

void validate_run(const RunConfig& cfg) {
    validate(cfg.spec);
    validate(cfg.integration);
    if (cfg.model == Model::ConstantForce) {
        constant_force::validate(cfg.cf);
    } else {
        oscillator::validate(cfg.osc);
    }
    if (!cfg.init.x0.finite() || !cfg.init.v0.finite()) {
        throw ConfigError("initial data must be finite");
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        throw ConfigError("format must be csv or json");
    }
}

void write_outputs(const RunConfig& cfg, const Trajectory& traj) {
    if (cfg.out_path.empty()) return;
    std::ofstream out(cfg.out_path);
    if (!out) throw ConfigError("cannot write '" + cfg.out_path + "'");
    if (cfg.format == "csv") {
        write_trajectory_csv(out, traj);
    } else {
        out << trajectory_to_json(traj).dump(1) << '\n';
    }
    // metadata (config echo) goes next to the data, never inside it
    std::ofstream meta(cfg.out_path + ".meta.json");
    if (!meta) throw ConfigError("cannot write '" + cfg.out_path + ".meta.json'");
    meta << to_json(cfg).dump(1) << '\n';
}

// true when the deformation shifts the Newton force by a constant vector:
// fdot is identically constant exactly for K1 (0) and K2 (kappa) in the limit
bool constant_force_offset(const DeformationSpec& spec) {
    return spec.variant == Variant::GalileanLimit &&
           (spec.family == Family::K1 || spec.family == Family::K2);
}

int cmd_simulate(const RunConfig& cfg) {
    validate_run(cfg);

    if (cfg.model == Model::Oscillator) {
        const double f_end = eval_f(cfg.spec, cfg.integration.t_end);
        if (std::abs(f_end) * cfg.osc.m * cfg.osc.omega > 1e6) {
            std::fprintf(stderr,
                         "warning: f(t_end)*m*omega = %.3g suggests a stiff "
                         "oscillator run; consider a shorter window or smaller "
                         "kappa/larger tau\n",
                         std::abs(f_end) * cfg.osc.m * cfg.osc.omega);
        }
    }

    Trajectory traj;
    try {
        traj = integrate(make_rhs(cfg), make_initial(cfg), cfg.integration,
                         make_diagnostics(cfg));
    } catch (const NumericsError& e) {
        std::fprintf(stderr, "numerical failure: %s (t = %s)\n", e.what(),
                     format_double(e.time()).c_str());
        return kExitNumerical;
    }
    write_outputs(cfg, traj);

    const auto& energy = traj.diagnostics.at("energy");
    const auto& f_t = traj.diagnostics.at("f_t");
    double max_f = 0.0;
    for (double f : f_t) max_f = std::max(max_f, std::abs(f));

    std::printf("simulate: model=%s deformation=%s kappa=%s%s\n",
                to_string(cfg.model), config_label(cfg.spec).c_str(),
                format_double(cfg.spec.kappa).c_str(),
                cfg.spec.variant == Variant::GalileanLimit
                    ? ""
                    : (" tau=" + format_double(cfg.spec.tau)).c_str());
    std::printf("  samples: %zu  t: %s -> %s\n", traj.size(),
                format_double(traj.front().t).c_str(),
                format_double(traj.back().t).c_str());
    std::printf("  final x = %s\n", fmt_vec(traj.back().x).c_str());
    std::printf("  final p = %s\n", fmt_vec(traj.back().p).c_str());
    std::printf("  max |f(t)| = %s\n", format_double(max_f).c_str());
    std::printf("  energy: start %s  end %s  drift %s\n",
                format_double(energy.front()).c_str(),
                format_double(energy.back()).c_str(),
                format_double(energy.back() - energy.front()).c_str());
    if (cfg.spec.kappa == 0.0) {
        std::printf("  undeformed: kappa = 0, classical dynamics\n");
    }
    if (cfg.model == Model::ConstantForce && constant_force_offset(cfg.spec)) {
        const Vec3 offset = constant_force::newton_force(cfg.integration.t0,
                                                         cfg.cf, cfg.spec) -
                            cfg.cf.force;
        std::printf("  constant acceleration offset G - F = %s\n",
                    fmt_vec(offset).c_str());
    }
    if (cfg.model == Model::Oscillator) {
        std::printf("  conservative force term: %s\n",
                    oscillator::is_conservative(cfg.spec) ? "true" : "false");
    }
    if (!cfg.out_path.empty()) {
        std::printf("  wrote %s and %s.meta.json\n", cfg.out_path.c_str(),
                    cfg.out_path.c_str());
    }
    return kExitOk;
}

int cmd_check(const std::string& suite, const RunConfig& cfg, bool single_config,
              int samples, std::uint64_t seed, const std::string& out_path) {
    std::vector<DeformationSpec> specs;
    if (single_config) {
        validate(cfg.spec);
        specs.push_back(cfg.spec);
    } else {
        specs = default_configurations(cfg.spec.kappa, cfg.spec.tau);
    }

    SuiteResult result;
    if (suite == "brackets") {
        result = run_bracket_suite(specs, samples, 1e-6, seed);
    } else if (suite == "jacobi") {
        result = run_jacobi_suite(specs, samples, 1e-6, seed);
    } else if (suite == "curl") {
        result = run_curl_suite(cfg.model, specs, samples, 1e-9, seed);
    } else if (suite == "limits") {
        result = run_limit_suite(specs, 1e6, 3.0, 1e-4);
        if (result.results.empty()) {
            throw ConfigError("limits suite needs at least one NH configuration");
        }
    } else if (suite == "oracle") {
        result = run_oracle_suite(specs, 10.0, 1e-3, 1e-6, seed);
    } else {
        throw ConfigError("unknown suite '" + suite + "'");
    }

    for (const CheckResult& r : result.results) {
        std::printf("[%s] %-9s max_residual=%s%s%s\n", r.passed ? "PASS" : "FAIL",
                    config_label(r.spec).c_str(),
                    format_double(r.max_residual).c_str(),
                    r.note.empty() ? "" : "  ", r.note.c_str());
    }
    std::printf("%s: %zu configuration(s), %s\n", result.suite.c_str(),
                result.results.size(), result.all_passed ? "all passed" : "FAILURES");
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write '" + out_path + "'");
        out << to_json(result).dump(1) << '\n';
    }
    return result.all_passed ? kExitOk : kExitCheckFailed;
}

struct GridAxis {
    std::string name;
    std::vector<double> values;
};

std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
    // lo:hi:n, or a single value
    std::vector<double> out;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        try {
            out.push_back(std::stod(text));
        } catch (...) {
            throw ConfigError(flag + ": expected lo:hi:n or a single number");
        }
        return out;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw ConfigError(flag + ": expected lo:hi:n");
    }
    double lo = 0.0, hi = 0.0;
    long n = 0;
    try {
        lo = std::stod(text.substr(0, c1));
        hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        n = std::stol(text.substr(c2 + 1));
    } catch (...) {
        throw ConfigError(flag + ": expected lo:hi:n");
    }
    if (n < 1) throw ConfigError(flag + ": grid needs at least one point");
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (long i = 0; i < n; ++i) {
        out.push_back(lo + (hi - lo) * static_cast<double>(i) /
                               static_cast<double>(n - 1));
    }
    return out;
}

struct SweepRow {
    std::size_t index = 0;
    RunConfig cfg;
    std::string status = "ok";
    Vec3 final_x;
    double displacement = 0.0;
    double energy_drift = 0.0;
    double max_curl_residual = 0.0;
    double dev_from_classical = 0.0;
};

SweepRow run_cell(std::size_t index, RunConfig cfg) {
    SweepRow row;
    row.index = index;
    row.cfg = cfg;
    try {
        validate_run(cfg);
        const Trajectory traj = integrate(make_rhs(cfg), make_initial(cfg),
                                          cfg.integration, make_diagnostics(cfg));
        row.final_x = traj.back().x;
        row.displacement = norm(traj.back().x - traj.front().x);
        const auto& energy = traj.diagnostics.at("energy");
        for (double e : energy) {
            row.energy_drift = std::max(row.energy_drift, std::abs(e - energy.front()));
        }
        for (const CanonicalState& s : traj.samples) {
            if (cfg.model == Model::ConstantForce) {
                row.max_curl_residual = std::max(
                    row.max_curl_residual,
                    norm(constant_force::curl_newton_force_fd(s.t, cfg.cf, cfg.spec,
                                                              s.x, 1e-2)));
            } else {
                const Vec3 analytic =
                    oscillator::curl_newton_force(s.t, cfg.osc, cfg.spec);
                const Vec3 fd = oscillator::curl_newton_force_fd(
                    s.x, oscillator::velocity(s, cfg.osc, cfg.spec), s.t, cfg.osc,
                    cfg.spec, 5e-2);
                row.max_curl_residual =
                    std::max(row.max_curl_residual,
                             norm(fd - analytic) / (1.0 + norm(analytic)));
            }
        }
        // classical twin: same cell with the deformation switched off
        RunConfig classical = cfg;
        classical.spec.kappa = 0.0;
        const Trajectory base = integrate(make_rhs(classical), make_initial(classical),
                                          classical.integration, {});
        const std::size_t n = std::min(traj.size(), base.size());
        for (std::size_t i = 0; i < n; ++i) {
            row.dev_from_classical =
                std::max(row.dev_from_classical,
                         norm(traj.samples[i].x - base.samples[i].x));
        }
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (char& c : msg) {
            if (c == ',' || c == '\n') c = ';';
        }
        row.status = msg;
    }
    return row;
}

int cmd_sweep(const RunConfig& base, const std::vector<GridAxis>& axes,
              const std::string& out_path, int jobs) {
    std::size_t cells = 1;
    for (const GridAxis& a : axes) cells *= a.values.size();
    if (cells == 0) throw ConfigError("sweep: empty grid");

    std::vector<RunConfig> configs;
    configs.reserve(cells);
    for (std::size_t index = 0; index < cells; ++index) {
        RunConfig cfg = base;
        std::size_t rem = index;
        for (auto it = axes.rbegin(); it != axes.rend(); ++it) {
            const double value = it->values[rem % it->values.size()];
            rem /= it->values.size();
            if (it->name == "kappa") cfg.spec.kappa = value;
            if (it->name == "tau") cfg.spec.tau = value;
            if (it->name == "m") {
                cfg.cf.m = value;
                cfg.osc.m = value;
            }
            if (it->name == "omega") cfg.osc.omega = value;
        }
        cfg.out_path.clear();  // cells produce rows, not trajectory files
        configs.push_back(std::move(cfg));
    }

    if (jobs < 1) jobs = 1;
    std::vector<SweepRow> rows(cells);
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
        for (;;) {
            std::size_t index;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= cells) return;
                index = next++;
            }
            rows[index] = run_cell(index, configs[index]);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs && i < static_cast<int>(cells); ++i) {
        pool.emplace_back(worker);
    }
    for (std::thread& t : pool) t.join();

    std::ostringstream csv;
    csv << "index,model,family,variant,kappa,tau,m,omega,F1,F2,F3,status,"
           "final_x1,final_x2,final_x3,displacement,energy_drift,"
           "max_curl_residual,dev_from_classical\n";
    std::size_t failures = 0;
    for (const SweepRow& row : rows) {
        if (row.status != "ok") ++failures;
        const RunConfig& c = row.cfg;
        const bool cf = c.model == Model::ConstantForce;
        csv << row.index << ',' << to_string(c.model) << ','
            << to_string(c.spec.family) << ',' << to_string(c.spec.variant) << ','
            << format_double(c.spec.kappa) << ',' << format_double(c.spec.tau)
            << ',' << format_double(cf ? c.cf.m : c.osc.m) << ','
            << (cf ? "" : format_double(c.osc.omega)) << ','
            << (cf ? format_double(c.cf.force.x) : "") << ','
            << (cf ? format_double(c.cf.force.y) : "") << ','
            << (cf ? format_double(c.cf.force.z) : "") << ',' << row.status << ','
            << format_double(row.final_x.x) << ',' << format_double(row.final_x.y)
            << ',' << format_double(row.final_x.z) << ','
            << format_double(row.displacement) << ','
            << format_double(row.energy_drift) << ','
            << format_double(row.max_curl_residual) << ','
            << format_double(row.dev_from_classical) << '\n';
    }

    if (out_path.empty()) {
        std::fputs(csv.str().c_str(), stdout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw ConfigError("cannot write '" + out_path + "'");
        out << csv.str();
        json meta = to_json(base);
        meta.erase("output");
        json jaxes = json::array();
        for (const GridAxis& a : axes) {
            jaxes.push_back({{"name", a.name}, {"values", a.values}});
        }
        meta["sweep"] = {{"axes", std::move(jaxes)}, {"cells", cells}};
        std::ofstream ms(out_path + ".meta.json");
        if (!ms) throw ConfigError("cannot write '" + out_path + ".meta.json'");
        ms << meta.dump(1) << '\n';
        std::printf("sweep: %zu cell(s), %zu failure(s), wrote %s\n", cells,
                    failures, out_path.c_str());
    }
    return failures == cells ? kExitNumerical : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classical dynamics on twist-deformed Newton-Hooke space-times"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    // flags land in temporaries and are applied after the config file, so
    // that flags always override config-file values
    std::string model_name, family_name, variant_name, method_name;
    std::string out_flag, format_flag;
    double kappa_flag = 0.0, tau_flag = 0.0, m_flag = 0.0, omega_flag = 0.0;
    double t0_flag = 0.0, t_end_flag = 0.0, step_flag = 0.0;
    int record_flag = 1;
    std::vector<double> force_flag;
    std::vector<double> x0_flag;
    std::vector<double> v0_flag;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
        sub->add_option("--model", model_name, "constant_force | oscillator")
            ->check(CLI::IsMember({"constant_force", "oscillator"}));
        sub->add_option("--family", family_name, "deformation family k1..k6")
            ->check(CLI::IsMember({"k1", "k2", "k3", "k4", "k5", "k6"}));
        sub->add_option("--variant", variant_name, "nh+ | nh- | limit")
            ->check(CLI::IsMember({"nh+", "nh-", "limit"}));
        sub->add_option("--kappa", kappa_flag, "deformation strength");
        sub->add_option("--tau", tau_flag, "NH time scale (ignored for limit)");
        sub->add_option("--m", m_flag, "particle mass");
        sub->add_option("--omega", omega_flag, "oscillator frequency");
        sub->add_option("--force", force_flag, "constant force F1,F2,F3")
            ->delimiter(',')
            ->expected(3);
        sub->add_option("--x0", x0_flag, "initial position x1,x2,x3")
            ->delimiter(',')
            ->expected(3);
        sub->add_option("--v0", v0_flag, "initial velocity v1,v2,v3")
            ->delimiter(',')
            ->expected(3);
        sub->add_option("--t0", t0_flag, "start time");
        sub->add_option("--t-end", t_end_flag, "end time");
        sub->add_option("--step", step_flag, "integration step");
        sub->add_option("--record-every", record_flag, "record every n-th step");
        sub->add_option("--method", method_name, "rk4 | rk4_halved")
            ->check(CLI::IsMember({"rk4", "rk4_halved"}));
        sub->add_option("--out", out_flag, "output file");
        sub->add_option("--format", format_flag, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* simulate = app.add_subcommand("simulate", "integrate one trajectory");
    add_common(simulate);

    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    std::string suite;
    int samples = 50;
    std::uint64_t seed = 12345;
    std::string report_path;
    check->add_option("suite", suite, "brackets | jacobi | curl | limits | oracle")
        ->required()
        ->check(CLI::IsMember({"brackets", "jacobi", "curl", "limits", "oracle"}));
    add_common(check);
    check->add_option("--samples", samples, "randomized samples per configuration");
    check->add_option("--seed", seed, "RNG seed");
    check->add_option("--report", report_path, "write the JSON report here");

    CLI::App* sweep = app.add_subcommand("sweep", "grid of independent simulations");
    add_common(sweep);
    std::string kappa_grid, tau_grid, m_grid, omega_grid;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    sweep->add_option("--kappa-grid", kappa_grid, "kappa grid lo:hi:n");
    sweep->add_option("--tau-grid", tau_grid, "tau grid lo:hi:n");
    sweep->add_option("--m-grid", m_grid, "mass grid lo:hi:n");
    sweep->add_option("--omega-grid", omega_grid, "omega grid lo:hi:n");
    sweep->add_option("--jobs", jobs, "parallel workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints the message / help text
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        // config file first, then flags on top
        if (sub->count("--config")) apply_config_file(cfg, config_path);
        if (sub->count("--model")) cfg.model = model_from_string(model_name);
        if (sub->count("--family")) cfg.spec.family = family_from_string(family_name);
        if (sub->count("--variant")) cfg.spec.variant = variant_from_string(variant_name);
        if (sub->count("--kappa")) cfg.spec.kappa = kappa_flag;
        if (sub->count("--tau")) cfg.spec.tau = tau_flag;
        if (sub->count("--m")) cfg.cf.m = cfg.osc.m = m_flag;
        if (sub->count("--omega")) cfg.osc.omega = omega_flag;
        if (sub->count("--t0")) cfg.integration.t0 = t0_flag;
        if (sub->count("--t-end")) cfg.integration.t_end = t_end_flag;
        if (sub->count("--step")) cfg.integration.step = step_flag;
        if (sub->count("--record-every")) cfg.integration.record_every = record_flag;
        if (sub->count("--method")) {
            cfg.integration.method =
                method_name == "rk4" ? Method::RK4 : Method::RK4Halved;
        }
        if (sub->count("--out")) cfg.out_path = out_flag;
        if (sub->count("--format")) cfg.format = format_flag;
        if (sub->count("--force")) cfg.cf.force = vec3_from(force_flag, "--force");
        if (sub->count("--x0")) cfg.init.x0 = vec3_from(x0_flag, "--x0");
        if (sub->count("--v0")) cfg.init.v0 = vec3_from(v0_flag, "--v0");

        if (simulate->parsed()) {
            if (cfg.out_path.empty()) {
                cfg.out_path = cfg.format == "csv" ? "trajectory.csv" : "trajectory.json";
            }
            return cmd_simulate(cfg);
        }
        if (check->parsed()) {
            const bool single =
                check->count("--family") != 0 || check->count("--variant") != 0;
            return cmd_check(suite, cfg, single, samples, seed, report_path);
        }
        if (sweep->parsed()) {
            std::vector<GridAxis> axes;
            if (!kappa_grid.empty()) axes.push_back({"kappa", parse_grid(kappa_grid, "--kappa-grid")});
            if (!tau_grid.empty()) axes.push_back({"tau", parse_grid(tau_grid, "--tau-grid")});
            if (!m_grid.empty()) axes.push_back({"m", parse_grid(m_grid, "--m-grid")});
            if (!omega_grid.empty()) axes.push_back({"omega", parse_grid(omega_grid, "--omega-grid")});
            if (axes.empty()) axes.push_back({"kappa", {cfg.spec.kappa}});
            return cmd_sweep(cfg, axes, cfg.out_path, jobs);
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const NumericsError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
    return kExitOk;
}
