// End-to-end tests driving the nhtwist binary (path injected as NHTWIST_BIN).
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Scratch {
public:
    Scratch() {
        dir_ = fs::temp_directory_path() /
               ("nhtwist_cli_" + std::to_string(counter_++));
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    const fs::path& dir() const { return dir_; }

    RunResult run(const std::string& args) const {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = "cd '" + dir_.string() + "' && '" NHTWIST_BIN "' " +
                                args + " > '" + out.string() + "' 2> '" +
                                err.string() + "'";
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

private:
    fs::path dir_;
    static inline int counter_ = 0;
};

}  // namespace

TEST_CASE("simulate: undeformed run writes a classical parabola") {
    Scratch box;
    const RunResult r = box.run(
        "simulate --model constant_force --kappa 0 --force 1,0,0 --x0 0,0,0 "
        "--v0 0,0,0 --t-end 2 --step 0.001 --record-every 2000 --out t.csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("undeformed") != std::string::npos);
    const std::string csv = slurp(box.dir() / "t.csv");
    CHECK(csv.rfind("t,x1,x2,x3,p1,p2,p3,energy,f_t\n", 0) == 0);
    // last row: x1 = F t^2 / 2m = 2 at t = 2
    const auto last = csv.rfind('\n', csv.size() - 2);
    std::istringstream row(csv.substr(last + 1));
    std::string field;
    std::getline(row, field, ',');  // t
    CHECK(std::stod(field) == doctest::Approx(2.0));
    std::getline(row, field, ',');  // x1
    CHECK(std::stod(field) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fs::exists(box.dir() / "t.csv.meta.json"));
}

TEST_CASE("simulate: oscillator summary reports the conservative classification") {
    Scratch box;
    const RunResult canonical = box.run(
        "simulate --model oscillator --family k1 --variant limit --kappa 0.4 "
        "--t-end 2 --step 0.01 --out o.csv");
    CHECK(canonical.code == 0);
    CHECK(canonical.out.find("conservative force term: true") != std::string::npos);

    const RunResult deformed = box.run(
        "simulate --model oscillator --family k2 --variant limit --kappa 0.4 "
        "--t-end 2 --step 0.01 --out o2.csv");
    CHECK(deformed.code == 0);
    CHECK(deformed.out.find("conservative force term: false") != std::string::npos);
}

TEST_CASE("simulate: Lie-algebraic deformation reports its acceleration offset") {
    Scratch box;
    const RunResult r = box.run(
        "simulate --model constant_force --family k2 --variant limit --kappa 0.5 "
        "--m 2 --force 1,0,0 --t-end 2 --step 0.01 --out t.csv");
    CHECK(r.code == 0);
    // G - F = (-m kappa F2 / 2, m kappa F1 / 2, 0) = (0, 0.5, 0)
    CHECK(r.out.find("constant acceleration offset G - F = (0, 0.5, 0)") !=
          std::string::npos);
}

TEST_CASE("simulate: json format emits an array of samples plus a meta sidecar") {
    Scratch box;
    const RunResult r = box.run(
        "simulate --model oscillator --family k3 --variant nh- --kappa 0.3 --tau 2 "
        "--t-end 1 --step 0.01 --record-every 10 --format json --out t.json");
    CHECK(r.code == 0);
    const json data = json::parse(slurp(box.dir() / "t.json"));
    REQUIRE(data.is_array());
    CHECK(data.size() == 11);
    CHECK(data[0].contains("t"));
    CHECK(data[0].contains("x"));
    CHECK(data[0].contains("energy"));
    CHECK(data[0].contains("f_t"));
    CHECK(data[0].contains("M_f"));
    const json meta = json::parse(slurp(box.dir() / "t.json.meta.json"));
    CHECK(meta["model"] == "oscillator");
    CHECK(meta["deformation"]["family"] == "k3");
    CHECK(meta["integration"]["step"] == 0.01);
}

TEST_CASE("simulate: identical configs give byte-identical CSV output") {
    Scratch box;
    const std::string args =
        "simulate --model constant_force --family k5 --variant nh+ --kappa 0.7 "
        "--tau 3 --force 0.3,-0.4,0.1 --t-end 3 --step 0.005 --record-every 10";
    CHECK(box.run(args + " --out a.csv").code == 0);
    CHECK(box.run(args + " --out b.csv").code == 0);
    const std::string a = slurp(box.dir() / "a.csv");
    CHECK(!a.empty());
    CHECK(a == slurp(box.dir() / "b.csv"));
}

TEST_CASE("simulate: config file with flag overrides") {
    Scratch box;
    {
        std::ofstream cfg(box.dir() / "run.json");
        cfg << R"({
  "model": "constant_force",
  "deformation": {"family": "k2", "variant": "limit", "kappa": 0.2},
  "constant_force": {"m": 1.0, "F": [1, 0, 0]},
  "initial": {"x0": [0, 0, 0], "v0": [0, 0, 0]},
  "integration": {"t_end": 1.0, "step": 0.01},
  "output": {"path": "from_config.csv", "format": "csv"}
})";
    }
    const RunResult from_config = box.run("simulate --config run.json");
    CHECK(from_config.code == 0);
    CHECK(from_config.out.find("kappa=0.20000000000000001") != std::string::npos);
    CHECK(fs::exists(box.dir() / "from_config.csv"));

    const RunResult overridden = box.run("simulate --config run.json --kappa 0.75");
    CHECK(overridden.code == 0);
    CHECK(overridden.out.find("kappa=0.75") != std::string::npos);
}

TEST_CASE("simulate: invalid configuration exits 2") {
    Scratch box;
    CHECK(box.run("simulate --variant nh+ --tau -1").code == 2);
    CHECK(box.run("simulate --m -2").code == 2);
    CHECK(box.run("simulate --step 0").code == 2);
    CHECK(box.run("simulate --config missing.json").code == 2);
    CHECK(box.run("badcommand").code == 2);
}

TEST_CASE("simulate: integration blow-up exits 3 and reports the time") {
    Scratch box;
    // NH+ deformation far beyond its time scale overflows cosh
    const RunResult r = box.run(
        "simulate --model constant_force --family k4 --variant nh+ --kappa 1 "
        "--tau 0.001 --force 0,1,0 --t-end 10 --step 0.01 --out t.csv");
    CHECK(r.code == 3);
    CHECK(r.err.find("numerical failure") != std::string::npos);
    CHECK(r.err.find("t = ") != std::string::npos);
}

TEST_CASE("simulate: stiff oscillator runs trigger a heuristic warning") {
    Scratch box;
    const RunResult r = box.run(
        "simulate --model oscillator --family k4 --variant nh+ --kappa 1 "
        "--tau 0.1 --t-end 3 --step 0.01 --out t.csv");
    CHECK(r.err.find("stiff") != std::string::npos);
    CHECK(r.code == 3);  // and indeed it blows up
}

TEST_CASE("check: suites pass and write reports") {
    Scratch box;
    const RunResult brackets = box.run("check brackets --samples 5 --report rep.json");
    CHECK(brackets.code == 0);
    CHECK(brackets.out.find("all passed") != std::string::npos);
    const json rep = json::parse(slurp(box.dir() / "rep.json"));
    CHECK(rep["suite"] == "brackets");
    CHECK(rep["configs"].size() == 18);
    CHECK(rep["passed"] == true);

    CHECK(box.run("check jacobi --samples 3").code == 0);
    CHECK(box.run("check limits").code == 0);
    CHECK(box.run("check curl --model constant_force --samples 10").code == 0);
}

TEST_CASE("check: oscillator curl passes only for the canonical configuration") {
    Scratch box;
    const RunResult all = box.run("check curl --model oscillator --samples 10");
    CHECK(all.code == 1);
    // count per-config verdicts: canonical k1/limit passes, the rest fail
    std::istringstream lines(all.out);
    std::string line;
    int passes = 0, fails = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("[PASS]", 0) == 0) {
            ++passes;
            CHECK(line.find("k1/limit") != std::string::npos);
        }
        if (line.rfind("[FAIL]", 0) == 0) ++fails;
    }
    CHECK(passes == 1);
    CHECK(fails == 17);

    CHECK(box.run("check curl --model oscillator --family k1 --variant limit "
                  "--samples 10")
              .code == 0);
    CHECK(box.run("check curl --model oscillator --family k1 --variant limit "
                  "--kappa 0 --samples 10")
              .code == 0);
}

TEST_CASE("check: single-configuration scope") {
    Scratch box;
    const RunResult one =
        box.run("check brackets --family k4 --variant nh- --samples 5");
    CHECK(one.code == 0);
    CHECK(one.out.find("1 configuration(s)") != std::string::npos);
    // a limit config cannot drive the limits suite
    CHECK(box.run("check limits --family k1 --variant limit").code == 2);
}

TEST_CASE("sweep: a single cell reproduces the simulate trajectory endpoint") {
    Scratch box;
    const std::string model_args =
        "--model oscillator --family k2 --variant nh- --kappa 0.6 --tau 1.5 "
        "--x0 1,0,0 --v0 0,0.5,0 --t-end 2 --step 0.01";
    CHECK(box.run("simulate " + model_args + " --record-every 200 --out sim.csv").code == 0);
    CHECK(box.run("sweep " + model_args + " --jobs 2 --out sweep.csv").code == 0);

    const std::string sim = slurp(box.dir() / "sim.csv");
    const auto last = sim.rfind('\n', sim.size() - 2);
    std::istringstream sim_row(sim.substr(last + 1));
    std::string t, x1, x2, x3;
    std::getline(sim_row, t, ',');
    std::getline(sim_row, x1, ',');
    std::getline(sim_row, x2, ',');
    std::getline(sim_row, x3, ',');

    const std::string sweep = slurp(box.dir() / "sweep.csv");
    std::istringstream sweep_lines(sweep);
    std::string header, row;
    std::getline(sweep_lines, header);
    std::getline(sweep_lines, row);
    // final_x1..x3 sit in columns 13..15 (0-based 12..14)
    std::istringstream cells(row);
    std::string cell;
    std::string got[3];
    for (int i = 0; i < 15; ++i) {
        std::getline(cells, cell, ',');
        if (i >= 12) got[i - 12] = cell;
    }
    CHECK(got[0] == x1);
    CHECK(got[1] == x2);
    CHECK(got[2] == x3);
}

TEST_CASE("sweep: parallel run is byte-identical to the serial one") {
    Scratch box;
    const std::string args =
        "sweep --model constant_force --family k3 --variant nh- --tau 2 "
        "--force 0.5,0.5,0 --t-end 2 --step 0.01 --kappa-grid -1:1:7 "
        "--m-grid 0.5:2:3";
    CHECK(box.run(args + " --jobs 1 --out serial.csv").code == 0);
    CHECK(box.run(args + " --jobs 4 --out parallel.csv").code == 0);
    const std::string serial = slurp(box.dir() / "serial.csv");
    CHECK(!serial.empty());
    CHECK(serial == slurp(box.dir() / "parallel.csv"));
    // 7 x 3 cells plus header
    CHECK(std::count(serial.begin(), serial.end(), '\n') == 22);
}

TEST_CASE("sweep: kappa sweep shows deviation from classical growing from zero") {
    Scratch box;
    const RunResult r = box.run(
        "sweep --model constant_force --family k2 --variant limit "
        "--force 1,0,0 --x0 0,0,0 --v0 0,0,0 --t-end 4 --step 0.01 "
        "--kappa-grid 0:1:5 --out k.csv");
    CHECK(r.code == 0);
    std::istringstream lines(slurp(box.dir() / "k.csv"));
    std::string line;
    std::getline(lines, line);  // header
    double prev = -1.0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        double dev = 0.0;
        for (int i = 0; i < 19; ++i) {
            std::getline(cells, cell, ',');
            if (i == 18) dev = std::stod(cell);
        }
        CHECK(dev > prev);  // strictly growing with kappa, starting at 0
        prev = dev;
    }
    CHECK(prev > 0.0);
}

TEST_CASE("sweep: tau sweep converges to the Galilean-limit cell") {
    Scratch box;
    const std::string common =
        "--model constant_force --family k3 --kappa 0.5 --force 1,0,0 "
        "--x0 0,0,0 --v0 0,0,0 --t-end 2 --step 0.01";
    CHECK(box.run("simulate " + common +
                  " --variant limit --record-every 200 --out lim.csv")
              .code == 0);
    CHECK(box.run("sweep " + common +
                  " --variant nh- --tau-grid 10:1000:3 --out tau.csv")
              .code == 0);

    // limit-run endpoint
    const std::string lim = slurp(box.dir() / "lim.csv");
    std::istringstream lim_row(lim.substr(lim.rfind('\n', lim.size() - 2) + 1));
    std::string cell;
    double lim_x[3] = {};
    for (int i = 0; i < 4; ++i) {
        std::getline(lim_row, cell, ',');
        if (i >= 1) lim_x[i - 1] = std::stod(cell);
    }

    std::istringstream lines(slurp(box.dir() / "tau.csv"));
    std::string line;
    std::getline(lines, line);  // header
    double prev = std::numeric_limits<double>::infinity();
    double final_dev = 0.0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        double x[3] = {};
        for (int i = 0; i < 15; ++i) {
            std::getline(cells, cell, ',');
            if (i >= 12) x[i - 12] = std::stod(cell);
        }
        final_dev = std::hypot(x[0] - lim_x[0], x[1] - lim_x[1], x[2] - lim_x[2]);
        CHECK(final_dev < prev);  // deviation shrinks as tau grows
        prev = final_dev;
    }
    CHECK(final_dev <= 1e-4);
}

TEST_CASE("sweep: per-cell failures are recorded, healthy cells survive") {
    Scratch box;
    // tau grid straddles a blow-up: tiny tau overflows, large tau is fine
    const RunResult r = box.run(
        "sweep --model constant_force --family k4 --variant nh+ --kappa 1 "
        "--force 0,1,0 --t-end 10 --step 0.01 --tau-grid 0.001:5:2 --out s.csv");
    CHECK(r.code == 0);  // not every cell failed
    const std::string csv = slurp(box.dir() / "s.csv");
    CHECK(csv.find("non-finite") != std::string::npos);
    CHECK(csv.find("ok") != std::string::npos);
}
