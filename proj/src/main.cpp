// rotorsym CLI: simulate trajectories, evaluate loop actions, find periodic
// orbits, and run the verification suites. Exit codes: 0 success, 1 usage or
// config error, 2 integration divergence, 3 orbit search did not converge,
// 4 verification failure. All error messages go to stderr with an `error:`
// prefix so scripts can grep them.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotorsym/action.hpp"
#include "rotorsym/config.hpp"
#include "rotorsym/integrate.hpp"
#include "rotorsym/io.hpp"
#include "rotorsym/orbits.hpp"
#include "rotorsym/problem.hpp"
#include "rotorsym/verify.hpp"

namespace {

using namespace rotorsym;

integrate::Picture parse_picture(const std::string& s) {
    if (s == "canonical") return integrate::Picture::Canonical;
    if (s == "twisted") return integrate::Picture::Twisted;
    if (s == "force") return integrate::Picture::Force;
    if (s == "euler-flow") return integrate::Picture::EulerFlow;
    throw std::invalid_argument("unknown picture: " + s);
}

Vec4 parse_z0(const std::string& s) {
    std::istringstream in(s);
    Vec4 z;
    char sep = ',';
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            in >> sep;
            if (sep != ',') throw std::invalid_argument("bad --z0: " + s);
        }
        if (!(in >> z[i])) {
            throw std::invalid_argument("--z0 needs four comma-separated reals");
        }
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("bad --z0: " + s);
    return z;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int cmd_simulate(const std::string& config_path, const std::string& picture_str,
                 const std::string& z0_str, double t1, int steps,
                 const std::string& out_path) {
    const domain::ProblemSpec spec = domain::load_config_file(config_path);
    const integrate::Picture picture = parse_picture(picture_str);
    const Vec4 z0 = parse_z0(z0_str);
    const integrate::Trajectory traj =
        integrate::integrate(spec, picture, z0, 0.0, t1, steps);
    if (out_path.empty()) {
        io::write_trajectory_csv(std::cout, traj);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        io::write_trajectory_csv(out, traj);
    }
    return 0;
}

int cmd_find_orbit(const std::string& config_path, const std::string& method,
                   const std::string& picture_str, const std::string& z0_str,
                   const std::string& loop_path, const std::string& functional_str,
                   double tol, int max_iter, int seed_count,
                   const std::string& out_path) {
    const domain::ProblemSpec spec = domain::load_config_file(config_path);
    orbits::OrbitResult result;
    if (method == "shooting") {
        if (z0_str.empty()) {
            throw std::invalid_argument("shooting needs --z0 as the initial guess");
        }
        const Vec4 z0 = parse_z0(z0_str);
        const integrate::Picture picture = parse_picture(picture_str);
        result = seed_count > 1
                     ? orbits::find_orbit_multistart(spec, picture, z0, tol,
                                                     max_iter, seed_count)
                     : orbits::find_orbit_shooting(spec, picture, z0, tol, max_iter);
    } else if (method == "variational") {
        if (loop_path.empty()) {
            throw std::invalid_argument("variational needs --loop with the guess loop");
        }
        const domain::DiscreteLoop guess = io::read_loop_csv_file(loop_path);
        const orbits::Functional functional =
            functional_str == "symplectic" ? orbits::Functional::Symplectic
                                           : orbits::Functional::Classical;
        result = orbits::find_orbit_variational(spec, functional, guess, tol, max_iter);
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }

    std::string loop_file;
    if (!out_path.empty()) {
        loop_file = out_path + ".loop.csv";
        io::write_loop_csv_file(loop_file, result.loop);
    }
    const std::string json = orbits::orbit_result_json(result, loop_file);
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        write_text(out_path, json + "\n");
        std::cout << json << "\n";
    }
    return result.converged ? 0 : 3;
}

int cmd_action(const std::string& config_path, const std::string& loop_path,
               const std::string& functional, const std::string& out_path) {
    const domain::ProblemSpec spec = domain::load_config_file(config_path);
    const domain::DiscreteLoop loop = io::read_loop_csv_file(loop_path);
    nlohmann::json j;
    j["functional"] = functional;
    if (functional == "symplectic") {
        j["value"] = action::symplectic_action(spec, loop);
        const action::PhaseGradient g = action::symplectic_action_gradient(spec, loop);
        double sup = 0.0;
        for (const Vec2& v : g.dq) sup = std::max(sup, norm_inf(v));
        for (const Vec2& v : g.dp) sup = std::max(sup, norm_inf(v));
        j["gradient_sup"] = sup;
    } else if (functional == "classical") {
        j["value"] = action::classical_action(spec, loop);
        double sup = 0.0;
        for (const Vec2& v : action::classical_action_gradient(spec, loop)) {
            sup = std::max(sup, norm_inf(v));
        }
        j["gradient_sup"] = sup;
    } else {
        throw std::invalid_argument("unknown functional: " + functional);
    }
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) write_text(out_path, text + "\n");
    return 0;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("ROTORSYM_DATA_DIR")) return env;
    std::ifstream probe("tests/data/regression_loop.csv");
    if (probe) return "tests/data";
    return "";
}

int cmd_verify(const std::string& config_path, bool all_presets,
               const std::string& out_path) {
    if (config_path.empty() && !all_presets) {
        std::cerr << "error: verify needs --config or --all-presets\n";
        return 1;
    }
    std::vector<verify::CheckResult> checks;
    if (!config_path.empty()) {
        const domain::ProblemSpec spec = domain::load_config_file(config_path);
        for (auto& c : verify::spec_checks(spec, config_path)) {
            checks.push_back(std::move(c));
        }
    }
    if (all_presets) {
        for (const verify::NamedSpec& named : verify::shipped_presets()) {
            for (auto& c : verify::spec_checks(named.spec, named.name)) {
                checks.push_back(std::move(c));
            }
        }
        for (auto& c : verify::acceptance_checks(default_data_dir())) {
            checks.push_back(std::move(c));
        }
    }
    std::ostringstream report;
    verify::write_report(report, checks);
    std::cout << report.str();
    if (!out_path.empty()) write_text(out_path, report.str());
    return verify::all_pass(checks) ? 0 : 4;
}

template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const domain::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const integrate::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain::UnsupportedFamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar magnetic Hamiltonian toolkit"};
    app.require_subcommand(0, 1);

    std::string config_path;
    std::string out_path;
    std::string picture_str = "canonical";
    std::string method_str = "shooting";
    std::string functional_str = "classical";
    std::string z0_str;
    std::string loop_path;
    double t1 = 1.0;
    double tol = 1e-9;
    int steps = 4096;
    int max_iter = 50;
    int seed_count = 1;
    bool all_presets = false;

    const auto pictures =
        CLI::IsMember({"canonical", "twisted", "force", "euler-flow"});

    CLI::App* sim = app.add_subcommand("simulate", "integrate a trajectory to CSV");
    sim->add_option("--config", config_path, "problem JSON file")->required();
    sim->add_option("--picture", picture_str, "dynamical picture")->check(pictures);
    sim->add_option("--z0", z0_str, "initial state a,b,c,d")->required();
    sim->add_option("--t1", t1, "final time");
    sim->add_option("--steps", steps, "RK4 step count")
        ->check(CLI::PositiveNumber);
    sim->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* orb = app.add_subcommand("find-orbit", "search for a periodic orbit");
    orb->add_option("--config", config_path, "problem JSON file")->required();
    orb->add_option("--method", method_str, "search method")
        ->check(CLI::IsMember({"shooting", "variational"}));
    orb->add_option("--picture", picture_str, "picture for shooting")
        ->check(pictures);
    orb->add_option("--z0", z0_str, "shooting guess a,b,c,d");
    orb->add_option("--loop", loop_path, "guess loop CSV for the variational method");
    orb->add_option("--functional", functional_str, "variational functional")
        ->check(CLI::IsMember({"classical", "symplectic"}));
    orb->add_option("--tol", tol, "convergence tolerance");
    orb->add_option("--max-iter", max_iter, "iteration cap")
        ->check(CLI::PositiveNumber);
    orb->add_option("--seed-count", seed_count, "multi-start count for shooting")
        ->check(CLI::PositiveNumber);
    orb->add_option("--out", out_path, "result JSON path; <out>.loop.csv gets the loop");

    CLI::App* act = app.add_subcommand("action", "evaluate a loop action");
    act->add_option("--config", config_path, "problem JSON file")->required();
    act->add_option("--loop", loop_path, "loop CSV file")->required();
    act->add_option("--functional", functional_str, "functional to evaluate")
        ->check(CLI::IsMember({"classical", "symplectic"}));
    act->add_option("--out", out_path, "also write the JSON here");

    CLI::App* ver = app.add_subcommand("verify", "run verification checks");
    ver->add_option("--config", config_path, "check one problem JSON file");
    ver->add_flag("--all-presets", all_presets,
                  "run preset checks plus the full acceptance suite");
    ver->add_option("--out", out_path, "also write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (sim->parsed()) {
        return guarded([&] {
            return cmd_simulate(config_path, picture_str, z0_str, t1, steps, out_path);
        });
    }
    if (orb->parsed()) {
        return guarded([&] {
            return cmd_find_orbit(config_path, method_str, picture_str, z0_str,
                                  loop_path, functional_str, tol, max_iter,
                                  seed_count, out_path);
        });
    }
    if (act->parsed()) {
        return guarded([&] {
            return cmd_action(config_path, loop_path, functional_str, out_path);
        });
    }
    if (ver->parsed()) {
        return guarded([&] { return cmd_verify(config_path, all_presets, out_path); });
    }
    std::cout << app.help();
    return 1;
}
