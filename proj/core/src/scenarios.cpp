#include "dqlab/scenarios.hpp"

#include <cstdlib>
#include <iostream>
#include <numbers>

#include <json.hpp>

#include "dqlab/acceptance.hpp"
#include "dqlab/doubling.hpp"
#include "dqlab/dynamics.hpp"
#include "dqlab/io.hpp"
#include "dqlab/langevin.hpp"
#include "dqlab/model.hpp"
#include "dqlab/ncplane.hpp"
#include "dqlab/quantum.hpp"
#include "dqlab/spectral.hpp"
#include "dqlab/su11.hpp"

namespace dqlab::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

fs::path output_dir(const ScenarioConfig& cfg) {
    if (const char* env = std::getenv("DQLAB_OUTPUT_DIR"); env && *env) return fs::path(env);
    return cfg.output.directory;
}

json provenance(const std::string& module, const ScenarioConfig& cfg) {
    return json{{"module", module}, {"config", cfg.config_hash}};
}

void write_json(const fs::path& file, const json& body) {
    io::write_text_file(file, body.dump(2) + "\n");
}

// --- classical ----------------------------------------------------------------

std::vector<fs::path> run_classical(const ScenarioConfig& cfg) {
    const auto& p = cfg.params;
    const auto d = model::derive_params(p);
    const double dt = cfg.num("dt", 1e-3 * d.tau);
    const double t_end = cfg.num("t_end", 10.0 * d.tau);
    const std::string chart = cfg.str("chart", "rot");

    dynamics::IntegrateOptions opt;
    if (cfg.str("method", "rk4") == "adaptive") opt.method = dynamics::Method::Adaptive;
    opt.rel_tol = cfg.num("rel_tol", 1e-10);

    dynamics::TrajectoryXY traj_xy;
    dynamics::TrajectoryRot traj;
    if (chart == "rot") {
        const dynamics::PhaseStateRot s0{cfg.num("x1", 1.0), cfg.num("x2", 0.0),
                                         cfg.num("v1", 0.0), cfg.num("v2", 0.0), 0.0};
        traj = dynamics::integrate_rot(s0, p, dt, t_end, opt);
    } else if (chart == "xy") {
        const dynamics::PhaseStateXY s0{cfg.num("x", 1.0), cfg.num("y", 0.0),
                                        cfg.num("vx", 0.0), cfg.num("vy", 0.0), 0.0};
        traj_xy = dynamics::integrate_xy(s0, p, dt, t_end, opt);
        traj.dt = traj_xy.dt;
        traj.states.reserve(traj_xy.states.size());
        for (const auto& s : traj_xy.states) traj.states.push_back(dynamics::to_rotated(s));
    } else {
        throw ConfigError("config: chart must be 'rot' or 'xy', got '" + chart + "'");
    }

    const auto dir = output_dir(cfg);
    std::vector<fs::path> files;

    if (cfg.output.csv) {
        const auto traj_file = dir / "trajectory.csv";
        if (chart == "rot") {
            io::CsvWriter w(traj_file, "dynamics", cfg.config_hash, {"t", "x1", "x2", "v1", "v2"});
            for (const auto& s : traj.states) w.row(std::array{s.t, s.x1, s.x2, s.v1, s.v2});
        } else {
            io::CsvWriter w(traj_file, "dynamics", cfg.config_hash, {"t", "x", "y", "vx", "vy"});
            for (const auto& s : traj_xy.states) w.row(std::array{s.t, s.x, s.y, s.vx, s.vy});
        }
        files.push_back(traj_file);

        const auto obs_file = dir / "observables.csv";
        io::CsvWriter w(obs_file, "su11", cfg.config_hash,
                        {"t", "C", "J2", "H", "HI", "HII", "T", "S", "F"});
        for (const auto& s : traj.states) {
            const auto obs = su11::observables(s, p);
            const auto split = su11::hooft_hamiltonian(obs, d);
            const auto th = su11::thermo(obs, d, p.hbar);
            w.row(std::array{s.t, obs.C, obs.J2, split.H, split.HI, split.HII, th.T, th.S, th.F});
        }
        files.push_back(obs_file);
    }
    return files;
}

// --- langevin -----------------------------------------------------------------

std::vector<fs::path> run_langevin(const ScenarioConfig& cfg) {
    langevin::LangevinConfig lc;
    lc.kBT = cfg.num("kbt", 1.0);
    lc.dt = cfg.num("dt", 1e-3);
    lc.t_end = cfg.num("t_end", 10.0);
    lc.n_paths = cfg.num_int("n_paths", 1000);
    lc.seed = cfg.num_u64("seed", 1);
    lc.with_spring = cfg.flag("with_spring", false);
    lc.record_stride = cfg.num_int("record_stride", 0);
    lc.x0 = cfg.num("x0", 0.0);
    lc.v0 = cfg.num("v0", 0.0);

    const auto ens = langevin::simulate_langevin(cfg.params, lc);
    const auto summary = langevin::velocity_variance(ens);

    const auto dir = output_dir(cfg);
    std::vector<fs::path> files;
    if (cfg.output.json) {
        const auto file = dir / "langevin.json";
        json body;
        body["_provenance"] = provenance("langevin", cfg);
        body["n_paths"] = summary.n_paths;
        body["kBT"] = ens.kBT;
        body["mean_v2"] = summary.mean_v2;
        body["stderr_v2"] = summary.stderr_v2;
        body["seed"] = ens.seed;
        write_json(file, body);
        files.push_back(file);
    }
    if (cfg.output.csv && lc.record_stride > 0) {
        const auto file = dir / "paths.csv";
        io::CsvWriter w(file, "langevin", cfg.config_hash, {"path", "t", "x", "v"});
        for (std::size_t ip = 0; ip < ens.paths.size(); ++ip) {
            const auto& path = ens.paths[ip];
            for (std::size_t s = 0; s < path.times.size(); ++s)
                w.row(std::array{static_cast<double>(ip), path.times[s], path.x[s], path.v[s]});
        }
        files.push_back(file);
    }
    return files;
}

// --- quantum ------------------------------------------------------------------

std::vector<fs::path> run_quantum(const ScenarioConfig& cfg) {
    const auto& p = cfg.params;
    const auto d = model::derive_params(p);
    const auto grid = quantum::Grid1D::uniform(cfg.num("x_min", -8.0), cfg.num("x_max", 8.0),
                                               cfg.num_int("grid_n", 256));
    const auto v = quantum::harmonic_potential(grid, p.m, d.Omega);

    const auto dir = output_dir(cfg);
    std::vector<fs::path> files;

    // Bohr spectrum of a two-level superposition.
    const auto basis = quantum::discrete_eigenbasis(grid, v, p.m, p.hbar, 2);
    quantum::WaveFunction psi{grid, ((basis.states.col(0) + basis.states.col(1)) / std::sqrt(2.0))
                                        .cast<std::complex<double>>()};
    psi.normalize();
    const int i = static_cast<int>((0.7 - grid.x_min) / grid.dx);
    const int j = static_cast<int>((-0.7 - grid.x_min) / grid.dx);
    const int n_samples = cfg.num_int("n_samples", 1024);
    const int record_every = cfg.num_int("record_every", 5);
    const double dt = cfg.num("dt", 0.01);
    const auto series = quantum::evolve_entry_series(psi, v, p, dt, n_samples, i, j, record_every);
    const auto peaks = quantum::bohr_frequencies(series, dt * record_every, 0.1);

    if (cfg.output.json) {
        const auto file = dir / "bohr_peaks.json";
        json body;
        body["_provenance"] = provenance("quantum", cfg);
        body["sample_dt"] = dt * record_every;
        body["n_samples"] = n_samples;
        body["peaks"] = json::array();
        for (const auto& peak : peaks)
            body["peaks"].push_back({{"omega", peak.omega}, {"amplitude", peak.amplitude}});
        write_json(file, body);
        files.push_back(file);
    }

    // Wigner snapshot of the ground state.
    if (cfg.output.csv) {
        const auto psi0 = quantum::ho_eigenstate(grid, 0, p.m, d.Omega, p.hbar);
        const auto rho = quantum::density_from_wavefunction(psi0);
        const auto w = quantum::wigner_transform(rho, p.hbar);
        const auto file = dir / "wigner.csv";
        io::CsvWriter out(file, "quantum", cfg.config_hash, {"x", "p", "W"});
        for (std::size_t ix = 0; ix < w.x.size(); ++ix)
            for (std::size_t jp = 0; jp < w.p.size(); ++jp)
                out.row(std::array{w.x[ix], w.p[jp],
                                   w.W(static_cast<Eigen::Index>(ix), static_cast<Eigen::Index>(jp))});
        files.push_back(file);
    }

    // Radial spectrum.
    if (cfg.output.json) {
        const auto levels = quantum::radial_spectrum(
            d, p.m, p.hbar, {cfg.num("r_max", 12.0), cfg.num_int("radial_n", 2000)},
            cfg.num_int("n_levels", 3), cfg.num("tolerance", 1e-4));
        const auto file = dir / "radial_spectrum.json";
        json body;
        body["_provenance"] = provenance("quantum", cfg);
        body["levels"] = levels;
        body["alpha"] = cfg.num("alpha", 2.0);
        body["zero_point"] = su11::spectrum_level(0, cfg.num("alpha", 2.0), d, p.hbar).E;
        write_json(file, body);
        files.push_back(file);
    }
    return files;
}

// --- phase ----------------------------------------------------------------------

std::vector<fs::path> run_phase(const ScenarioConfig& cfg) {
    const auto& p = cfg.params;
    double l2;
    if (cfg.has("l2")) {
        l2 = cfg.num_required("l2");
    } else {
        if (!(p.gamma > 0.0))
            throw ConfigError("config: phase scenario needs gamma > 0 or an explicit l2");
        l2 = p.hbar / p.gamma;
    }

    ncplane::PathPolygon path;
    path.closed = true;
    if (cfg.has("path_csv")) {
        path.vertices = io::read_xy_csv(cfg.str("path_csv", ""));
    } else {
        path.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    }

    const double area = ncplane::signed_area(path);
    const double theta = ncplane::interference_phase(path, l2);
    const auto pair = ncplane::build_nc_pair(l2, cfg.num_int("nc_dim", 64));
    const double residual = ncplane::subblock_commutator_residual(pair);

    const auto dir = output_dir(cfg);
    std::vector<fs::path> files;
    if (cfg.output.json) {
        const auto file = dir / "phase.json";
        json body;
        body["_provenance"] = provenance("ncplane", cfg);
        body["area"] = area;
        body["L2"] = l2;
        body["theta"] = theta;
        body["subblock_commutator_residual"] = residual;
        write_json(file, body);
        files.push_back(file);
    }
    return files;
}

// --- spectral ---------------------------------------------------------------------

std::vector<fs::path> run_spectral(const ScenarioConfig& cfg) {
    const std::string kind = cfg.str("cutoff", "gaussian");
    spectral::CutoffFunction f = spectral::CutoffFunction::gaussian();
    if (kind == "exponential") f = spectral::CutoffFunction::exponential();
    else if (kind == "sharp") f = spectral::CutoffFunction::sharp(cfg.num("u_max", 1.0));
    else if (kind != "gaussian")
        throw ConfigError("config: cutoff must be gaussian, exponential or sharp, got '" + kind +
                          "'");

    const auto m = spectral::cutoff_momenta(f);
    const auto terms = spectral::assemble_action(m, cfg.num("a0", 1.0), cfg.num("a2", 1.0),
                                                 cfg.num("a4", 1.0), cfg.num("lambda", 1.0));

    const auto dir = output_dir(cfg);
    std::vector<fs::path> files;
    if (cfg.output.json) {
        const auto file = dir / "spectral.json";
        json body;
        body["_provenance"] = provenance("spectral", cfg);
        body["f0"] = m.f0;
        body["f2"] = m.f2;
        body["f4"] = m.f4;
        body["terms"] = {{"cosmological", terms.cosmological},
                         {"einstein_hilbert", terms.einstein_hilbert},
                         {"yang_mills", terms.yang_mills}};
        body["total"] = terms.total;
        write_json(file, body);
        files.push_back(file);
    }
    return files;
}

// --- doubling ---------------------------------------------------------------------

std::vector<fs::path> run_doubling(const ScenarioConfig& cfg) {
    const int theta_steps = cfg.num_int("theta_steps", 9);
    const int n_modes_max = cfg.num_int("n_modes_max", 10);
    if (theta_steps < 2 || n_modes_max < 1)
        throw ConfigError("config: doubling needs theta_steps >= 2 and n_modes_max >= 1");

    const auto dir = output_dir(cfg);
    std::vector<fs::path> files;
    if (cfg.output.csv) {
        const auto file = dir / "doubling.csv";
        io::CsvWriter w(file, "doubling", cfg.config_hash, {"theta", "N", "overlap"});
        for (int step = 0; step < theta_steps; ++step) {
            const double theta =
                0.5 * std::numbers::pi * static_cast<double>(step) / (theta_steps - 1);
            for (int n = 1; n <= n_modes_max; ++n)
                w.row(std::array{theta, static_cast<double>(n),
                                 doubling::theta_vacuum_overlap(theta, n)});
        }
        files.push_back(file);
    }
    return files;
}

// --- acceptance --------------------------------------------------------------------

std::vector<fs::path> run_acceptance_scenario(const ScenarioConfig& cfg) {
    const auto report = acceptance::run_acceptance();

    for (const auto& c : report.criteria) {
        std::cout << (c.passed && c.runtime_ok ? "PASS" : "FAIL") << " criterion " << c.id << " ("
                  << c.name << "): " << c.detail;
        std::cout << " [" << c.seconds << " s]\n";
    }
    std::cout << (report.all_passed ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " in "
              << report.total_seconds << " s\n";

    const auto dir = output_dir(cfg);
    const auto file = dir / "acceptance.json";
    json body;
    body["_provenance"] = provenance("acceptance", cfg);
    body["all_passed"] = report.all_passed;
    body["criteria"] = json::array();
    for (const auto& c : report.criteria)
        body["criteria"].push_back({{"id", c.id},
                                    {"name", c.name},
                                    {"passed", c.passed},
                                    {"runtime_ok", c.runtime_ok},
                                    {"detail", c.detail}});
    write_json(file, body);

    if (!report.all_passed)
        throw NumericError("acceptance: criteria failed (see " + file.string() + ")");
    return {file};
}

} // namespace

std::vector<ScenarioInfo> list_scenarios() {
    return {
        {"classical", "doubled-oscillator trajectory with SU(1,1) observable traces"},
        {"langevin", "Euler-Maruyama Brownian ensemble and velocity-variance summary"},
        {"quantum", "doubled density-matrix evolution, Bohr peaks, Wigner snapshot, radial levels"},
        {"phase", "noncommutative-plane interference phase of a closed path"},
        {"spectral", "cutoff momenta and truncated spectral-action terms"},
        {"doubling", "q-deformed coproduct and theta-vacuum overlap tables"},
        {"acceptance", "full invariant suite with machine-readable pass/fail report"},
    };
}

std::vector<std::filesystem::path> run_scenario(const ScenarioConfig& cfg) {
    if (cfg.scenario == "classical") return run_classical(cfg);
    if (cfg.scenario == "langevin") return run_langevin(cfg);
    if (cfg.scenario == "quantum") return run_quantum(cfg);
    if (cfg.scenario == "phase") return run_phase(cfg);
    if (cfg.scenario == "spectral") return run_spectral(cfg);
    if (cfg.scenario == "doubling") return run_doubling(cfg);
    if (cfg.scenario == "acceptance") return run_acceptance_scenario(cfg);
    throw ConfigError("config: unknown scenario '" + cfg.scenario + "'");
}

} // namespace dqlab::cli
