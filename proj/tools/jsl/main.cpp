// SPDX-License-Identifier: Apache-2.0
//
// jsl - numerical laboratory for right-jump processes and their
// soliton-like mean-field densities.
//
// Subcommands: linear, soliton-check, pde, swarm, phase-scan, velocity-table.
// Every run writes machine-readable artifacts into --out: the resolved
// config (config.json), data files (*.csv, 17 significant digits) and a
// report (report.json) embedding config, derived constants, measurements and
// built-in check verdicts. Exit code: 0 ok, 2 a check failed, 1 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jsl/analysis.hpp"
#include "jsl/csv.hpp"
#include "jsl/linear_jump.hpp"
#include "jsl/linear_process.hpp"
#include "jsl/mean_field.hpp"
#include "jsl/params.hpp"
#include "jsl/quadrature.hpp"
#include "jsl/soliton.hpp"
#include "jsl/special_functions.hpp"
#include "jsl/swarm.hpp"
#include "jsl/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string snake_key(std::string flag) {
    while (!flag.empty() && flag.front() == '-') flag.erase(flag.begin());
    for (char& c : flag)
        if (c == '-') c = '_';
    return flag;
}

// Binds CLI options, config-file keys and the config echo together so the
// three views cannot drift apart. Precedence: built-in default < config file
// < command-line flag.
class ConfigBinder {
  public:
    ConfigBinder(CLI::App* cmd, const json* file) : cmd_(cmd), file_(file) {}

    template <typename T>
    CLI::Option* option(const std::string& flag, T& var, const std::string& desc) {
        const std::string key = snake_key(flag);
        apply_file(key, var);
        writers_[key] = [&var](json& out, const std::string& k) { out[k] = var; };
        return cmd_->add_option(flag, var, desc);
    }

    CLI::Option* flag(const std::string& name, bool& var, const std::string& desc) {
        const std::string key = snake_key(name);
        apply_file(key, var);
        writers_[key] = [&var](json& out, const std::string& k) { out[k] = var; };
        return cmd_->add_flag(name, var, desc);
    }

    void reject_unknown_file_keys() const {
        if (!file_) return;
        for (const auto& item : file_->items())
            if (!writers_.contains(item.key()))
                throw UsageError("unknown config key '" + item.key() + "' for command '" +
                                 cmd_->get_name() + "'");
    }

    json resolved() const {
        json out;
        for (const auto& [key, write] : writers_) write(out, key);
        return out;
    }

  private:
    template <typename T>
    void apply_file(const std::string& key, T& var) {
        if (file_ && file_->contains(key)) {
            try {
                var = file_->at(key).get<T>();
            } catch (const json::exception&) {
                throw UsageError("config key '" + key + "' has the wrong type");
            }
        }
    }

    CLI::App* cmd_;
    const json* file_;
    std::map<std::string, std::function<void(json&, const std::string&)>> writers_;
};

struct CheckSet {
    json verdicts = json::object();
    bool all_passed = true;

    void record(const std::string& name, bool pass, const json& detail = {}) {
        json entry;
        entry["pass"] = pass;
        if (!detail.is_null()) entry["detail"] = detail;
        verdicts[name] = entry;
        all_passed = all_passed && pass;
    }
};

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::string token;
    for (char c : text + ",") {
        if (c == ',') {
            if (!token.empty()) values.push_back(std::stod(token));
            token.clear();
        } else {
            token += c;
        }
    }
    if (values.empty()) throw UsageError("empty numeric list: '" + text + "'");
    return values;
}

void write_report(const fs::path& dir, json report,
                  const std::chrono::steady_clock::time_point& started) {
    report["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    jsl::write_text_atomic(dir / "report.json", report.dump(2) + "\n");
}

json base_report(const std::string& command, const json& config) {
    json report;
    report["command"] = command;
    report["version"] = jsl::kVersion;
    report["config"] = config;
    return report;
}

fs::path prepare_out_dir(const std::string& out, const json& config) {
    fs::path dir(out);
    fs::create_directories(dir);
    jsl::write_text_atomic(dir / "config.json", config.dump(2) + "\n");
    return dir;
}

json velocity_constants(double m) {
    const auto v = jsl::soliton_velocity(m);
    json out;
    out["m"] = m;
    out["c_m"] = jsl::soliton_normalization(m);
    out["v_derived"] = v.derived;
    out["v_paper"] = v.paper;
    return out;
}

// KS distance between centered particle positions and the soliton profile of
// exponent m (both laws continuous; evaluated at the sample points).
double ks_vs_soliton(std::vector<double> centered, double m) {
    const double offset =
        1.0 - *std::min_element(centered.begin(), centered.end());
    for (double& p : centered) p += offset;
    const auto empirical = jsl::EmpiricalMixedCdf::from_positions(std::move(centered));
    return jsl::ks_distance(empirical, [m, offset](double x) {
        return jsl::soliton_cdf(x - offset, m);
    });
}

// ---------------------------------------------------------------------------
// linear: Monte Carlo ensemble of the single right-jump process vs the
// closed-form density.

struct LinearConfig {
    double lambda = 1.0;
    double t = 1.0;
    int paths = 100000;
    std::uint64_t seed = 42;
    std::string out = "out/linear";
};

int run_linear(const LinearConfig& config, const json& resolved) {
    const auto started = std::chrono::steady_clock::now();
    const fs::path dir = prepare_out_dir(config.out, resolved);
    const jsl::ModelParams params{config.lambda, 0.0, 1.0};

    const auto samples =
        jsl::sample_ensemble(config.t, params, config.seed, config.paths);

    jsl::CsvWriter csv({"replicate", "t", "position", "jump_count"});
    for (std::size_t r = 0; r < samples.size(); ++r)
        csv.add_row({static_cast<double>(r), samples[r].t, samples[r].position,
                     static_cast<double>(samples[r].jump_count)});
    csv.write(dir / "ensemble.csv");

    const auto empirical = jsl::EmpiricalMixedCdf::from_samples(samples);
    const jsl::LinearClosedForm form{config.lambda, config.t};
    const auto exact = form.cdf_at_sorted(empirical.positives);
    const double ks = jsl::ks_distance(empirical, form.atom_weight(), exact);

    const double atom_expected = std::exp(-config.t);
    const double atom_sigma =
        std::sqrt(atom_expected * (1.0 - atom_expected) / config.paths);

    // 0.01 is the gate at the canonical 1e5 paths; smaller ensembles get the
    // statistically matched bound.
    const double ks_gate = std::max(0.01, 3.0 / std::sqrt(config.paths));

    CheckSet checks;
    checks.record("ks_below_gate", ks < ks_gate,
                  json{{"ks", ks}, {"gate", ks_gate}});
    checks.record("atom_within_4_sigma",
                  std::abs(empirical.atom - atom_expected) < 4.0 * atom_sigma,
                  json{{"observed", empirical.atom}, {"expected", atom_expected}});

    json report = base_report("linear", resolved);
    report["measured"] = {{"ks", ks},
                          {"atom_fraction", empirical.atom},
                          {"atom_expected", atom_expected},
                          {"paths", config.paths}};
    report["checks"] = checks.verdicts;
    write_report(dir, report, started);
    return checks.all_passed ? 0 : 2;
}

// ---------------------------------------------------------------------------
// soliton-check: closed-form constants, normalization and rate-law
// cross-checks, and the traveling-wave residual table for both velocity
// constants.

struct SolitonCheckConfig {
    double m = 2.0;
    std::string out = "out/soliton-check";
};

int run_soliton_check(const SolitonCheckConfig& config, const json& resolved) {
    const auto started = std::chrono::steady_clock::now();
    const fs::path dir = prepare_out_dir(config.out, resolved);
    const double m = config.m;
    const jsl::SolitonProfile profile = jsl::SolitonProfile::make(m);
    const jsl::ModelParams params = jsl::ModelParams::soliton(m);

    CheckSet checks;

    // normalization: C_m inverts the quadrature mass of cosh^{-m}
    const double mass = jsl::integrate_value(
        [m](double xi) { return jsl::soliton_density(xi, m); }, -50.0, 50.0, 1e-12,
        1e-12);
    checks.record("profile_mass_unit", std::abs(mass - 1.0) < 1e-10, mass);

    // rate law: closed form equals the suffix integral of g * p
    double omega_err = 0.0;
    for (double xi = -10.0; xi <= 10.0; xi += 2.5) {
        const double suffix = jsl::integrate_value(
            [&](double eta) {
                return jsl::sech_pow(eta, params.n) * profile.density(eta);
            },
            xi, 60.0, 1e-12, 1e-12);
        omega_err = std::max(omega_err, std::abs(profile.omega(xi) - suffix));
    }
    checks.record("omega_suffix_law", omega_err < 1e-8, omega_err);

    // velocity oracle: barycenter drift (1/lambda) integral(Omega p)
    const double drift = jsl::integrate_value(
        [&](double xi) { return profile.omega(xi) * profile.density(xi); }, -50.0,
        50.0, 1e-12, 1e-12) / params.lambda;
    checks.record("velocity_drift_oracle", std::abs(drift - profile.v_derived) < 1e-10,
                  drift);

    // residual table for both velocity constants
    jsl::CsvWriter table({"m", "dx", "velocity_label", "velocity", "residual"});
    std::vector<double> derived_residuals, paper_residuals;
    for (double dx : {0.04, 0.02, 0.01}) {
        jsl::DensityGrid grid = jsl::DensityGrid::make(-20.0, 20.0, dx);
        grid.fill([&](double x) { return profile.density(x); });
        const double r_derived = jsl::stationary_residual(grid, profile.v_derived, params);
        const double r_paper = jsl::stationary_residual(grid, profile.v_paper, params);
        derived_residuals.push_back(r_derived);
        paper_residuals.push_back(r_paper);
        table.add_row_raw({jsl::format_double(m), jsl::format_double(dx), "v_derived",
                           jsl::format_double(profile.v_derived),
                           jsl::format_double(r_derived)});
        table.add_row_raw({jsl::format_double(m), jsl::format_double(dx), "v_paper",
                           jsl::format_double(profile.v_paper),
                           jsl::format_double(r_paper)});
    }
    table.write(dir / "residuals.csv");

    checks.record("residual_second_order",
                  derived_residuals[0] / derived_residuals[1] >= 3.0 &&
                      derived_residuals[1] / derived_residuals[2] >= 3.0,
                  derived_residuals);
    if (m != 1.0)
        checks.record("paper_velocity_floor", paper_residuals.back() > 0.1,
                      paper_residuals.back());

    json report = base_report("soliton-check", resolved);
    report["derived"] = velocity_constants(m);
    report["measured"] = {{"profile_mass", mass},
                          {"omega_max_error", omega_err},
                          {"drift_velocity", drift},
                          {"residuals_v_derived", derived_residuals},
                          {"residuals_v_paper", paper_residuals}};
    report["checks"] = checks.verdicts;
    write_report(dir, report, started);
    return checks.all_passed ? 0 : 2;
}

// ---------------------------------------------------------------------------
// pde: deterministic mean-field integration.

struct PdeConfig {
    double lambda = 2.0;
    double n = 0.0;
    double m = 0.0;  // when > 0, sets lambda = m, n = 2 - m
    double dx = 0.02;
    double dt = 0.01;
    double t_end = 4.0;
    double window = 25.0;
    double snapshot_every = 0.25;
    int profile_every = 0;
    std::string init = "soliton";  // soliton | gaussian | delta
    double mu = 0.0;
    double sigma = 1.0;
    bool recenter = false;
    bool require_constraint = false;
    std::string out = "out/pde";
};

int run_pde(const PdeConfig& config_in, const json& resolved) {
    const auto started = std::chrono::steady_clock::now();
    PdeConfig config = config_in;
    if (config.m > 0.0) {
        config.lambda = config.m;
        config.n = 2.0 - config.m;
    }
    const jsl::ModelParams params{config.lambda, config.n, 1.0};
    params.validate();
    if (config.require_constraint && !params.soliton_constrained())
        throw UsageError("conflict: lambda=" + std::to_string(config.lambda) +
                         ", n=" + std::to_string(config.n) +
                         " violates the constraint lambda = 2 - n");

    const fs::path dir = prepare_out_dir(config.out, resolved);
    const double m_eff = 2.0 - config.n;

    jsl::DensityGrid grid =
        jsl::DensityGrid::make(-config.window, config.window, config.dx);
    if (config.init == "soliton") {
        if (!params.soliton_constrained())
            throw UsageError("init=soliton requires lambda = 2 - n");
        grid.fill([&](double x) { return jsl::soliton_density(x, m_eff); });
    } else if (config.init == "gaussian") {
        const auto f = jsl::InitialDensity::gaussian(config.mu, config.sigma);
        grid.fill([&](double x) { return f.density(x); });
        grid.normalize();
    } else if (config.init == "delta") {
        const int cell = static_cast<int>(std::round((config.mu - grid.x_min) / config.dx));
        if (cell < 0 || cell >= grid.size())
            throw UsageError("delta location outside the grid window");
        grid.values[static_cast<std::size_t>(cell)] = 1.0 / config.dx;
    } else {
        throw UsageError("unknown init kind '" + config.init + "'");
    }
    const double mass0 = grid.mass();

    jsl::EvolveOptions options;
    options.t_end = config.t_end;
    options.dt = config.dt;
    // cadence capped so short runs still leave enough points to fit a slope
    options.snapshot_every = std::min(config.snapshot_every, config.t_end / 12.0);
    options.recenter = config.recenter;
    options.store_profiles = config.profile_every > 0;
    const jsl::Evolution evolution = jsl::evolve(grid, params, options);

    jsl::CsvWriter trajectory({"t", "barycenter", "variance", "mass", "peak"});
    for (const auto& p : evolution.trajectory)
        trajectory.add_row({p.t, p.barycenter, p.variance, p.mass, p.peak});
    trajectory.write(dir / "trajectory.csv");

    auto write_profile = [&](const jsl::DensityGrid& snapshot, const fs::path& path) {
        jsl::CsvWriter csv({"x", "p"});
        for (int i = 0; i < snapshot.size(); ++i)
            csv.add_row({snapshot.x(i), snapshot.values[static_cast<std::size_t>(i)]});
        csv.write(path);
    };
    write_profile(grid, dir / "final_profile.csv");
    if (config.profile_every > 0)
        for (std::size_t s = 0; s < evolution.profiles.size();
             s += static_cast<std::size_t>(config.profile_every)) {
            char name[32];
            std::snprintf(name, sizeof name, "profile_%05zu.csv", s);
            write_profile(evolution.profiles[s], dir / name);
        }

    double mass_drift = 0.0;
    for (const auto& p : evolution.trajectory)
        mass_drift = std::max(mass_drift, std::abs(p.mass - mass0));

    const auto velocity = jsl::velocity_fit(evolution.trajectory, 0.0, config.t_end);

    CheckSet checks;
    checks.record("mass_drift_below_1e-4", mass_drift < 1e-4, mass_drift);
    checks.record("clamped_mass_below_1e-6", evolution.total_clamped < 1e-6,
                  evolution.total_clamped);

    json measured;
    measured["velocity"] = velocity.v_hat;
    measured["velocity_stderr"] = velocity.v_se;
    measured["mass_drift"] = mass_drift;
    measured["clamped_mass"] = evolution.total_clamped;
    measured["final_variance"] = evolution.trajectory.back().variance;
    json variance_series = json::array();
    for (const auto& p : evolution.trajectory)
        variance_series.push_back({p.t, p.variance});
    measured["variance_series"] = variance_series;

    if (config.init == "soliton") {
        // rigid translation: L-inf distance to the best translate of the
        // analytic profile, minimized by golden-section search
        auto shape_error = [&](double s) {
            double worst = 0.0;
            for (int i = 0; i < grid.size(); ++i)
                worst = std::max(worst,
                                 std::abs(grid.values[static_cast<std::size_t>(i)] -
                                          jsl::soliton_density(grid.x(i) - s, m_eff)));
            return worst;
        };
        const double phi = 0.6180339887498949;
        double a = -1.0, b = jsl::soliton_velocity(m_eff).paper * config.t_end + 1.0;
        double c = b - phi * (b - a), d = a + phi * (b - a);
        for (int i = 0; i < 120; ++i) {
            if (shape_error(c) < shape_error(d))
                b = d;
            else
                a = c;
            c = b - phi * (b - a);
            d = a + phi * (b - a);
        }
        const double best_shift = 0.5 * (a + b);
        const double linf = shape_error(best_shift);
        measured["shape_error_linf"] = linf;
        measured["best_shift"] = best_shift;
        checks.record("shape_error_below_1e-2", linf < 1e-2, linf);

        const double v_derived = jsl::soliton_velocity(m_eff).derived;
        checks.record("velocity_within_1pct_of_derived",
                      std::abs(velocity.v_hat - v_derived) < 0.01 * v_derived,
                      velocity.v_hat);
    }

    json report = base_report("pde", resolved);
    if (params.soliton_constrained()) report["derived"] = velocity_constants(m_eff);
    report["measured"] = measured;
    report["checks"] = checks.verdicts;
    write_report(dir, report, started);
    return checks.all_passed ? 0 : 2;
}

// ---------------------------------------------------------------------------
// swarm: event-driven N-particle simulation.

struct SwarmCliConfig {
    int particles = 10000;
    double lambda = 2.0;
    double n = 0.0;
    double t_end = 300.0;
    double snapshot_every = 1.0;
    double hist_every = 0.0;
    int hist_bins = 160;
    double hist_half_width = 8.0;
    double measure_from = -1.0;  // < 0: auto (t_end / 3)
    double positions_at = -1.0;
    std::string init = "cold";  // cold | gaussian
    double mu = 0.0;
    double sigma = 1.0;
    double ks_threshold = 0.03;
    double slope_tolerance = 0.05;
    double rate_tolerance = 0.05;
    std::uint64_t seed = 42;
    std::string out = "out/swarm";
};

int run_swarm_cmd(const SwarmCliConfig& config, const json& resolved) {
    const auto started = std::chrono::steady_clock::now();
    const fs::path dir = prepare_out_dir(config.out, resolved);
    const jsl::ModelParams params{config.lambda, config.n, 1.0};
    params.validate();

    jsl::Swarm swarm =
        config.init == "cold"
            ? jsl::Swarm::cold_start(params, config.particles, config.seed)
            : jsl::Swarm::from_density(params, config.particles,
                                       jsl::InitialDensity::gaussian(config.mu,
                                                                     config.sigma),
                                       config.seed);
    jsl::SwarmSimulator sim(std::move(swarm));

    jsl::SwarmRunOptions options;
    options.t_end = config.t_end;
    options.snapshot_every = std::min(config.snapshot_every, config.t_end / 24.0);
    options.hist_every = config.hist_every;
    options.hist_bins = config.hist_bins;
    options.hist_half_width = config.hist_half_width;
    options.measure_from =
        config.measure_from >= 0.0 ? config.measure_from : config.t_end / 3.0;
    options.positions_snapshot_at = config.positions_at;
    const jsl::SwarmRunResult result = jsl::run_swarm(sim, options);

    jsl::CsvWriter trajectory({"t", "barycenter", "variance"});
    for (const auto& p : result.trajectory)
        trajectory.add_row({p.t, p.barycenter, p.variance});
    trajectory.write(dir / "trajectory.csv");

    for (std::size_t h = 0; h < result.histograms.size(); ++h) {
        char name[32];
        std::snprintf(name, sizeof name, "hist_%05zu.csv", h);
        jsl::CsvWriter csv({"bin_center", "density"});
        const auto& hist = result.histograms[h];
        for (std::size_t b = 0; b < hist.density.size(); ++b)
            csv.add_row({hist.lo + (static_cast<double>(b) + 0.5) * hist.bin_width,
                         hist.density[b]});
        csv.write(dir / name);
    }

    const auto to_traj = [&] {
        std::vector<jsl::TrajectoryPoint> points;
        for (const auto& p : result.trajectory)
            points.push_back({p.t, p.barycenter, p.variance, 1.0, 0.0});
        return points;
    }();
    const auto velocity = jsl::velocity_fit(to_traj, options.measure_from, config.t_end);

    CheckSet checks;
    json measured;
    measured["events"] = result.events;
    measured["frozen"] = result.frozen;
    measured["velocity"] = velocity.v_hat;
    measured["mean_rate"] = result.mean_rate;
    measured["rate_over_lambda_velocity"] =
        result.mean_rate / (params.lambda * velocity.v_hat);

    checks.record("not_frozen", !result.frozen);
    checks.record("rate_drift_identity",
                  std::abs(result.mean_rate - params.lambda * velocity.v_hat) <
                      config.rate_tolerance * params.lambda * std::abs(velocity.v_hat),
                  result.mean_rate);

    if (params.soliton_constrained()) {
        const double m = 2.0 - params.n;
        const double v_derived = jsl::soliton_velocity(m).derived;
        measured["v_derived"] = v_derived;
        checks.record("velocity_within_tolerance_of_derived",
                      std::abs(velocity.v_hat - v_derived) <
                          config.slope_tolerance * v_derived,
                      velocity.v_hat);
        if (!result.centered_positions.empty()) {
            const double ks = ks_vs_soliton(result.centered_positions, m);
            measured["ks_vs_soliton"] = ks;
            measured["ks_snapshot_t"] = result.centered_positions_t;
            checks.record("comoving_ks_below_threshold", ks < config.ks_threshold, ks);
        }
    }

    json report = base_report("swarm", resolved);
    if (params.soliton_constrained())
        report["derived"] = velocity_constants(2.0 - params.n);
    report["measured"] = measured;
    report["checks"] = checks.verdicts;
    write_report(dir, report, started);
    return checks.all_passed ? 0 : 2;
}

// ---------------------------------------------------------------------------
// phase-scan: cooperative-behavior transition table.

struct PhaseScanCliConfig {
    std::string n_list = "0,1,1.5,2.5";
    double lambda_dispersive = 0.5;
    double t_end = 120.0;
    double dx = 0.05;
    double dt = 0.05;
    double window = 35.0;
    double sigma = 1.5;
    std::string out = "out/phase-scan";
};

int run_phase_scan(const PhaseScanCliConfig& config, const json& resolved) {
    const auto started = std::chrono::steady_clock::now();
    const fs::path dir = prepare_out_dir(config.out, resolved);

    jsl::PhaseScanConfig scan;
    scan.n_values = parse_double_list(config.n_list);
    scan.lambda_off_constraint = config.lambda_dispersive;
    scan.t_end = config.t_end;
    scan.dx = config.dx;
    scan.dt = config.dt;
    scan.half_width = config.window;
    scan.init_sigma = config.sigma;
    const auto table = jsl::phase_scan(scan);

    jsl::CsvWriter csv({"n", "lambda", "growth_rate", "fit_rmse", "m_hat", "dispersive",
                        "variance_t10", "variance_t50"});
    for (const auto& point : table)
        csv.add_row({point.n, point.lambda, point.growth_rate, point.fit_rmse,
                     point.m_hat, point.dispersive ? 1.0 : 0.0, point.variance_t10,
                     point.variance_t50});
    csv.write(dir / "phase_scan.csv");

    CheckSet checks;
    json rows = json::array();
    for (const auto& point : table) {
        rows.push_back({{"n", point.n},
                        {"lambda", point.lambda},
                        {"growth_rate", point.growth_rate},
                        {"fit_rmse", point.fit_rmse},
                        {"m_hat", point.m_hat},
                        {"dispersive", point.dispersive}});
        const std::string label = "n=" + jsl::format_double(point.n);
        if (point.n < 2.0)
            checks.record(label + "_solitonic", !point.dispersive, point.growth_rate);
        else
            checks.record(label + "_dispersive", point.dispersive, point.growth_rate);
    }

    json report = base_report("phase-scan", resolved);
    report["measured"] = {{"points", rows}};
    report["checks"] = checks.verdicts;
    write_report(dir, report, started);
    return checks.all_passed ? 0 : 2;
}

// ---------------------------------------------------------------------------
// velocity-table: large-m scaling of the two velocity constants.

struct VelocityTableConfig {
    std::string m_list = "4,16,64,256";
    std::string out = "out/velocity-table";
};

int run_velocity_table(const VelocityTableConfig& config, const json& resolved) {
    const auto started = std::chrono::steady_clock::now();
    const fs::path dir = prepare_out_dir(config.out, resolved);
    const auto m_values = parse_double_list(config.m_list);
    constexpr double two_pi = 6.283185307179586477;

    jsl::CsvWriter csv(
        {"m", "v_paper", "v_derived", "sqrt_m_over_2pi", "inv_sqrt_2pi_m"});
    json rows = json::array();
    for (double m : m_values) {
        const auto v = jsl::soliton_velocity(m);
        const double paper_asymptote = std::sqrt(m / two_pi);
        const double derived_asymptote = 1.0 / std::sqrt(two_pi * m);
        csv.add_row({m, v.paper, v.derived, paper_asymptote, derived_asymptote});
        rows.push_back({{"m", m},
                        {"v_paper", v.paper},
                        {"v_derived", v.derived},
                        {"paper_over_asymptote", v.paper / paper_asymptote},
                        {"derived_over_asymptote", v.derived / derived_asymptote}});
    }
    csv.write(dir / "velocity_table.csv");

    CheckSet checks;
    const double m_max = *std::max_element(m_values.begin(), m_values.end());
    const auto v_max = jsl::soliton_velocity(m_max);
    checks.record("paper_ratio_to_sqrt_m_over_2pi_within_2pct",
                  std::abs(v_max.paper / std::sqrt(m_max / two_pi) - 1.0) < 0.02,
                  v_max.paper / std::sqrt(m_max / two_pi));
    checks.record("derived_times_sqrt_2pi_m_within_2pct",
                  std::abs(v_max.derived * std::sqrt(two_pi * m_max) - 1.0) < 0.02,
                  v_max.derived * std::sqrt(two_pi * m_max));

    json report = base_report("velocity-table", resolved);
    report["measured"] = {{"rows", rows}};
    report["checks"] = checks.verdicts;
    write_report(dir, report, started);
    return checks.all_passed ? 0 : 2;
}

json load_config_file(int argc, char** argv) {
    std::string path;
    for (int i = 2; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            path = arg.substr(9);
    }
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file '" + path + "'");
    json data = json::parse(in, nullptr, true, true);
    if (!data.is_object()) throw UsageError("config file must hold a JSON object");
    return data;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jsl: right-jump processes, their mean-field dynamics and "
                 "soliton-like traveling densities"};
    app.require_subcommand(1);
    std::string config_path;

    json file_config;
    try {
        file_config = load_config_file(argc, argv);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    const json* file = file_config.is_object() && !file_config.empty() ? &file_config
                                                                       : nullptr;

    LinearConfig linear;
    auto* linear_cmd =
        app.add_subcommand("linear", "Monte Carlo ensemble vs the closed form");
    ConfigBinder linear_bind(linear_cmd, file);
    linear_cmd->add_option("--config", config_path, "JSON config file");
    linear_bind.option("--lambda", linear.lambda, "jump-length rate");
    linear_bind.option("--t", linear.t, "horizon");
    linear_bind.option("--paths", linear.paths, "number of paths");
    linear_bind.option("--seed", linear.seed, "master seed");
    linear_bind.option("--out", linear.out, "output directory");

    SolitonCheckConfig soliton;
    auto* soliton_cmd = app.add_subcommand(
        "soliton-check", "closed-form constants and residual adjudication");
    ConfigBinder soliton_bind(soliton_cmd, file);
    soliton_cmd->add_option("--config", config_path, "JSON config file");
    soliton_bind.option("--m", soliton.m, "profile exponent (lambda = m, n = 2 - m)");
    soliton_bind.option("--out", soliton.out, "output directory");

    PdeConfig pde;
    auto* pde_cmd = app.add_subcommand("pde", "mean-field grid integration");
    ConfigBinder pde_bind(pde_cmd, file);
    pde_cmd->add_option("--config", config_path, "JSON config file");
    pde_bind.option("--lambda", pde.lambda, "jump-length rate");
    pde_bind.option("--n", pde.n, "modulation exponent");
    pde_bind.option("--m", pde.m, "set lambda = m, n = 2 - m");
    pde_bind.option("--dx", pde.dx, "grid spacing");
    pde_bind.option("--dt", pde.dt, "time step");
    pde_bind.option("--t-end", pde.t_end, "horizon");
    pde_bind.option("--window", pde.window, "half width of the grid");
    pde_bind.option("--snapshot-every", pde.snapshot_every, "trajectory cadence");
    pde_bind.option("--profile-every", pde.profile_every,
                    "write every k-th snapshot profile (0 = none)");
    pde_bind.option("--init", pde.init, "soliton | gaussian | delta");
    pde_bind.option("--mu", pde.mu, "initial center");
    pde_bind.option("--sigma", pde.sigma, "initial gaussian width");
    pde_bind.flag("--recenter", pde.recenter, "comoving window");
    pde_bind.flag("--require-soliton-constraint", pde.require_constraint,
                  "reject lambda != 2 - n");
    pde_bind.option("--out", pde.out, "output directory");

    SwarmCliConfig swarm;
    auto* swarm_cmd = app.add_subcommand("swarm", "event-driven N-particle run");
    ConfigBinder swarm_bind(swarm_cmd, file);
    swarm_cmd->add_option("--config", config_path, "JSON config file");
    swarm_bind.option("--N", swarm.particles, "particle count");
    swarm_bind.option("--lambda", swarm.lambda, "jump-length rate");
    swarm_bind.option("--n", swarm.n, "modulation exponent");
    swarm_bind.option("--t-end", swarm.t_end, "horizon");
    swarm_bind.option("--snapshot-every", swarm.snapshot_every, "trajectory cadence");
    swarm_bind.option("--hist-every", swarm.hist_every,
                      "comoving histogram cadence (0 = off)");
    swarm_bind.option("--hist-bins", swarm.hist_bins, "histogram bins");
    swarm_bind.option("--hist-half-width", swarm.hist_half_width,
                      "histogram half width");
    swarm_bind.option("--measure-from", swarm.measure_from,
                      "start of the measurement window (default t_end/3)");
    swarm_bind.option("--positions-at", swarm.positions_at,
                      "capture centered positions at this time");
    swarm_bind.option("--init", swarm.init, "cold | gaussian");
    swarm_bind.option("--mu", swarm.mu, "gaussian center");
    swarm_bind.option("--sigma", swarm.sigma, "gaussian width");
    swarm_bind.option("--ks-threshold", swarm.ks_threshold, "comoving KS gate");
    swarm_bind.option("--slope-tolerance", swarm.slope_tolerance,
                      "relative velocity gate");
    swarm_bind.option("--rate-tolerance", swarm.rate_tolerance,
                      "relative rate-identity gate");
    swarm_bind.option("--seed", swarm.seed, "master seed");
    swarm_bind.option("--out", swarm.out, "output directory");

    PhaseScanCliConfig phase;
    auto* phase_cmd =
        app.add_subcommand("phase-scan", "cooperative-behavior transition scan");
    ConfigBinder phase_bind(phase_cmd, file);
    phase_cmd->add_option("--config", config_path, "JSON config file");
    phase_bind.option("--n-list", phase.n_list, "comma-separated n values");
    phase_bind.option("--lambda-dispersive", phase.lambda_dispersive,
                      "lambda used for n >= 2");
    phase_bind.option("--t-end", phase.t_end, "horizon per point");
    phase_bind.option("--dx", phase.dx, "grid spacing");
    phase_bind.option("--dt", phase.dt, "time step");
    phase_bind.option("--window", phase.window, "half width of the grid");
    phase_bind.option("--sigma", phase.sigma, "gaussian initial width");
    phase_bind.option("--out", phase.out, "output directory");

    VelocityTableConfig velocity;
    auto* velocity_cmd =
        app.add_subcommand("velocity-table", "large-m velocity scaling table");
    ConfigBinder velocity_bind(velocity_cmd, file);
    velocity_cmd->add_option("--config", config_path, "JSON config file");
    velocity_bind.option("--m-list", velocity.m_list, "comma-separated m values");
    velocity_bind.option("--out", velocity.out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        return app.exit(error);
    }

    try {
        if (*linear_cmd) {
            linear_bind.reject_unknown_file_keys();
            return run_linear(linear, linear_bind.resolved());
        }
        if (*soliton_cmd) {
            soliton_bind.reject_unknown_file_keys();
            return run_soliton_check(soliton, soliton_bind.resolved());
        }
        if (*pde_cmd) {
            pde_bind.reject_unknown_file_keys();
            return run_pde(pde, pde_bind.resolved());
        }
        if (*swarm_cmd) {
            swarm_bind.reject_unknown_file_keys();
            return run_swarm_cmd(swarm, swarm_bind.resolved());
        }
        if (*phase_cmd) {
            phase_bind.reject_unknown_file_keys();
            return run_phase_scan(phase, phase_bind.resolved());
        }
        if (*velocity_cmd) {
            velocity_bind.reject_unknown_file_keys();
            return run_velocity_table(velocity, velocity_bind.resolved());
        }
    } catch (const UsageError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 1;
}
