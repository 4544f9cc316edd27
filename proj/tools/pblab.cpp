// pblab: sweeps, spectra and single-point reports for the driven two-photon
// Jaynes-Cummings model.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "pblab/circuit.hpp"
#include "pblab/error.hpp"
#include "pblab/sweep.hpp"
#include "selftest.hpp"

using namespace pblab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_solver = 2;

SweepConfig config_from(const std::string& path) {
    SweepConfig cfg = path.empty() ? SweepConfig{} : load_config(path);
    if (const char* env = std::getenv("PBLAB_NMAX"); env && *env) {
        try {
            std::size_t used = 0;
            cfg.n_cav_max = std::stoi(env, &used);
            if (env[used] != '\0') throw std::invalid_argument(env);
        } catch (const std::exception&) {
            throw ConfigError(std::string("PBLAB_NMAX is not an integer: '") + env + "'");
        }
    }
    return cfg;
}

double default_drive_frequency(const SweepConfig& cfg) {
    if (cfg.drive_frequency) return *cfg.drive_frequency;
    return cfg.drive_kind == DriveKind::cavity_1photon ? 1.0 : 2.0;
}

int count_errors(const std::vector<SweepRow>& rows) {
    int n = 0;
    for (const auto& r : rows) n += r.label.rfind("error:", 0) == 0;
    return n;
}

int cmd_sweep(const std::string& config, const std::optional<std::string>& out,
              std::optional<int> points, int jobs, bool no_plots) {
    SweepConfig cfg = config_from(config);
    if (out) cfg.out_prefix = *out;
    if (points) cfg.points = *points;
    if (no_plots) cfg.emit_plots = false;
    cfg.validate();

    const bool two_d = cfg.axis == SweepAxis::both;
    std::vector<Oracle> oracles;
    if (cfg.oracle == Oracle::both) oracles = {Oracle::numeric, Oracle::analytic};
    else oracles = {cfg.oracle};

    PlotSpec spec;
    spec.two_d = two_d;
    if (cfg.axis == SweepAxis::atom_frequency) spec.x_label = "omega_0 / omega_c";
    if (cfg.axis == SweepAxis::drive_frequency)
        spec.markers = resonance_locations(cfg.model_at(cfg.omega0_ratio), cfg.drive_kind, report_depth);

    int errors = 0;
    for (Oracle oracle : oracles) {
        const std::string stem =
            oracles.size() > 1 ? cfg.out_prefix + "_" + to_string(oracle) : cfg.out_prefix;
        const auto rows = run_sweep(cfg, oracle, jobs);
        emit_csv(rows, stem + ".csv", two_d);
        std::cout << "wrote " << stem << ".csv (" << rows.size() << " rows)\n";
        if (cfg.emit_plots) {
            emit_plot(rows, stem + ".svg", spec);
            std::cout << "wrote " << stem << ".svg\n";
        }
        const int e = count_errors(rows);
        if (e) std::cerr << stem << ": " << e << " point(s) failed to solve\n";
        errors += e;
    }
    return errors ? exit_solver : exit_ok;
}

int cmd_spectrum(const std::string& config, int n_max) {
    const SweepConfig cfg = config_from(config);
    const ModelParams params = cfg.model_at(cfg.omega0_ratio);
    params.validate();
    std::printf("# omega_0=%.6g J=%.6g (units of omega_c)\n", params.omega_0, params.J);
    std::printf("N=0  eps=%.12g\nN=1  eps=%.12g\n", ground_energy(params),
                single_excitation_energy(params));
    for (int n = 2; n <= n_max; ++n) {
        const EigBlock b = spectrum_block(n, params);
        std::printf("N=%d  eps+=%.12g  eps-=%.12g  theta=%.9f  |+>=(%.9f, %.9f)  |->=(%.9f, %.9f)\n",
                    n, b.eps_plus, b.eps_minus, b.theta, b.c_gn_plus, b.c_en2_plus, b.c_gn_minus,
                    b.c_en2_minus);
    }
    std::printf("# resonances for drive_kind=%s\n", to_string(cfg.drive_kind).c_str());
    for (const auto& r : resonance_locations(params, cfg.drive_kind, n_max))
        std::printf("%-14s %.12g\n", r.label.c_str(), r.frequency);
    return exit_ok;
}

void print_value(const char* name, double v) { std::printf("%-8s %s\n", name, format_float(v).c_str()); }

int cmd_classify(const std::string& config, std::optional<double> frequency,
                 std::optional<double> omega0, bool analytic) {
    const SweepConfig cfg = config_from(config);
    const double w0 = omega0.value_or(cfg.omega0_ratio);
    const double wd = frequency.value_or(default_drive_frequency(cfg));
    const ModelParams params = cfg.model_at(w0);
    const DriveSpec drive = cfg.drive_at(wd);
    const StatisticsReport r =
        analytic ? analytic_point(params, drive) : numeric_point(params, drive, cfg.n_cav_max);
    std::printf("drive    %s at %s, omega_0 %s\n", to_string(drive.kind).c_str(),
                format_float(wd).c_str(), format_float(w0).c_str());
    print_value("mean_n", r.mean_n);
    for (int n = 0; n <= report_depth; ++n) {
        std::printf("P%d       %s   Q%d %s\n", n, format_float(r.p[n]).c_str(), n,
                    format_float(r.poisson[n]).c_str());
    }
    print_value("g2", r.g2);
    print_value("g3", r.g3);
    print_value("g4", r.g4);
    std::printf("label    %s\n", to_string(r.label).c_str());
    return exit_ok;
}

double get(const std::map<std::string, std::string>& kv, const std::string& key,
           std::optional<double> fallback = std::nullopt) {
    const auto it = kv.find(key);
    if (it == kv.end()) {
        if (fallback) return *fallback;
        throw ConfigError("missing key '" + key + "'");
    }
    try {
        std::size_t used = 0;
        const double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(key + " expects a number, got '" + it->second + "'");
    }
}

int cmd_circuit(const std::string& config) {
    const auto kv = parse_key_values(read_text_file(config));
    static const char* known[] = {"e_c", "n_g", "e_j0", "phi_q", "phi_s", "omega_s", "omega_res",
                                  "omega_d", "omega_cav_drive_strength", "kappa", "gamma", "n_a",
                                  "loop_area", "distance", "resonator_length",
                                  "inductance_per_length", "omega_c_si"};
    for (const auto& [key, value] : kv) {
        if (key.rfind("#line:", 0) == 0) continue;
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw ConfigError("line " + kv.at("#line:" + key) + ": unknown key '" + key + "'");
    }

    circuit::CircuitParams c;
    c.e_c = get(kv, "e_c");
    c.n_g = get(kv, "n_g", 0.5);
    c.e_j0 = get(kv, "e_j0");
    c.phi_s = get(kv, "phi_s");
    c.omega_s = get(kv, "omega_s");
    c.omega_res = get(kv, "omega_res", 1.0);
    c.omega_d = get(kv, "omega_d", c.omega_res);
    c.omega_cav_drive_strength = get(kv, "omega_cav_drive_strength", 0.0);
    c.kappa = get(kv, "kappa", 0.0);
    c.gamma = get(kv, "gamma", 0.0);

    if (kv.count("loop_area")) {
        const circuit::GeometryParams g{get(kv, "loop_area"), get(kv, "distance"),
                                        get(kv, "resonator_length"),
                                        get(kv, "inductance_per_length")};
        const auto fc = circuit::flux_coupling(g, get(kv, "omega_c_si"));
        c.phi_q = fc.phi_q;
        std::printf("phi_q    %s%s\n", format_float(fc.phi_q).c_str(),
                    fc.exceeds_small_parameter ? "  (exceeds small-parameter limit)" : "");
    } else {
        c.phi_q = get(kv, "phi_q");
    }

    const circuit::EffectiveModel m = circuit::effective_model(c);
    print_value("omega_c", m.model.omega_c);
    print_value("omega_0", m.model.omega_0);
    print_value("J", m.model.J);
    print_value("J_x", m.J_x);
    print_value("J_c", m.J_c);
    print_value("Omega_L", m.atom_drive.strength);
    print_value("omega_L", m.atom_drive.frequency);
    print_value("Omega", m.cavity_drive.strength);
    print_value("omega_d", m.cavity_drive.frequency);
    for (const auto& w : m.warnings) std::printf("warning  %s\n", w.c_str());

    const int n_a = static_cast<int>(get(kv, "n_a", 1.0));
    const circuit::RwaReport rwa = circuit::rwa_validity(c, n_a);
    std::printf("# RWA conditions at n_a=%d (ratio = small/large, threshold 0.1)\n", n_a);
    for (const auto& cond : rwa.conditions)
        std::printf("%-4s %-28s ratio=%s\n", cond.pass ? "ok" : "FAIL", cond.name.c_str(),
                    format_float(cond.ratio).c_str());
    std::printf("E_J0/E_C %s\n", format_float(rwa.charge_regime_ratio).c_str());
    std::printf("rwa      %s\n", rwa.all_pass ? "valid" : "violated");
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-blockade simulations of the driven two-photon Jaynes-Cummings model"};
    app.require_subcommand(1);

    std::string config;
    std::optional<std::string> out;
    std::optional<int> points;
    int jobs = 1;
    bool no_plots = false;
    int n_max = 6;
    std::optional<double> frequency, omega0;
    bool analytic = false;

    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV/SVG");
    sweep->add_option("--config", config, "sweep config file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", out, "output path prefix");
    sweep->add_option("--points", points, "override the point count of the first axis");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--no-plots", no_plots, "skip SVG output");

    auto* spectrum = app.add_subcommand("spectrum", "print the closed-form eigenblocks");
    spectrum->add_option("--config", config, "sweep config file (model part is used)")
        ->check(CLI::ExistingFile);
    spectrum->add_option("--nmax", n_max, "highest block N")->check(CLI::Range(2, 1000));

    auto* classify = app.add_subcommand("classify", "photon statistics at a single point");
    classify->add_option("--config", config, "sweep config file")->check(CLI::ExistingFile);
    classify->add_option("--frequency", frequency, "drive frequency / omega_c");
    classify->add_option("--omega0", omega0, "atomic frequency / omega_c");
    classify->add_flag("--analytic", analytic, "use the weak-drive amplitude expansion");

    auto* circuit_cmd = app.add_subcommand("circuit", "map circuit parameters to the model");
    circuit_cmd->add_option("--config", config, "circuit config file")->required()->check(CLI::ExistingFile);

    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    try {
        if (*sweep) return cmd_sweep(config, out, points, jobs, no_plots);
        if (*spectrum) return cmd_spectrum(config, n_max);
        if (*classify) return cmd_classify(config, frequency, omega0, analytic);
        if (*circuit_cmd) return cmd_circuit(config);
        if (*selftest) return run_selftest(std::cout) ? exit_solver : exit_ok;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_solver;
    }
    return exit_ok;
}
