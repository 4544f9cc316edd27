#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pblab/criteria.hpp"
#include "pblab/model.hpp"

namespace pblab {

enum class SweepAxis { drive_frequency, atom_frequency, both };
enum class Oracle { numeric, analytic, both };

/// Flat key=value sweep description. All frequencies and rates are ratios to
/// ω_c; the drive strength is given relative to κ.
struct SweepConfig {
    double omega0_ratio = 2.0;
    double J_ratio = 0.01;
    double kappa_ratio = 1e-3;
    double gamma_ratio = 1e-3;
    DriveKind drive_kind = DriveKind::cavity_1photon;
    double drive_strength_over_kappa = 0.4;
    SweepAxis axis = SweepAxis::drive_frequency;
    double lo = 0.97;
    double hi = 1.03;
    int points = 101;
    // Second axis (ω₀/ω_c) of a 2D sweep.
    double lo2 = 1.9;
    double hi2 = 2.1;
    int points2 = 41;
    // Fixed drive frequency for an atom_frequency sweep; defaults to the
    // frame in which the bare model is resonant.
    std::optional<double> drive_frequency;
    int n_cav_max = 12;
    Oracle oracle = Oracle::numeric;
    std::string out_prefix = "sweep";
    bool emit_plots = true;

    void validate() const;

    ModelParams model_at(double omega0) const;
    DriveSpec drive_at(double frequency) const;
};

std::string to_string(SweepAxis axis);
std::string to_string(Oracle oracle);

/// Parses key=value lines; '#' starts a comment. Unknown keys, malformed
/// values and violated invariants raise ConfigError naming the line.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

/// Raw key/value pairs of a config file, for the circuit verb.
std::map<std::string, std::string> parse_key_values(const std::string& text);
std::string read_text_file(const std::string& path);

/// Evenly spaced grid including both ends.
std::vector<double> linspace(double lo, double hi, int points);

struct SweepRow {
    double axis1 = 0.0;
    double axis2 = 0.0;  // only meaningful for 2D sweeps
    std::array<double, report_depth + 1> p{};
    std::array<double, report_depth + 1> q{};
    double g2 = 0.0;
    double g3 = 0.0;
    double g4 = 0.0;
    double mean_n = 0.0;
    std::string label;
    std::string resonance;
};

/// Exact steady-state statistics at one parameter point.
StatisticsReport numeric_point(const ModelParams& params, const DriveSpec& drive, int n_cav_max);
/// Weak-drive perturbative statistics; cavity_1photon only.
StatisticsReport analytic_point(const ModelParams& params, const DriveSpec& drive);

/// One row per grid point, ordered by axis value (axis1 major for 2D). The
/// per-point work is independent and jobs > 1 spreads it over threads without
/// changing the result. Solver failures become "error:<kind>" labels.
/// oracle must be numeric or analytic.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, Oracle oracle, int jobs = 1);
inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg, int jobs = 1) {
    return run_sweep(cfg, cfg.oracle == Oracle::analytic ? Oracle::analytic : Oracle::numeric, jobs);
}

/// 12-significant-digit scientific notation with a bare exponent, e.g.
/// "1.00000000000e0", "-2.50000000000e-3".
std::string format_float(double x);

std::string csv_header(bool two_d);
std::string to_csv(const std::vector<SweepRow>& rows, bool two_d);

/// Writes the CSV; throws InvalidArgument on empty rows (no file written) and
/// Error with the path on I/O failure.
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path, bool two_d);

struct PlotSpec {
    bool two_d = false;
    std::string x_label = "drive frequency / omega_c";
    std::string y_label = "omega_0 / omega_c";
    std::vector<Resonance> markers;
};

/// Static SVG: 1D sweeps get log-scale g2/g3/g4 and P1..P4 panels with
/// resonance markers; 2D sweeps get a heat map of log10 g2.
std::string render_svg(const std::vector<SweepRow>& rows, const PlotSpec& spec);
void emit_plot(const std::vector<SweepRow>& rows, const std::string& path, const PlotSpec& spec);

/// Value floor for log-scale rendering; the CSV keeps raw values.
inline constexpr double plot_floor = 1e-12;

}  // namespace pblab
