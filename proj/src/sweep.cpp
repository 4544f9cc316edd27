#include "pblab/sweep.hpp"

#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "pblab/analytic.hpp"
#include "pblab/error.hpp"
#include "pblab/lindblad.hpp"

namespace pblab {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr int catalogue_depth = report_depth;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(value, &used);
        if (used != value.size() || !std::isfinite(x)) throw std::invalid_argument(value);
        return x;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": " + key + " expects a number, got '" +
                          value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const long x = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return static_cast<int>(x);
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(line) + ": " + key +
                          " expects an integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& value, int line) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("line " + std::to_string(line) + ": " + key + " expects true/false, got '" +
                      value + "'");
}

std::string error_tag(const std::exception_ptr& e) {
    try {
        std::rethrow_exception(e);
    } catch (const SingularSystem&) {
        return "error:singular";
    } catch (const UnphysicalState&) {
        return "error:unphysical";
    } catch (const VacuumState&) {
        return "error:vacuum";
    } catch (const DegenerateDenominator&) {
        return "error:degenerate";
    } catch (const std::exception&) {
        return "error:other";
    }
}

}  // namespace

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::drive_frequency: return "drive_frequency";
        case SweepAxis::atom_frequency: return "atom_frequency";
        case SweepAxis::both: return "both";
    }
    return "drive_frequency";
}

std::string to_string(Oracle oracle) {
    switch (oracle) {
        case Oracle::numeric: return "numeric";
        case Oracle::analytic: return "analytic";
        case Oracle::both: return "both";
    }
    return "numeric";
}

void SweepConfig::validate() const {
    if (!(lo < hi)) throw ConfigError("lo must be smaller than hi");
    if (points < 2) throw ConfigError("points must be >= 2");
    if (axis == SweepAxis::both) {
        if (!(lo2 < hi2)) throw ConfigError("lo2 must be smaller than hi2");
        if (points2 < 2) throw ConfigError("points2 must be >= 2");
    }
    if (oracle != Oracle::analytic && n_cav_max < 6)
        throw ConfigError("n_cav_max must be >= 6 for numeric sweeps (g4 is reported)");
    if (n_cav_max < SpaceConfig::min_photons) throw ConfigError("n_cav_max must be >= 3");
    if (oracle != Oracle::numeric && drive_kind != DriveKind::cavity_1photon)
        throw ConfigError("the analytic oracle exists only for drive_kind=cavity_1photon");
    if (!(J_ratio >= 0) || !(kappa_ratio >= 0) || !(gamma_ratio >= 0) ||
        !(drive_strength_over_kappa >= 0))
        throw ConfigError("rates and drive strength must be >= 0");
    if (axis != SweepAxis::atom_frequency && !(lo > 0))
        throw ConfigError("drive frequencies must be positive");
}

ModelParams SweepConfig::model_at(double omega0) const {
    return ModelParams{.omega_c = 1.0,
                       .omega_0 = omega0,
                       .J = J_ratio,
                       .kappa = kappa_ratio,
                       .gamma = gamma_ratio};
}

DriveSpec SweepConfig::drive_at(double frequency) const {
    return DriveSpec{drive_kind, drive_strength_over_kappa * kappa_ratio, frequency};
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string content = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected key=value");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line) + ": empty key");
        if (kv.count(key)) throw ConfigError("line " + std::to_string(line) + ": duplicate key " + key);
        kv[key] = value;
        kv["#line:" + key] = std::to_string(line);
    }
    return kv;
}

SweepConfig parse_config(const std::string& text) {
    SweepConfig cfg;
    const auto kv = parse_key_values(text);
    for (const auto& [key, value] : kv) {
        if (key.rfind("#line:", 0) == 0) continue;
        const int line = std::stoi(kv.at("#line:" + key));
        if (key == "omega0_ratio") cfg.omega0_ratio = parse_double(key, value, line);
        else if (key == "J_ratio") cfg.J_ratio = parse_double(key, value, line);
        else if (key == "kappa_ratio") cfg.kappa_ratio = parse_double(key, value, line);
        else if (key == "gamma_ratio") cfg.gamma_ratio = parse_double(key, value, line);
        else if (key == "drive_strength_over_kappa")
            cfg.drive_strength_over_kappa = parse_double(key, value, line);
        else if (key == "drive_kind") {
            try {
                cfg.drive_kind = drive_kind_from_string(value);
            } catch (const InvalidArgument& e) {
                throw ConfigError("line " + std::to_string(line) + ": " + e.what());
            }
        } else if (key == "axis") {
            if (value == "drive_frequency") cfg.axis = SweepAxis::drive_frequency;
            else if (value == "atom_frequency") cfg.axis = SweepAxis::atom_frequency;
            else if (value == "both" || value == "both-2D") cfg.axis = SweepAxis::both;
            else throw ConfigError("line " + std::to_string(line) + ": unknown axis '" + value + "'");
        } else if (key == "lo") cfg.lo = parse_double(key, value, line);
        else if (key == "hi") cfg.hi = parse_double(key, value, line);
        else if (key == "points") cfg.points = parse_int(key, value, line);
        else if (key == "lo2") cfg.lo2 = parse_double(key, value, line);
        else if (key == "hi2") cfg.hi2 = parse_double(key, value, line);
        else if (key == "points2") cfg.points2 = parse_int(key, value, line);
        else if (key == "drive_frequency") cfg.drive_frequency = parse_double(key, value, line);
        else if (key == "n_cav_max") cfg.n_cav_max = parse_int(key, value, line);
        else if (key == "oracle") {
            if (value == "numeric") cfg.oracle = Oracle::numeric;
            else if (value == "analytic") cfg.oracle = Oracle::analytic;
            else if (value == "both") cfg.oracle = Oracle::both;
            else throw ConfigError("line " + std::to_string(line) + ": unknown oracle '" + value + "'");
        } else if (key == "out_prefix") cfg.out_prefix = value;
        else if (key == "emit_plots") cfg.emit_plots = parse_bool(key, value, line);
        else throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "': " + std::strerror(errno));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepConfig load_config(const std::string& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
    try {
        return parse_config(text);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 2) throw InvalidArgument("linspace needs at least two points");
    std::vector<double> x(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) x[k] = lo + (hi - lo) * k / (points - 1);
    return x;
}

StatisticsReport numeric_point(const ModelParams& params, const DriveSpec& drive, int n_cav_max) {
    const SpaceConfig space(n_cav_max);
    const Liouvillian L = build_liouvillian(hamiltonian_rotating(params, drive, space), params);
    return make_report(steady_state(L), transition_kind(drive.kind));
}

StatisticsReport analytic_point(const ModelParams& params, const DriveSpec& drive) {
    const AmplitudeSet amps = steady_amplitudes(params, drive);
    const AnalyticDistribution dist = analytic_distribution(amps, Normalization::exact);
    StatisticsReport r;
    r.transition_kind = TransitionKind::one_photon;
    for (int n = 0; n < 4; ++n) r.p[n] = dist.p[n];
    r.p[4] = 0.0;
    r.mean_n = dist.p[1] + 2.0 * dist.p[2] + 3.0 * dist.p[3];
    for (int n = 0; n <= report_depth; ++n) r.poisson[n] = poisson_reference(r.mean_n, n);
    r.g2 = analytic_g2(amps);
    r.g3 = analytic_g3(amps);
    r.g4 = nan;
    r.label = classify(r.g2, r.g3, r.g4, r.transition_kind);
    return r;
}

namespace {

struct GridPoint {
    double axis1;
    double axis2;
    double omega0;
    double drive_frequency;
};

std::vector<GridPoint> make_grid(const SweepConfig& cfg) {
    std::vector<GridPoint> grid;
    const double default_drive = cfg.drive_kind == DriveKind::cavity_1photon ? 1.0 : 2.0;
    switch (cfg.axis) {
        case SweepAxis::drive_frequency:
            for (double x : linspace(cfg.lo, cfg.hi, cfg.points))
                grid.push_back({x, nan, cfg.omega0_ratio, x});
            break;
        case SweepAxis::atom_frequency:
            for (double x : linspace(cfg.lo, cfg.hi, cfg.points))
                grid.push_back({x, nan, x, cfg.drive_frequency.value_or(default_drive)});
            break;
        case SweepAxis::both:
            for (double x : linspace(cfg.lo, cfg.hi, cfg.points))
                for (double y : linspace(cfg.lo2, cfg.hi2, cfg.points2)) grid.push_back({x, y, y, x});
            break;
    }
    return grid;
}

std::string nearest_resonance(const SweepConfig& cfg, const GridPoint& pt, double half_step) {
    const auto lines = resonance_locations(cfg.model_at(pt.omega0), cfg.drive_kind, catalogue_depth);
    const Resonance* best = nullptr;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const auto& line : lines) {
        const double dist = std::abs(line.frequency - pt.drive_frequency);
        if (dist < best_dist) {
            best_dist = dist;
            best = &line;
        }
    }
    return best && best_dist <= half_step ? best->label : "";
}

SweepRow evaluate(const SweepConfig& cfg, Oracle oracle, const GridPoint& pt, double half_step) {
    SweepRow row;
    row.axis1 = pt.axis1;
    row.axis2 = pt.axis2;
    row.resonance = nearest_resonance(cfg, pt, half_step);
    try {
        const ModelParams params = cfg.model_at(pt.omega0);
        const DriveSpec drive = cfg.drive_at(pt.drive_frequency);
        const StatisticsReport r = oracle == Oracle::analytic
                                       ? analytic_point(params, drive)
                                       : numeric_point(params, drive, cfg.n_cav_max);
        row.p = r.p;
        row.q = r.poisson;
        row.g2 = r.g2;
        row.g3 = r.g3;
        row.g4 = r.g4;
        row.mean_n = r.mean_n;
        row.label = to_string(r.label);
    } catch (...) {
        row.p.fill(nan);
        row.q.fill(nan);
        row.g2 = row.g3 = row.g4 = row.mean_n = nan;
        row.label = error_tag(std::current_exception());
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, Oracle oracle, int jobs) {
    cfg.validate();
    if (oracle == Oracle::both) throw InvalidArgument("run_sweep evaluates one oracle at a time");
    const std::vector<GridPoint> grid = make_grid(cfg);
    const double half_step = 0.5 * (cfg.hi - cfg.lo) / (cfg.points - 1);
    std::vector<SweepRow> rows(grid.size());

    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
    if (workers == 1) {
        for (std::size_t k = 0; k < grid.size(); ++k) rows[k] = evaluate(cfg, oracle, grid[k], half_step);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < grid.size(); k = next++)
                rows[k] = evaluate(cfg, oracle, grid[k], half_step);
        });
    for (auto& t : pool) t.join();
    return rows;
}

std::string format_float(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    std::string s(buf);
    const auto e = s.find('e');
    const int exponent = std::stoi(s.substr(e + 1));
    return s.substr(0, e) + "e" + std::to_string(exponent);
}

std::string csv_header(bool two_d) {
    return std::string(two_d ? "axis1,axis2" : "axis") +
           ",P0,P1,P2,P3,P4,Q0,Q1,Q2,Q3,Q4,g2,g3,g4,mean_n,label,resonance";
}

std::string to_csv(const std::vector<SweepRow>& rows, bool two_d) {
    std::string out = csv_header(two_d) + "\n";
    for (const auto& r : rows) {
        out += format_float(r.axis1);
        if (two_d) out += "," + format_float(r.axis2);
        for (double v : r.p) out += "," + format_float(v);
        for (double v : r.q) out += "," + format_float(v);
        for (double v : {r.g2, r.g3, r.g4, r.mean_n}) out += "," + format_float(v);
        out += "," + r.label + "," + r.resonance + "\n";
    }
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing: " + std::strerror(errno));
    out << content;
    out.close();
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path, bool two_d) {
    if (rows.empty()) throw InvalidArgument("refusing to write an empty sweep to '" + path + "'");
    write_file(path, to_csv(rows, two_d));
}

void emit_plot(const std::vector<SweepRow>& rows, const std::string& path, const PlotSpec& spec) {
    if (rows.empty()) throw InvalidArgument("refusing to plot an empty sweep to '" + path + "'");
    write_file(path, render_svg(rows, spec));
}

}  // namespace pblab
