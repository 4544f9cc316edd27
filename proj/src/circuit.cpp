#include "pblab/circuit.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pblab/error.hpp"

namespace pblab::circuit {

FluxCoupling flux_coupling(const GeometryParams& g, double omega_c) {
    if (!(g.loop_area > 0 && g.distance > 0 && g.resonator_length > 0 &&
          g.inductance_per_length > 0 && omega_c > 0))
        throw InvalidArgument("geometry parameters and omega_c must be positive");
    const double current = std::sqrt(hbar * omega_c / (g.resonator_length * g.inductance_per_length));
    const double field_per_current = vacuum_permeability / (2.0 * std::numbers::pi * g.distance);
    const double phi = std::numbers::pi / flux_quantum * field_per_current * g.loop_area * current;
    return {phi, phi >= small_parameter_limit};
}

EffectiveModel effective_model(const CircuitParams& c) {
    if (c.phi_q < 0 || c.phi_s < 0) throw InvalidArgument("flux parameters must be >= 0");
    if (!(c.omega_res > 0)) throw InvalidArgument("resonator frequency must be positive");

    EffectiveModel out;
    out.model.omega_c = c.omega_res;
    out.model.omega_0 = c.e_c * (c.n_g - 0.5);
    out.model.J = c.e_j0 * c.phi_q * c.phi_q / 2.0;
    out.model.kappa = c.kappa;
    out.model.gamma = c.gamma;
    out.atom_drive = {DriveKind::atom, c.e_j0 * c.phi_s * c.phi_s / 8.0, 2.0 * c.omega_s};
    out.cavity_drive = {DriveKind::cavity_1photon, c.omega_cav_drive_strength, c.omega_d};
    out.J_x = c.e_j0 * (1.0 - c.phi_s * c.phi_s / 4.0);
    out.J_c = c.e_j0 * c.phi_q * c.phi_s / 2.0;

    if (c.phi_q > small_parameter_limit)
        out.warnings.push_back("phi_q exceeds the small-parameter limit");
    if (c.phi_s > small_parameter_limit)
        out.warnings.push_back("phi_s exceeds the small-parameter limit");
    if (out.model.omega_0 <= 0)
        out.warnings.push_back("qubit splitting is not positive; choose n_g > 1/2");
    return out;
}

EffectiveModel EffectiveModel::in_cavity_units() const {
    const double u = model.omega_c;
    EffectiveModel s = *this;
    s.model.omega_c = 1.0;
    s.model.omega_0 /= u;
    s.model.J /= u;
    s.model.kappa /= u;
    s.model.gamma /= u;
    s.atom_drive.strength /= u;
    s.atom_drive.frequency /= u;
    s.cavity_drive.strength /= u;
    s.cavity_drive.frequency /= u;
    s.J_x /= u;
    s.J_c /= u;
    return s;
}

RwaReport rwa_validity(const CircuitParams& c, int n_a, double threshold) {
    if (n_a < 1) throw InvalidArgument("n_a must be >= 1");
    const EffectiveModel m = effective_model(c);
    const double w0 = m.model.omega_0;
    const double wc = c.omega_res;
    const double ws = c.omega_s;
    const double J = m.model.J;
    const double omega_l = m.atom_drive.strength;

    RwaReport r;
    auto add = [&](std::string name, double small, double large) {
        const double ratio =
            large > 0 ? std::abs(small) / large : std::numeric_limits<double>::infinity();
        r.conditions.push_back({std::move(name), small, large, ratio, ratio < threshold});
    };
    add("omega0 >> J - J_x", J - m.J_x, w0);
    add("omega0 >> 2 J n_a", 2.0 * J * n_a, w0);
    add("omega0 + 2 omega_c >> J", J, w0 + 2.0 * wc);
    add("Omega_L << omega0 + 2 omega_s", omega_l, w0 + 2.0 * ws);
    add("J_x << omega0 - omega_c - omega_s", m.J_x, std::abs(w0 - wc - ws));

    r.charge_regime_ratio = c.e_c > 0 ? c.e_j0 / c.e_c : std::numeric_limits<double>::infinity();
    r.all_pass = true;
    for (const auto& cond : r.conditions) r.all_pass = r.all_pass && cond.pass;
    return r;
}

}  // namespace pblab::circuit
