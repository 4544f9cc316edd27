#include "pblab/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pblab/error.hpp"

namespace pblab {

void ModelParams::validate() const {
    if (!(omega_c > 0.0)) throw InvalidArgument("omega_c must be positive");
    if (!std::isfinite(omega_0)) throw InvalidArgument("omega_0 must be finite");
    if (!(J >= 0.0) || !std::isfinite(J)) throw InvalidArgument("J must be >= 0");
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw InvalidArgument("kappa must be >= 0");
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be >= 0");
}

void DriveSpec::validate() const {
    if (!(strength >= 0.0) || !std::isfinite(strength))
        throw InvalidArgument("drive strength must be >= 0");
    if (!(frequency > 0.0) || !std::isfinite(frequency))
        throw InvalidArgument("drive frequency must be positive");
}

std::string to_string(DriveKind kind) {
    switch (kind) {
        case DriveKind::cavity_1photon: return "cavity_1photon";
        case DriveKind::atom: return "atom";
        case DriveKind::cavity_2photon: return "cavity_2photon";
    }
    return "unknown";
}

DriveKind drive_kind_from_string(const std::string& name) {
    if (name == "cavity_1photon") return DriveKind::cavity_1photon;
    if (name == "atom") return DriveKind::atom;
    if (name == "cavity_2photon") return DriveKind::cavity_2photon;
    throw InvalidArgument("unknown drive kind '" + name + "'");
}

Detunings detunings(const ModelParams& params, const DriveSpec& drive) {
    if (drive.kind == DriveKind::cavity_1photon)
        return {params.omega_c - drive.frequency, params.omega_0 - 2.0 * drive.frequency};
    return {params.omega_c - 0.5 * drive.frequency, params.omega_0 - drive.frequency};
}

namespace {

// Detuned free part plus the two-photon coupling.
Operator jc_part(double cavity, double atom, double J, const SpaceConfig& space) {
    const Operator a = annihilation(space);
    const Operator ad = a.adjoint();
    const Operator sp = atom_operator(AtomOp::raise, space);
    const Operator sm = atom_operator(AtomOp::lower, space);
    return Complex(cavity) * (ad * a) + Complex(atom) * (sp * sm) +
           Complex(J) * (ad * ad * sm + sp * a * a);
}

}  // namespace

Operator hamiltonian_lab(const ModelParams& params, const SpaceConfig& space) {
    params.validate();
    return jc_part(params.omega_c, params.omega_0, params.J, space);
}

Operator hamiltonian_rotating(const ModelParams& params, const DriveSpec& drive,
                              const SpaceConfig& space) {
    params.validate();
    drive.validate();
    const auto [dc, d0] = detunings(params, drive);
    Operator h = jc_part(dc, d0, params.J, space);
    const Operator a = annihilation(space);
    const Operator ad = a.adjoint();
    switch (drive.kind) {
        case DriveKind::cavity_1photon: h += Complex(drive.strength) * (ad + a); break;
        case DriveKind::atom:
            h += Complex(drive.strength) *
                 (atom_operator(AtomOp::raise, space) + atom_operator(AtomOp::lower, space));
            break;
        case DriveKind::cavity_2photon: h += Complex(drive.strength) * (ad * ad + a * a); break;
    }
    return h;
}

EigBlock spectrum_block(int n, const ModelParams& params) {
    if (n < 2) throw InvalidArgument("spectrum_block needs n >= 2; blocks 0 and 1 are one-dimensional");
    params.validate();
    const double detuning = 2.0 * params.omega_c - params.omega_0;
    const double coupling = std::sqrt(static_cast<double>(n) * (n - 1)) * params.J;
    const double centre = 0.5 * (2.0 * (n - 1) * params.omega_c + params.omega_0);
    const double half_split = 0.5 * std::sqrt(detuning * detuning + 4.0 * coupling * coupling);

    const double theta =
        detuning == 0.0 ? std::numbers::pi / 4.0 : 0.5 * std::atan2(2.0 * coupling, detuning);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return EigBlock{.n = n,
                    .eps_plus = centre + half_split,
                    .eps_minus = centre - half_split,
                    .theta = theta,
                    .c_gn_plus = c,
                    .c_en2_plus = s,
                    .c_gn_minus = -s,
                    .c_en2_minus = c};
}

double ground_energy(const ModelParams&) { return 0.0; }

double single_excitation_energy(const ModelParams& params) { return params.omega_c; }

std::vector<Resonance> resonance_locations(const ModelParams& params, DriveKind kind, int n_max) {
    if (n_max < 2) throw InvalidArgument("resonance_locations needs n_max >= 2");
    std::vector<Resonance> lines;
    auto add_pair = [&](const std::string& stem, double plus, double minus,
                        ResonanceMechanism mech) {
        lines.push_back({stem + "+", plus, mech});
        lines.push_back({stem + "-", minus, mech});
    };

    if (kind == DriveKind::cavity_1photon) {
        lines.push_back({"direct_1", single_excitation_energy(params), ResonanceMechanism::direct});
        for (int k = 2; k <= n_max; ++k) {
            const EigBlock b = spectrum_block(k, params);
            add_pair("direct_" + std::to_string(k), b.eps_plus / k, b.eps_minus / k,
                     ResonanceMechanism::direct);
        }
    } else {
        // Each drive quantum carries two excitations.
        for (int k = 2; k <= n_max; k += 2) {
            const EigBlock b = spectrum_block(k, params);
            const double quanta = k / 2;
            add_pair("direct_" + std::to_string(k), b.eps_plus / quanta, b.eps_minus / quanta,
                     ResonanceMechanism::direct);
        }
        if (n_max >= 3) {
            const EigBlock b = spectrum_block(3, params);
            const double e1 = single_excitation_energy(params);
            add_pair("raman_1_3", b.eps_plus - e1, b.eps_minus - e1, ResonanceMechanism::raman);
        }
    }
    std::stable_sort(lines.begin(), lines.end(),
                     [](const Resonance& x, const Resonance& y) { return x.frequency < y.frequency; });
    return lines;
}

}  // namespace pblab
