#pragma once

#include <string>
#include <vector>

#include "pblab/model.hpp"

namespace pblab::circuit {

// CODATA 2018 exact / recommended values, SI.
inline constexpr double flux_quantum = 2.067833848e-15;     // Wb
inline constexpr double vacuum_permeability = 1.25663706212e-6;  // N/A²
inline constexpr double hbar = 1.054571817e-34;             // J·s

/// Above this the second-order flux expansion is flagged as questionable.
inline constexpr double small_parameter_limit = 0.3;

/// Split Cooper-pair box coupled to a transmission-line resonator. All
/// energies and frequencies share one unit (ħ = 1); kappa and gamma are
/// passed through to the effective model.
struct CircuitParams {
    double e_c = 0.0;       // charging energy of one Cooper pair
    double n_g = 0.5;       // gate charge
    double e_j0 = 0.0;      // single-junction Josephson energy
    double phi_q = 0.0;     // resonator flux coupling
    double phi_s = 0.0;     // drive flux amplitude
    double omega_s = 0.0;   // flux-drive frequency
    double omega_res = 1.0; // resonator mode frequency
    double omega_d = 1.0;   // direct cavity-drive frequency
    double omega_cav_drive_strength = 0.0;
    double kappa = 0.0;
    double gamma = 0.0;
};

struct GeometryParams {
    double loop_area;           // S, m²
    double distance;            // r, m
    double resonator_length;    // l, m
    double inductance_per_length;  // L₀, H/m
};

struct FluxCoupling {
    double phi_q;
    bool exceeds_small_parameter;
};

/// φ_q = (π/Φ₀)(μ₀/2πr) S √(ħω_c/(l L₀)); omega_c in rad/s.
FluxCoupling flux_coupling(const GeometryParams& geom, double omega_c);

struct EffectiveModel {
    ModelParams model;
    DriveSpec atom_drive;    // Ω_L at ω_L = 2ω_s
    DriveSpec cavity_drive;  // Ω at ω_d
    double J_x;
    double J_c;
    std::vector<std::string> warnings;

    /// Same bundle with every frequency divided by omega_c.
    EffectiveModel in_cavity_units() const;
};

/// ω₀ = E_C(n_g - 1/2), Ω_L = E_J⁰φ_s²/8, J = E_J⁰φ_q²/2, J_x = E_J⁰(1 - φ_s²/4),
/// J_c = E_J⁰φ_qφ_s/2, ω_L = 2ω_s.
EffectiveModel effective_model(const CircuitParams& circ);

struct RwaCondition {
    std::string name;
    double small;
    double large;
    double ratio;  // small/large, +inf when large ≤ 0
    bool pass;
};

struct RwaReport {
    std::vector<RwaCondition> conditions;
    double charge_regime_ratio;  // E_J⁰/E_C, should be ≪ 1
    bool all_pass;
};

/// Each "≫" inequality evaluated as |small|/large < threshold.
RwaReport rwa_validity(const CircuitParams& circ, int n_a, double threshold = 0.1);

}  // namespace pblab::circuit
