#pragma once

#include <string>
#include <vector>

#include "pblab/hilbert.hpp"

namespace pblab {

/// Physical rates of the two-photon JC model. Frequencies are in units of
/// omega_c by convention (omega_c = 1), but any consistent unit works.
struct ModelParams {
    double omega_c = 1.0;
    double omega_0 = 2.0;
    double J = 0.01;
    double kappa = 1e-3;
    double gamma = 1e-3;

    void validate() const;
};

enum class DriveKind { cavity_1photon, atom, cavity_2photon };

/// strength is Ω, Ω_L or Ω_l; frequency is ω_d, ω_L or ω_l, matching kind.
struct DriveSpec {
    DriveKind kind = DriveKind::cavity_1photon;
    double strength = 0.0;
    double frequency = 1.0;

    void validate() const;
};

std::string to_string(DriveKind kind);
DriveKind drive_kind_from_string(const std::string& name);

struct Detunings {
    double cavity;  // Δ_c
    double atom;    // Δ₀
};

/// Cavity and atomic detunings in the frame co-rotating with the drive.
/// The single-photon drive rotates at ω_d per photon; the atom and two-photon
/// drives rotate at half their frequency per photon.
Detunings detunings(const ModelParams& params, const DriveSpec& drive);

/// ω_c a†a + ω₀ σ₊σ₋ + J(a†²σ₋ + σ₊a²)
Operator hamiltonian_lab(const ModelParams& params, const SpaceConfig& space);

/// Time-independent Hamiltonian in the drive's rotating frame.
Operator hamiltonian_rotating(const ModelParams& params, const DriveSpec& drive,
                              const SpaceConfig& space);

/// Closed-form diagonalization of the N = n block spanned by |g,n⟩, |e,n-2⟩.
struct EigBlock {
    int n;
    double eps_plus;
    double eps_minus;
    double theta;  // mixing angle, tan(2θ) = 2√(n(n-1)) J / (2ω_c - ω₀)
    double c_gn_plus;
    double c_en2_plus;
    double c_gn_minus;
    double c_en2_minus;
};

EigBlock spectrum_block(int n, const ModelParams& params);

/// Energy of the one-dimensional blocks N = 0, 1.
double ground_energy(const ModelParams& params);
double single_excitation_energy(const ModelParams& params);

enum class ResonanceMechanism { direct, raman };

struct Resonance {
    std::string label;
    double frequency;
    ResonanceMechanism mechanism;
};

/// Drive frequencies at which multiphoton transitions out of |ε₀⟩ become
/// resonant, sorted by frequency.
///
/// Cavity drive: ω_c and ε_{k±}/k for 2 ≤ k ≤ n_max, labelled "direct_k±".
/// Atom and two-photon cavity drives: ε_{k±}/(k/2) for even k ≤ n_max, plus the
/// Raman-assisted lines ε_{3±} - ε₁ (labelled "raman_1_3±") when n_max ≥ 3.
std::vector<Resonance> resonance_locations(const ModelParams& params, DriveKind kind, int n_max);

}  // namespace pblab
