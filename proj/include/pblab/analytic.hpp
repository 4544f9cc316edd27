#pragma once

#include <array>

#include "pblab/hilbert.hpp"
#include "pblab/model.hpp"

namespace pblab {

/// Weak-drive steady-state amplitudes for the single-photon cavity drive,
/// normalized to c_g0 = 1, with the shared denominators W and V.
struct AmplitudeSet {
    Complex c_g0{1.0, 0.0};
    Complex c_g1;
    Complex c_g2;
    Complex c_e0;
    Complex c_g3;
    Complex c_e1;
    Complex w;
    Complex v;

    double norm_squared() const;
};

/// Throws InvalidArgument for other drive kinds and DegenerateDenominator when
/// |W| or |8J² + (2iΔ_c + κ)V| drops below 1e-300.
AmplitudeSet steady_amplitudes(const ModelParams& params, const DriveSpec& drive);

enum class Normalization {
    unit,   // N ≈ 1, as in the leading-order expressions
    exact,  // N = Σ|c|²
};

struct AnalyticDistribution {
    std::array<double, 4> p;  // P0..P3
    double normalization;     // the N that was divided out
};

/// P0,1 include both atom states; P2,3 use the ground-state amplitudes only.
AnalyticDistribution analytic_distribution(const AmplitudeSet& amps,
                                           Normalization norm = Normalization::exact);

/// Leading-order forms 2P2/P1² and 6P3/P1³. Throws VacuumState if P1 ≤ 1e-14.
double analytic_g2(const AmplitudeSet& amps, Normalization norm = Normalization::unit);
double analytic_g3(const AmplitudeSet& amps, Normalization norm = Normalization::unit);

/// Two- and three-photon probabilities split into the direct contributions of
/// the dressed states |ε_{n±}⟩ and their cross (interference) terms.
/// Probabilities use N = 1.
struct InterferenceSplit {
    Complex d_2plus;
    Complex d_2minus;
    Complex d_3plus;
    Complex d_3minus;
    double p2_full;
    double p2_noninterference;
    double p3_full;
    double p3_noninterference;

    double p2_cross() const { return p2_full - p2_noninterference; }
    double p3_cross() const { return p3_full - p3_noninterference; }
};

InterferenceSplit interference_split(const ModelParams& params, const DriveSpec& drive);

struct BlockadeCheck {
    bool perfect;
    double residual;  // |c_g2|
};

/// Perfect single-photon blockade iff |c_g2| < 1e-14.
BlockadeCheck perfect_blockade_check(const ModelParams& params, const DriveSpec& drive);

}  // namespace pblab
