#pragma once

#include <array>
#include <string>
#include <vector>

#include "pblab/lindblad.hpp"

namespace pblab {

enum class TransitionKind { one_photon, two_photon };

enum class Label { PB1, PB2, PIT, mixed_2_3_enhanced, none };

std::string to_string(Label label);
std::string to_string(TransitionKind kind);

/// Photon-number statistics are reported up to this Fock index.
inline constexpr int report_depth = 4;

/// Half-width of the "borderline" band around g = 1.
inline constexpr double default_tolerance = 1e-3;

/// Cavity drive is a one-photon process; atom and two-photon cavity drives
/// inject photons pairwise.
TransitionKind transition_kind(DriveKind drive);

double poisson_reference(double mean_n, int n);

/// Labels from the correlation criteria. NaN inputs never satisfy a
/// comparison, so the unused orders of a one-photon classification may be NaN.
///
/// one_photon: PB1 if g2 < 1-τ; PB2 if g2 > 1+τ and g3 < 1-τ;
///             PIT if g2 > 1+τ and g3 > 1+τ.
/// two_photon: PB2 if g2 > 1+τ, g3 < 1-τ and g4 < 1-τ; PIT if all three exceed
///             1+τ; mixed_2_3_enhanced if g2, g3 > 1+τ and g4 < 1-τ.
/// Everything else (including any g within τ of 1) is none.
Label classify(double g2, double g3, double g4, TransitionKind kind,
               double tolerance = default_tolerance);

/// (P_n - 𝒫_n)/𝒫_n; entries whose reference is below 1e-300 are NaN.
std::vector<double> relative_deviation(const std::vector<double>& p,
                                       const std::vector<double>& poisson);

/// P_n ≥ 𝒫_n and P_m < 𝒫_m for n < m ≤ depth. Orders where both P_m and 𝒫_m
/// vanish are suppressed trivially.
bool pn_criterion(const std::vector<double>& p, const std::vector<double>& poisson, int n);

struct StatisticsReport {
    double mean_n = 0.0;
    std::array<double, report_depth + 1> p{};
    std::array<double, report_depth + 1> poisson{};
    double g2 = 0.0;  // NaN when the state is vacuum
    double g3 = 0.0;
    double g4 = 0.0;
    TransitionKind transition_kind = TransitionKind::one_photon;
    Label label = Label::none;
};

/// Statistics of a density matrix; a vacuum state gets NaN correlations and
/// label none.
StatisticsReport make_report(const DensityMatrix& rho, TransitionKind kind,
                             double tolerance = default_tolerance);

}  // namespace pblab
