#include "pblab/analytic.hpp"

#include <cmath>
#include <numbers>

#include "pblab/error.hpp"

namespace pblab {

namespace {

constexpr double denominator_floor = 1e-300;
constexpr double blockade_threshold = 1e-14;
constexpr double vacuum_p1 = 1e-14;

void require_cavity_drive(const DriveSpec& drive) {
    if (drive.kind != DriveKind::cavity_1photon)
        throw InvalidArgument("analytic amplitudes exist only for the single-photon cavity drive");
}

}  // namespace

double AmplitudeSet::norm_squared() const {
    return std::norm(c_g0) + std::norm(c_g1) + std::norm(c_g2) + std::norm(c_e0) +
           std::norm(c_g3) + std::norm(c_e1);
}

AmplitudeSet steady_amplitudes(const ModelParams& params, const DriveSpec& drive) {
    params.validate();
    drive.validate();
    require_cavity_drive(drive);

    const Complex i(0.0, 1.0);
    const auto [dc, d0] = detunings(params, drive);
    const double J = params.J;
    const double kappa = params.kappa;
    const double om = drive.strength;
    const Complex atom_term = params.gamma + 2.0 * i * d0;  // γ + 2iΔ₀
    const Complex cavity_term = 2.0 * i * dc + kappa;      // 2iΔ_c + κ

    AmplitudeSet a;
    a.w = (2.0 * dc - i * kappa) * (4.0 * J * J + atom_term * cavity_term);
    a.v = params.gamma + 2.0 * i * (d0 + dc) + kappa;
    const Complex third = 8.0 * J * J + cavity_term * a.v;
    if (std::abs(a.w) < denominator_floor || std::abs(third) < denominator_floor)
        throw DegenerateDenominator("weak-drive amplitudes have a vanishing denominator");

    const double om2 = om * om;
    const double om3 = om2 * om;
    a.c_g1 = -2.0 * om / (2.0 * dc - i * kappa);
    a.c_g2 = 2.0 * std::numbers::sqrt2 * i * atom_term * om2 / a.w;
    a.c_e0 = 8.0 * J * om2 / a.w;
    a.c_g3 = -4.0 * std::sqrt(6.0) * (8.0 * J * J - atom_term * a.v) * om3 / (3.0 * a.w * third);
    a.c_e1 = -i * 16.0 * J * a.v * om3 / (a.w * third);
    return a;
}

AnalyticDistribution analytic_distribution(const AmplitudeSet& amps, Normalization norm) {
    const double n = norm == Normalization::exact ? amps.norm_squared() : 1.0;
    return {{(std::norm(amps.c_g0) + std::norm(amps.c_e0)) / n,
             (std::norm(amps.c_g1) + std::norm(amps.c_e1)) / n, std::norm(amps.c_g2) / n,
             std::norm(amps.c_g3) / n},
            n};
}

double analytic_g2(const AmplitudeSet& amps, Normalization norm) {
    const auto d = analytic_distribution(amps, norm);
    if (!(d.p[1] > vacuum_p1)) throw VacuumState("single-photon probability below threshold");
    return 2.0 * d.p[2] / (d.p[1] * d.p[1]);
}

double analytic_g3(const AmplitudeSet& amps, Normalization norm) {
    const auto d = analytic_distribution(amps, norm);
    if (!(d.p[1] > vacuum_p1)) throw VacuumState("single-photon probability below threshold");
    return 6.0 * d.p[3] / (d.p[1] * d.p[1] * d.p[1]);
}

InterferenceSplit interference_split(const ModelParams& params, const DriveSpec& drive) {
    const AmplitudeSet a = steady_amplitudes(params, drive);
    const EigBlock b2 = spectrum_block(2, params);
    const EigBlock b3 = spectrum_block(3, params);

    // Real eigenvectors: D_{n±} = ⟨ε_{n±}|ψ⟩.
    InterferenceSplit s{};
    s.d_2plus = a.c_g2 * b2.c_gn_plus + a.c_e0 * b2.c_en2_plus;
    s.d_2minus = a.c_g2 * b2.c_gn_minus + a.c_e0 * b2.c_en2_minus;
    s.d_3plus = a.c_g3 * b3.c_gn_plus + a.c_e1 * b3.c_en2_plus;
    s.d_3minus = a.c_g3 * b3.c_gn_minus + a.c_e1 * b3.c_en2_minus;

    const Complex p2m = s.d_2minus * b2.c_gn_minus;
    const Complex p2p = s.d_2plus * b2.c_gn_plus;
    const Complex p3m = s.d_3minus * b3.c_gn_minus;
    const Complex p3p = s.d_3plus * b3.c_gn_plus;
    s.p2_noninterference = std::norm(p2m) + std::norm(p2p);
    s.p2_full = std::norm(p2m + p2p);
    s.p3_noninterference = std::norm(p3m) + std::norm(p3p);
    s.p3_full = std::norm(p3m + p3p);
    return s;
}

BlockadeCheck perfect_blockade_check(const ModelParams& params, const DriveSpec& drive) {
    const AmplitudeSet a = steady_amplitudes(params, drive);
    const double r = std::abs(a.c_g2);
    return {r < blockade_threshold, r};
}

}  // namespace pblab
