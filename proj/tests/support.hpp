#pragma once

#include <cmath>
#include <random>

#include "pblab/lindblad.hpp"
#include "pblab/model.hpp"

namespace pblab::test {

inline ModelParams baseline_params(double omega0 = 2.0) {
    return ModelParams{.omega_c = 1.0, .omega_0 = omega0, .J = 0.01, .kappa = 1e-3, .gamma = 1e-3};
}

inline DriveSpec cavity_drive(double frequency, double strength_over_kappa = 0.4,
                              double kappa = 1e-3) {
    return DriveSpec{DriveKind::cavity_1photon, strength_over_kappa * kappa, frequency};
}

inline DensityMatrix solve(const ModelParams& p, const DriveSpec& d, int n_cav_max = 12) {
    const SpaceConfig space(n_cav_max);
    return steady_state(build_liouvillian(hamiltonian_rotating(p, d, space), p));
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

inline Matrix random_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

}  // namespace pblab::test
