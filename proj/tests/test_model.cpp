#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pblab/error.hpp"
#include "pblab/model.hpp"

using namespace pblab;
using doctest::Approx;

namespace {

const ModelParams resonant{1.0, 2.0, 0.01, 1e-3, 1e-3};

double frequency_of(const std::vector<Resonance>& lines, const std::string& label) {
    for (const auto& r : lines)
        if (r.label == label) return r.frequency;
    FAIL("missing resonance " << label);
    return 0.0;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(resonant.validate());
    CHECK_THROWS_AS((ModelParams{0.0, 2.0, 0.01, 0.0, 0.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((ModelParams{1.0, 2.0, -0.01, 0.0, 0.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((ModelParams{1.0, 2.0, 0.01, -1.0, 0.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((ModelParams{1.0, 2.0, 0.01, 0.0, -1.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((DriveSpec{DriveKind::atom, -1.0, 2.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((DriveSpec{DriveKind::atom, 1.0, 0.0}.validate()), InvalidArgument);
    CHECK(drive_kind_from_string(to_string(DriveKind::cavity_2photon)) == DriveKind::cavity_2photon);
    CHECK_THROWS_AS(drive_kind_from_string("laser"), InvalidArgument);
}

TEST_CASE("uncoupled lab Hamiltonian") {
    const SpaceConfig s(5);
    const ModelParams p{1.0, 1.7, 0.0, 0.0, 0.0};
    const Operator h = hamiltonian_lab(p, s);
    CHECK((h.matrix() - Matrix(h.matrix().diagonal().asDiagonal())).norm() == 0.0);
    for (int n = 0; n <= 5; ++n) {
        CHECK(h(s.index(AtomState::ground, n), s.index(AtomState::ground, n)).real() == Approx(n));
        CHECK(h(s.index(AtomState::excited, n), s.index(AtomState::excited, n)).real() ==
              Approx(1.7 + n));
    }
}

TEST_CASE("two-photon coupling matrix element") {
    const SpaceConfig s(5);
    const Operator h = hamiltonian_lab(resonant, s);
    CHECK(h(s.index(AtomState::ground, 2), s.index(AtomState::excited, 0)).real() ==
          Approx(std::sqrt(2.0) * 0.01).epsilon(1e-15));
    CHECK(h(s.index(AtomState::ground, 5), s.index(AtomState::excited, 3)).real() ==
          Approx(std::sqrt(20.0) * 0.01).epsilon(1e-15));
}

TEST_CASE("N = 2 block of the lab Hamiltonian") {
    const SpaceConfig s(4);
    const Operator h = hamiltonian_lab(resonant, s);
    const int i = s.index(AtomState::ground, 2), j = s.index(AtomState::excited, 0);
    Eigen::Matrix2cd block;
    block << h(i, i), h(i, j), h(j, i), h(j, j);
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
    CHECK(es.eigenvalues()(0) == Approx(2.0 - 0.0141421356237).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) == Approx(2.0 + 0.0141421356237).epsilon(1e-12));
}

TEST_CASE("rotating frames") {
    const SpaceConfig s(6);
    SUBCASE("resonant cavity drive leaves no diagonal") {
        const Operator h = hamiltonian_rotating(resonant, DriveSpec{DriveKind::cavity_1photon, 4e-4, 1.0}, s);
        CHECK(h.matrix().diagonal().norm() == 0.0);
        CHECK(h(s.index(AtomState::ground, 1), s.index(AtomState::ground, 0)).real() == 4e-4);
    }
    SUBCASE("atom drive at the two-photon resonances") {
        const double J = 0.012;
        const ModelParams p{1.0, 2.0, J, 1e-3, 1e-3};
        for (int sign : {+1, -1}) {
            const Detunings d =
                detunings(p, DriveSpec{DriveKind::atom, 4e-4, 2.0 + sign * std::sqrt(2.0) * J});
            CHECK(d.cavity == Approx(-sign * J / std::sqrt(2.0)).epsilon(1e-9));
            CHECK(d.atom == Approx(-sign * std::sqrt(2.0) * J).epsilon(1e-9));
        }
        const Operator h = hamiltonian_rotating(p, DriveSpec{DriveKind::atom, 4e-4, 2.0}, s);
        CHECK(h(s.index(AtomState::excited, 3), s.index(AtomState::ground, 3)).real() == 4e-4);
    }
    SUBCASE("undriven two-photon cavity frame is the atom frame") {
        const Operator a = hamiltonian_rotating(resonant, DriveSpec{DriveKind::atom, 0.0, 2.013}, s);
        const Operator b =
            hamiltonian_rotating(resonant, DriveSpec{DriveKind::cavity_2photon, 0.0, 2.013}, s);
        CHECK(a.matrix() == b.matrix());
        const Operator c =
            hamiltonian_rotating(resonant, DriveSpec{DriveKind::cavity_2photon, 3e-4, 2.0}, s);
        CHECK(c(s.index(AtomState::ground, 2), s.index(AtomState::ground, 0)).real() ==
              Approx(std::sqrt(2.0) * 3e-4));
    }
    SUBCASE("one-photon frame detunings") {
        const Detunings d = detunings(ModelParams{1.0, 1.92, 0.01, 0, 0},
                                      DriveSpec{DriveKind::cavity_1photon, 0.0, 0.96});
        CHECK(d.cavity == Approx(0.04));
        CHECK(d.atom == Approx(0.0));
    }
}

TEST_CASE("rotating frame depends only on detunings") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> shift(-0.2, 0.2);
    const SpaceConfig s(7);
    for (auto kind : {DriveKind::cavity_1photon, DriveKind::atom, DriveKind::cavity_2photon}) {
        const double per_photon = kind == DriveKind::cavity_1photon ? 1.0 : 0.5;
        for (int trial = 0; trial < 10; ++trial) {
            const double delta = shift(rng);
            const double wd = kind == DriveKind::cavity_1photon ? 0.993 : 2.011;
            ModelParams p = resonant;
            ModelParams q = resonant;
            q.omega_c += per_photon * delta;
            q.omega_0 += 2.0 * per_photon * delta;
            const Operator a = hamiltonian_rotating(p, DriveSpec{kind, 4e-4, wd}, s);
            const Operator b = hamiltonian_rotating(q, DriveSpec{kind, 4e-4, wd + delta}, s);
            CHECK((a.matrix() - b.matrix()).norm() < 1e-13);
        }
    }
}

TEST_CASE("constructed Hamiltonians are Hermitian") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const SpaceConfig s(3 + trial % 10);
        const ModelParams p{1.0, 1.5 + u(rng), 0.05 * u(rng), 1e-3, 1e-3};
        CHECK(hamiltonian_lab(p, s).hermiticity_error() < 1e-14);
        for (auto kind : {DriveKind::cavity_1photon, DriveKind::atom, DriveKind::cavity_2photon})
            CHECK(hamiltonian_rotating(p, DriveSpec{kind, 1e-3 * u(rng), 0.5 + 2 * u(rng)}, s)
                      .hermiticity_error() < 1e-14);
    }
}

TEST_CASE("closed-form blocks") {
    SUBCASE("resonant n = 2") {
        const EigBlock b = spectrum_block(2, resonant);
        CHECK(b.eps_plus == Approx(2.0 + std::sqrt(2.0) * 0.01).epsilon(1e-15));
        CHECK(b.eps_minus == Approx(2.0 - std::sqrt(2.0) * 0.01).epsilon(1e-15));
        for (double c : {b.c_gn_plus, b.c_en2_plus, b.c_en2_minus, -b.c_gn_minus})
            CHECK(c == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
        CHECK(b.theta == Approx(std::numbers::pi / 4));
    }
    SUBCASE("off-resonant n = 2") {
        const EigBlock b = spectrum_block(2, ModelParams{1.0, 1.92, 0.01, 0, 0});
        CHECK(b.eps_plus == Approx(1.96 + 0.5 * std::sqrt(0.0064 + 8e-4)).epsilon(1e-14));
        CHECK(b.eps_minus == Approx(1.96 - 0.5 * std::sqrt(0.0064 + 8e-4)).epsilon(1e-14));
        CHECK(b.eps_plus == Approx(2.0024264).epsilon(1e-7));
        CHECK(b.eps_minus == Approx(1.9175735).epsilon(1e-7));
        CHECK(b.eps_plus / 2 == Approx((3.92 + std::sqrt(0.0064 + 8e-4)) / 4).epsilon(1e-14));
    }
    SUBCASE("decoupled limit") {
        for (double w0 : {1.7, 2.3}) {
            const ModelParams p{1.0, w0, 0.0, 0, 0};
            for (int n = 2; n <= 6; ++n) {
                const EigBlock b = spectrum_block(n, p);
                CHECK(b.eps_plus == Approx(std::max<double>(n, n - 2 + w0)));
                CHECK(b.eps_minus == Approx(std::min<double>(n, n - 2 + w0)));
                const bool zero = std::abs(b.theta) < 1e-15;
                const bool right = std::abs(std::abs(b.theta) - std::numbers::pi / 2) < 1e-15;
                CHECK((zero || right));
            }
        }
    }
    CHECK_THROWS_AS(spectrum_block(1, resonant), InvalidArgument);
    CHECK(ground_energy(resonant) == 0.0);
    CHECK(single_excitation_energy(resonant) == 1.0);
}

TEST_CASE("closed-form blocks match numerical diagonalization") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> w0(1.5, 2.5), j(0.001, 0.05);
    const SpaceConfig s(10);
    for (int trial = 0; trial < 50; ++trial) {
        const ModelParams p{1.0, w0(rng), j(rng), 0, 0};
        const Operator h = hamiltonian_lab(p, s);
        for (int n = 2; n <= 10; ++n) {
            const int i = s.index(AtomState::ground, n), k = s.index(AtomState::excited, n - 2);
            Eigen::Matrix2cd block;
            block << h(i, i), h(i, k), h(k, i), h(k, k);
            const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(block);
            const EigBlock b = spectrum_block(n, p);
            CHECK(std::abs(es.eigenvalues()(0) - b.eps_minus) < 1e-10);
            CHECK(std::abs(es.eigenvalues()(1) - b.eps_plus) < 1e-10);
            CHECK(b.eps_plus >= b.eps_minus);
            // orthonormal eigenvectors that diagonalize the block
            CHECK(b.c_gn_plus * b.c_gn_plus + b.c_en2_plus * b.c_en2_plus == Approx(1.0));
            CHECK(b.c_gn_minus * b.c_gn_minus + b.c_en2_minus * b.c_en2_minus == Approx(1.0));
            CHECK(std::abs(b.c_gn_plus * b.c_gn_minus + b.c_en2_plus * b.c_en2_minus) < 1e-15);
            const Eigen::Vector2cd vp(b.c_gn_plus, b.c_en2_plus);
            CHECK((block * vp - b.eps_plus * vp).norm() < 1e-10);
            const Eigen::Vector2cd vm(b.c_gn_minus, b.c_en2_minus);
            CHECK((block * vm - b.eps_minus * vm).norm() < 1e-10);
        }
    }
}

TEST_CASE("resonance catalogue, cavity drive") {
    const auto lines = resonance_locations(resonant, DriveKind::cavity_1photon, 3);
    CHECK(lines.size() == 5);
    CHECK(frequency_of(lines, "direct_1") == 1.0);
    CHECK(frequency_of(lines, "direct_2+") == Approx(1 + 0.01 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(frequency_of(lines, "direct_2-") == Approx(1 - 0.01 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(frequency_of(lines, "direct_3+") == Approx(1 + std::sqrt(6.0) * 0.01 / 3).epsilon(1e-14));
    CHECK(frequency_of(lines, "direct_3-") == Approx(1 - std::sqrt(6.0) * 0.01 / 3).epsilon(1e-14));
    CHECK(std::is_sorted(lines.begin(), lines.end(),
                         [](const Resonance& a, const Resonance& b) { return a.frequency < b.frequency; }));
    for (const auto& r : lines) CHECK(r.mechanism == ResonanceMechanism::direct);
    CHECK_THROWS_AS(resonance_locations(resonant, DriveKind::cavity_1photon, 1), InvalidArgument);
}

TEST_CASE("resonance catalogue, atom drive") {
    const double J = 0.012;
    const ModelParams p{1.0, 2.0, J, 1e-3, 1e-3};
    for (auto kind : {DriveKind::atom, DriveKind::cavity_2photon}) {
        const auto lines = resonance_locations(p, kind, 4);
        CHECK(lines.size() == 6);
        CHECK(frequency_of(lines, "direct_2+") == Approx(2 + std::sqrt(2.0) * J).epsilon(1e-14));
        CHECK(frequency_of(lines, "direct_2-") == Approx(2 - std::sqrt(2.0) * J).epsilon(1e-14));
        CHECK(frequency_of(lines, "direct_4+") == Approx(2 + std::sqrt(3.0) * J).epsilon(1e-14));
        CHECK(frequency_of(lines, "direct_4-") == Approx(2 - std::sqrt(3.0) * J).epsilon(1e-14));
        CHECK(frequency_of(lines, "raman_1_3+") == Approx(2 + std::sqrt(6.0) * J).epsilon(1e-14));
        CHECK(frequency_of(lines, "raman_1_3-") == Approx(2 - std::sqrt(6.0) * J).epsilon(1e-14));
        int raman = 0;
        for (const auto& r : lines) raman += r.mechanism == ResonanceMechanism::raman;
        CHECK(raman == 2);
    }
}

TEST_CASE("harmonic limit collapses the catalogue") {
    const ModelParams p{1.0, 2.0, 0.0, 1e-3, 1e-3};
    for (const auto& r : resonance_locations(p, DriveKind::cavity_1photon, 6))
        CHECK(r.frequency == Approx(1.0).epsilon(1e-15));
    for (const auto& r : resonance_locations(p, DriveKind::atom, 6))
        CHECK(r.frequency == Approx(2.0).epsilon(1e-15));
}
