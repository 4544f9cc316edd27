#include <doctest.h>

#include <cmath>

#include "pblab/circuit.hpp"
#include "pblab/error.hpp"
#include "pblab/model.hpp"

using namespace pblab;
using namespace pblab::circuit;
using doctest::Approx;

namespace {

CircuitParams sample() {
    CircuitParams c;
    c.e_c = 100.0;
    c.n_g = 0.52;
    c.e_j0 = 0.5;
    c.phi_q = 0.2;
    c.phi_s = 0.1;
    c.omega_s = 0.7;
    c.omega_res = 1.0;
    c.omega_d = 1.0;
    c.omega_cav_drive_strength = 4e-4;
    c.kappa = 1e-3;
    c.gamma = 1e-3;
    return c;
}

const GeometryParams geometry{1e-10, 2e-6, 1e-2, 4e-7};
constexpr double omega_si = 2 * 3.141592653589793 * 6e9;

}  // namespace

TEST_CASE("circuit substitutions") {
    CircuitParams c = sample();
    c.e_j0 = 10.0;
    c.phi_q = 0.1;
    c.phi_s = 0.2;
    const EffectiveModel m = effective_model(c);
    CHECK(m.model.J == Approx(0.05).epsilon(1e-14));
    CHECK(m.atom_drive.strength == Approx(0.05).epsilon(1e-14));
    CHECK(m.J_c == Approx(0.1).epsilon(1e-14));
    CHECK(m.J_x == Approx(10.0 * (1 - 0.01)).epsilon(1e-14));
    CHECK(m.atom_drive.kind == DriveKind::atom);
    CHECK(m.atom_drive.frequency == 2.0 * c.omega_s);
    CHECK(m.cavity_drive.kind == DriveKind::cavity_1photon);
    CHECK(m.cavity_drive.strength == c.omega_cav_drive_strength);
    CHECK(m.model.kappa == c.kappa);

    c.e_c = 50.0;
    c.n_g = 0.52;
    CHECK(effective_model(c).model.omega_0 == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("small-parameter warnings") {
    CircuitParams c = sample();
    CHECK(effective_model(c).warnings.empty());
    c.phi_q = 0.35;
    CHECK(effective_model(c).warnings.size() == 1);
    c.phi_s = 0.5;
    CHECK(effective_model(c).warnings.size() == 2);
    c.phi_q = -0.1;
    CHECK_THROWS_AS(effective_model(c), InvalidArgument);
}

TEST_CASE("effective model is homogeneous in the circuit energies") {
    const CircuitParams c = sample();
    const EffectiveModel a = effective_model(c);
    for (double s : {0.1, 3.0, 250.0}) {
        CircuitParams d = c;
        d.e_c *= s;
        d.e_j0 *= s;
        const EffectiveModel b = effective_model(d);
        CHECK(b.model.omega_0 == Approx(s * a.model.omega_0).epsilon(1e-14));
        CHECK(b.model.J == Approx(s * a.model.J).epsilon(1e-14));
        CHECK(b.atom_drive.strength == Approx(s * a.atom_drive.strength).epsilon(1e-14));
        CHECK(b.J_x == Approx(s * a.J_x).epsilon(1e-14));
        CHECK(b.J_c == Approx(s * a.J_c).epsilon(1e-14));
        CHECK(b.model.J / b.model.omega_0 == Approx(a.model.J / a.model.omega_0).epsilon(1e-14));
        CHECK(rwa_validity(d, 2).charge_regime_ratio == Approx(rwa_validity(c, 2).charge_regime_ratio));
    }
}

TEST_CASE("flux coupling geometry scaling") {
    const double phi = flux_coupling(geometry, omega_si).phi_q;
    CHECK(phi > 0.0);
    GeometryParams g = geometry;
    g.distance *= 2;
    CHECK(flux_coupling(g, omega_si).phi_q == Approx(phi / 2).epsilon(1e-14));
    g = geometry;
    g.loop_area *= 2;
    CHECK(flux_coupling(g, omega_si).phi_q == Approx(2 * phi).epsilon(1e-14));
    g = geometry;
    g.inductance_per_length *= 4;
    CHECK(flux_coupling(g, omega_si).phi_q == Approx(phi / 2).epsilon(1e-14));
    // direct evaluation in SI units
    const double expected = 3.141592653589793 / flux_quantum * vacuum_permeability /
                            (2 * 3.141592653589793 * geometry.distance) * geometry.loop_area *
                            std::sqrt(hbar * omega_si / (geometry.resonator_length * geometry.inductance_per_length));
    CHECK(phi == Approx(expected).epsilon(1e-14));
    g = geometry;
    g.loop_area *= 1e6;
    CHECK(flux_coupling(g, omega_si).exceeds_small_parameter);
    CHECK_FALSE(flux_coupling(geometry, omega_si).exceeds_small_parameter);
    g.distance = 0;
    CHECK_THROWS_AS(flux_coupling(g, omega_si), InvalidArgument);
}

TEST_CASE("RWA conditions") {
    SUBCASE("ratio arithmetic") {
        CircuitParams c = sample();
        c.e_c = 50.0;  // ω₀ = 1
        c.e_j0 = 0.5;
        c.phi_q = std::sqrt(0.05 / 3 * 2 / 0.5 / 2);  // 2 J n_a = 0.05 at n_a = 3
        const RwaReport r = rwa_validity(c, 3);
        REQUIRE(r.conditions.size() == 5);
        CHECK(r.conditions[1].ratio == Approx(0.05).epsilon(1e-12));
        CHECK(r.conditions[1].pass);
    }
    SUBCASE("equal splitting and coupling cannot satisfy >>") {
        CircuitParams c = sample();
        c.phi_q = 0.2;
        c.e_j0 = 0.5;
        const double J = c.e_j0 * c.phi_q * c.phi_q / 2;
        c.e_c = J / 0.02;  // ω₀ = J
        const RwaReport r = rwa_validity(c, 1);
        CHECK_FALSE(r.conditions[0].pass);
        CHECK_FALSE(r.conditions[1].pass);
        CHECK_FALSE(r.all_pass);
        // J_x matched to J removes the first violation only
        c.phi_s = 2.0 * std::sqrt(1.0 - c.phi_q * c.phi_q / 2);
        const RwaReport m = rwa_validity(c, 1);
        CHECK(m.conditions[0].ratio < 1e-12);
        CHECK(m.conditions[0].pass);
        CHECK_FALSE(m.conditions[1].pass);
    }
    SUBCASE("common energy scale leaves every ratio unchanged") {
        const CircuitParams c = sample();
        CircuitParams d = c;
        const double s = 7.5;
        d.e_c *= s;
        d.e_j0 *= s;
        d.omega_s *= s;
        d.omega_res *= s;
        d.omega_d *= s;
        const RwaReport a = rwa_validity(c, 2), b = rwa_validity(d, 2);
        for (std::size_t k = 0; k < a.conditions.size(); ++k) {
            CHECK(b.conditions[k].ratio == Approx(a.conditions[k].ratio).epsilon(1e-13));
            CHECK(b.conditions[k].pass == a.conditions[k].pass);
        }
    }
    SUBCASE("threshold is configurable") {
        const CircuitParams c = sample();
        const RwaReport strict = rwa_validity(c, 1, 1e-9);
        CHECK_FALSE(strict.all_pass);
        const RwaReport loose = rwa_validity(c, 1, 1e9);
        CHECK(loose.all_pass);
    }
    CHECK_THROWS_AS(rwa_validity(sample(), 0), InvalidArgument);
}

TEST_CASE("mapped model reproduces the atom-driven rotating Hamiltonian") {
    const EffectiveModel m = effective_model(sample()).in_cavity_units();
    const SpaceConfig s(6);
    const Operator h = hamiltonian_rotating(m.model, m.atom_drive, s);
    const double dc = m.model.omega_c - m.atom_drive.frequency / 2;
    const double d0 = m.model.omega_0 - m.atom_drive.frequency;
    Matrix expected = Matrix::Zero(s.dim(), s.dim());
    for (int n = 0; n <= 6; ++n) {
        expected(s.index(AtomState::ground, n), s.index(AtomState::ground, n)) = dc * n;
        expected(s.index(AtomState::excited, n), s.index(AtomState::excited, n)) = dc * n + d0;
        const int e = s.index(AtomState::excited, n), g = s.index(AtomState::ground, n);
        expected(e, g) = expected(g, e) = m.atom_drive.strength;
        if (n + 2 <= 6) {
            const int g2 = s.index(AtomState::ground, n + 2);
            expected(g2, e) = expected(e, g2) = m.model.J * std::sqrt((n + 1.0) * (n + 2.0));
        }
    }
    CHECK((h.matrix() - expected).norm() < 1e-15);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) CHECK((h(i, j) == Complex(0)) == (expected(i, j) == Complex(0)));
}

TEST_CASE("cavity units") {
    CircuitParams c = sample();
    c.omega_res = 4.0;
    c.e_c = 400.0;
    c.omega_s = 4.0;
    const EffectiveModel m = effective_model(c).in_cavity_units();
    CHECK(m.model.omega_c == 1.0);
    CHECK(m.model.omega_0 == Approx(2.0));
    CHECK(m.atom_drive.frequency == Approx(2.0));
    CHECK(m.model.kappa == Approx(c.kappa / 4));
}
