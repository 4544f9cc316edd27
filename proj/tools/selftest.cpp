#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "pblab/analytic.hpp"
#include "pblab/criteria.hpp"
#include "pblab/lindblad.hpp"
#include "pblab/model.hpp"

using namespace pblab;

namespace {

struct Check {
    std::string name;
    std::function<double()> measure;  // returns an error that must stay below tol
    double tol;
};

double ladder_commutator() {
    const SpaceConfig space(10);
    const Operator c = commutator(annihilation(space), creation(space));
    Operator id = Operator::identity(space);
    double err = 0.0;
    for (int atom = 0; atom < 2; ++atom)
        for (int n = 0; n < space.n_cav_max(); ++n) {
            const int i = space.index(static_cast<AtomState>(atom), n);
            err = std::max(err, std::abs(c(i, i) - id(i, i)));
        }
    return err;
}

double excitation_conserved() {
    const SpaceConfig space(10);
    const Operator h = hamiltonian_lab(ModelParams{1.0, 1.93, 0.017, 0.0, 0.0}, space);
    return commutator(weighted_excitation(space), h).norm();
}

double closed_form_spectrum() {
    const ModelParams p{1.0, 1.95, 0.02, 0.0, 0.0};
    const SpaceConfig space(10);
    const Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian_lab(p, space).matrix());
    double err = 0.0;
    for (int n = 2; n <= 10; ++n) {
        const EigBlock b = spectrum_block(n, p);
        for (double eps : {b.eps_plus, b.eps_minus})
            err = std::max(err, (es.eigenvalues().array() - eps).abs().minCoeff());
    }
    return err;
}

double trace_preserving() {
    const ModelParams p{};
    const SpaceConfig space(8);
    const DriveSpec d{DriveKind::cavity_1photon, 4e-4, 1.0};
    return build_liouvillian(hamiltonian_rotating(p, d, space), p).trace_preservation_error();
}

double coherent_state_g2() {
    const ModelParams p{1.0, 2.0, 0.0, 1e-3, 1e-3};
    const SpaceConfig space(20);
    const DriveSpec d{DriveKind::cavity_1photon, 2e-4, 1.0};
    const DensityMatrix rho = steady_state(build_liouvillian(hamiltonian_rotating(p, d, space), p));
    return std::abs(correlation_g(rho, 2) - 1.0);
}

double weak_drive_agreement() {
    const ModelParams p{};
    const DriveSpec d{DriveKind::cavity_1photon, 1e-5, 1.0};
    const SpaceConfig space(8);
    const DensityMatrix rho = steady_state(build_liouvillian(hamiltonian_rotating(p, d, space), p));
    const double oracle = analytic_g2(steady_amplitudes(p, d));
    return std::abs(correlation_g(rho, 2) - oracle) / oracle;
}

double blockade_label() {
    const ModelParams p{};
    const DriveSpec d{DriveKind::cavity_1photon, 4e-4, 1.0};
    const SpaceConfig space(8);
    const DensityMatrix rho = steady_state(build_liouvillian(hamiltonian_rotating(p, d, space), p));
    return make_report(rho, TransitionKind::one_photon).label == Label::PB1 ? 0.0 : 1.0;
}

}  // namespace

int run_selftest(std::ostream& out) {
    const std::vector<Check> checks = {
        {"ladder commutator [a, a+] = 1 below the cutoff", ladder_commutator, 1e-12},
        {"weighted excitation number is conserved", excitation_conserved, 1e-12},
        {"closed-form blocks match numerical diagonalization", closed_form_spectrum, 1e-10},
        {"Liouvillian preserves the trace", trace_preserving, 1e-12},
        {"uncoupled cavity relaxes to a coherent state", coherent_state_g2, 1e-6},
        {"weak-drive g2 matches the amplitude expansion", weak_drive_agreement, 1e-2},
        {"resonant cavity drive gives single-photon blockade", blockade_label, 0.5},
    };
    int failed = 0;
    for (const auto& c : checks) {
        double err = 0.0;
        std::string note;
        try {
            err = c.measure();
        } catch (const std::exception& e) {
            err = INFINITY;
            note = std::string(" (") + e.what() + ")";
        }
        const bool ok = err <= c.tol;
        failed += !ok;
        out << (ok ? "PASS " : "FAIL ") << c.name << "  err=" << err << " tol=" << c.tol << note
            << "\n";
    }
    out << (failed ? std::to_string(failed) + " check(s) failed" : "all checks passed") << "\n";
    return failed;
}
