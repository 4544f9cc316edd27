#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pblab/analytic.hpp"
#include "pblab/circuit.hpp"
#include "pblab/criteria.hpp"
#include "pblab/error.hpp"
#include "pblab/lindblad.hpp"
#include "pblab/model.hpp"
#include "pblab/sweep.hpp"

namespace py = pybind11;
using namespace pblab;

namespace {

StatisticsReport solve_report(const ModelParams& p, const DriveSpec& d, int n_cav_max) {
    py::gil_scoped_release release;
    return numeric_point(p, d, n_cav_max);
}

Matrix steady_state_matrix(const ModelParams& p, const DriveSpec& d, int n_cav_max) {
    py::gil_scoped_release release;
    const SpaceConfig space(n_cav_max);
    return steady_state(build_liouvillian(hamiltonian_rotating(p, d, space), p)).matrix();
}

py::dict sweep_columns(const std::vector<SweepRow>& rows) {
    std::vector<double> a1, a2, g2, g3, g4, mean_n;
    std::vector<std::vector<double>> p, q;
    std::vector<std::string> label, resonance;
    for (const SweepRow& r : rows) {
        a1.push_back(r.axis1);
        a2.push_back(r.axis2);
        g2.push_back(r.g2);
        g3.push_back(r.g3);
        g4.push_back(r.g4);
        mean_n.push_back(r.mean_n);
        p.emplace_back(r.p.begin(), r.p.end());
        q.emplace_back(r.q.begin(), r.q.end());
        label.push_back(r.label);
        resonance.push_back(r.resonance);
    }
    py::dict out;
    out["axis1"] = a1;
    out["axis2"] = a2;
    out["p"] = p;
    out["q"] = q;
    out["g2"] = g2;
    out["g3"] = g3;
    out["g4"] = g4;
    out["mean_n"] = mean_n;
    out["label"] = label;
    out["resonance"] = resonance;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Photon blockade in the two-photon Jaynes-Cummings model";

    // Translators are tried newest first, so the base goes in first.
    const auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());

    py::enum_<DriveKind>(m, "DriveKind")
        .value("cavity_1photon", DriveKind::cavity_1photon)
        .value("atom", DriveKind::atom)
        .value("cavity_2photon", DriveKind::cavity_2photon);

    py::enum_<Label>(m, "Label")
        .value("PB1", Label::PB1)
        .value("PB2", Label::PB2)
        .value("PIT", Label::PIT)
        .value("mixed_2_3_enhanced", Label::mixed_2_3_enhanced)
        .value("none", Label::none);

    py::enum_<TransitionKind>(m, "TransitionKind")
        .value("one_photon", TransitionKind::one_photon)
        .value("two_photon", TransitionKind::two_photon);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double omega_c, double omega_0, double J, double kappa, double gamma) {
                 return ModelParams{omega_c, omega_0, J, kappa, gamma};
             }),
             py::arg("omega_c") = 1.0, py::arg("omega_0") = 2.0, py::arg("J") = 0.01,
             py::arg("kappa") = 1e-3, py::arg("gamma") = 1e-3)
        .def_readwrite("omega_c", &ModelParams::omega_c)
        .def_readwrite("omega_0", &ModelParams::omega_0)
        .def_readwrite("J", &ModelParams::J)
        .def_readwrite("kappa", &ModelParams::kappa)
        .def_readwrite("gamma", &ModelParams::gamma)
        .def("validate", &ModelParams::validate);

    py::class_<DriveSpec>(m, "DriveSpec")
        .def(py::init([](DriveKind kind, double strength, double frequency) {
                 return DriveSpec{kind, strength, frequency};
             }),
             py::arg("kind") = DriveKind::cavity_1photon, py::arg("strength") = 0.0,
             py::arg("frequency") = 1.0)
        .def_readwrite("kind", &DriveSpec::kind)
        .def_readwrite("strength", &DriveSpec::strength)
        .def_readwrite("frequency", &DriveSpec::frequency)
        .def("validate", &DriveSpec::validate);

    py::class_<EigBlock>(m, "EigBlock")
        .def_readonly("n", &EigBlock::n)
        .def_readonly("eps_plus", &EigBlock::eps_plus)
        .def_readonly("eps_minus", &EigBlock::eps_minus)
        .def_readonly("theta", &EigBlock::theta);

    py::class_<Resonance>(m, "Resonance")
        .def_readonly("label", &Resonance::label)
        .def_readonly("frequency", &Resonance::frequency)
        .def("__repr__", [](const Resonance& r) {
            return "Resonance(" + r.label + ", " + std::to_string(r.frequency) + ")";
        });

    py::class_<StatisticsReport>(m, "StatisticsReport")
        .def_readonly("mean_n", &StatisticsReport::mean_n)
        .def_readonly("p", &StatisticsReport::p)
        .def_readonly("poisson", &StatisticsReport::poisson)
        .def_readonly("g2", &StatisticsReport::g2)
        .def_readonly("g3", &StatisticsReport::g3)
        .def_readonly("g4", &StatisticsReport::g4)
        .def_readonly("transition_kind", &StatisticsReport::transition_kind)
        .def_readonly("label", &StatisticsReport::label);

    m.def("spectrum_block", &spectrum_block, py::arg("n"), py::arg("params"));
    m.def("resonance_locations", &resonance_locations, py::arg("params"), py::arg("kind"),
          py::arg("n_max") = 4);
    m.def(
        "hamiltonian_lab",
        [](const ModelParams& p, int n_cav_max) {
            return hamiltonian_lab(p, SpaceConfig(n_cav_max)).matrix();
        },
        py::arg("params"), py::arg("n_cav_max"));
    m.def(
        "hamiltonian_rotating",
        [](const ModelParams& p, const DriveSpec& d, int n_cav_max) {
            return hamiltonian_rotating(p, d, SpaceConfig(n_cav_max)).matrix();
        },
        py::arg("params"), py::arg("drive"), py::arg("n_cav_max"));
    m.def("steady_state", &steady_state_matrix, py::arg("params"), py::arg("drive"),
          py::arg("n_cav_max") = 12,
          "Steady-state density matrix in the atom-slow basis |g,0>,|e,0>,|g,1>,...");
    m.def("solve", &solve_report, py::arg("params"), py::arg("drive"), py::arg("n_cav_max") = 12);
    m.def("analytic", &analytic_point, py::arg("params"), py::arg("drive"));
    m.def("classify", &classify, py::arg("g2"), py::arg("g3"), py::arg("g4"), py::arg("kind"),
          py::arg("tolerance") = default_tolerance);
    m.def("poisson_reference", &poisson_reference, py::arg("mean_n"), py::arg("n"));

    m.def(
        "sweep",
        [](const std::string& text, int jobs) {
            const SweepConfig cfg = parse_config(text);
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = run_sweep(cfg, jobs);
            }
            return sweep_columns(rows);
        },
        py::arg("config_text"), py::arg("jobs") = 1,
        "Runs a sweep described by key=value config text and returns columns.");

    m.def(
        "effective_model",
        [](const py::dict& kw) {
            circuit::CircuitParams c;
            auto take = [&](const char* key, double& field) {
                if (kw.contains(key)) field = kw[key].cast<double>();
            };
            take("e_c", c.e_c);
            take("n_g", c.n_g);
            take("e_j0", c.e_j0);
            take("phi_q", c.phi_q);
            take("phi_s", c.phi_s);
            take("omega_s", c.omega_s);
            take("omega_res", c.omega_res);
            take("omega_d", c.omega_d);
            take("omega_cav_drive_strength", c.omega_cav_drive_strength);
            take("kappa", c.kappa);
            take("gamma", c.gamma);
            const circuit::EffectiveModel e = circuit::effective_model(c);
            py::dict out;
            out["model"] = e.model;
            out["atom_drive"] = e.atom_drive;
            out["cavity_drive"] = e.cavity_drive;
            out["J_x"] = e.J_x;
            out["J_c"] = e.J_c;
            out["warnings"] = e.warnings;
            return out;
        },
        py::arg("circuit"));
}
