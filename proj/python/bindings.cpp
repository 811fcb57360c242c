// Python bindings for the coupled-cavity state-transfer core.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qst/analytic.hpp"
#include "qst/hamiltonian.hpp"
#include "qst/run.hpp"

namespace py = pybind11;
using namespace qst;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum state transfer in a three-cavity chain with end qubits "
              "and an optional Kerr medium on the middle cavity";

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("omega_a", &SystemParams::omega_a)
        .def_readwrite("omega_c", &SystemParams::omega_c)
        .def_readwrite("lambda1", &SystemParams::lambda1)
        .def_readwrite("lambda3", &SystemParams::lambda3)
        .def_readwrite("j12", &SystemParams::j12)
        .def_readwrite("j23", &SystemParams::j23)
        .def_readwrite("kerr_enabled", &SystemParams::kerr_enabled)
        .def_readwrite("omega_k", &SystemParams::omega_k)
        .def_readwrite("q_anh", &SystemParams::q_anh)
        .def_readwrite("p_coup", &SystemParams::p_coup)
        .def_readwrite("n_max", &SystemParams::n_max)
        .def_readwrite("nb_max", &SystemParams::nb_max)
        .def("detuning", &SystemParams::detuning)
        .def("validate", &SystemParams::validate);
    m.attr("TWO_PI") = two_pi;

    py::class_<BasisLabel>(m, "BasisLabel")
        .def_readonly("k1", &BasisLabel::k1)
        .def_readonly("n1", &BasisLabel::n1)
        .def_readonly("n2", &BasisLabel::n2)
        .def_readonly("k3", &BasisLabel::k3)
        .def_readonly("n3", &BasisLabel::n3)
        .def_readonly("nb", &BasisLabel::nb)
        .def("excitation", &BasisLabel::excitation)
        .def("__repr__", [](const BasisLabel& l) {
            std::string s = "|" + std::to_string(l.k1) + std::to_string(l.n1) +
                            std::to_string(l.n2) + std::to_string(l.k3) +
                            std::to_string(l.n3);
            s += std::to_string(l.nb) + ">";
            return s;
        });

    py::class_<BasisSet>(m, "BasisSet")
        .def_static("build", &BasisSet::build)
        .def("__len__", &BasisSet::size)
        .def_property_readonly("dims", &BasisSet::dims)
        .def_property_readonly("labels", &BasisSet::labels)
        .def("index_of", &BasisSet::index_of)
        .def("label_at", &BasisSet::label_at)
        .def("has_kerr", &BasisSet::has_kerr);
    m.def("excitation_sector", &excitation_sector, py::arg("basis"), py::arg("m"));

    m.def("build_h0", &build_h0);
    m.def("build_hi", &build_hi);
    m.def("build_total", &build_total);
    m.def("total_excitation_op", &total_excitation_op);

    py::enum_<KerrDetuningMode>(m, "KerrDetuningMode")
        .value("PAPER_FAITHFUL", KerrDetuningMode::PaperFaithful)
        .value("FIRST_PRINCIPLES", KerrDetuningMode::FirstPrinciples);

    m.def("coefficient_matrix", &coefficient_matrix);

    py::class_<SymmetricParams>(m, "SymmetricParams")
        .def_static("make", &SymmetricParams::make, py::arg("lambda_"), py::arg("j"))
        .def_static("from_system", &SymmetricParams::from)
        .def_readonly("lambda_", &SymmetricParams::lambda)
        .def_readonly("j", &SymmetricParams::j)
        .def_readonly("omega_big", &SymmetricParams::omega_big);

    m.def(
        "closed_form",
        [](const SymmetricParams& p, double t) { return closed_form(p, t).to_vector(); },
        py::arg("params"), py::arg("t"),
        "Amplitudes (q1, f1, f2, q3, f3) at time t for q1(0) = 1");
    m.def("probabilities", &probabilities);
    m.def("inversions", &inversions);
    m.def("q1_printed_variant", &q1_printed_variant);
    m.def("verify_inverse_transform", &verify_inverse_transform);

    m.def(
        "integrate_reduced",
        [](const SystemParams& p, const std::vector<double>& t_grid,
           KerrDetuningMode mode, const std::string& initial) {
            const int slot = amplitude_slot(initial, p.kerr_enabled);
            if (slot < 0)
                throw std::invalid_argument("integrate_reduced: unknown initial '" +
                                            initial + "'");
            Vector v = Vector::Zero(p.kerr_enabled ? 6 : 5);
            v(slot) = 1.0;
            const auto rs =
                integrate(ReducedState::from_vector(v, p.kerr_enabled), p, t_grid, mode);
            std::vector<Vector> amps;
            amps.reserve(rs.states.size());
            for (const auto& s : rs.states) amps.push_back(s.to_vector());
            return py::make_tuple(rs.t, amps, rs.norm_sq);
        },
        py::arg("params"), py::arg("t_grid"),
        py::arg("mode") = KerrDetuningMode::PaperFaithful, py::arg("initial") = "q1",
        "Returns (t, amplitude vectors, squared norms)");

    py::class_<TimeSeries>(m, "TimeSeries")
        .def_readonly("t", &TimeSeries::t)
        .def_readonly("sigma_z1", &TimeSeries::sigma_z1)
        .def_readonly("sigma_z3", &TimeSeries::sigma_z3)
        .def_readonly("n1", &TimeSeries::n1)
        .def_readonly("n2", &TimeSeries::n2)
        .def_readonly("n3", &TimeSeries::n3)
        .def_readonly("nb", &TimeSeries::nb)
        .def_readonly("pops", &TimeSeries::pops)
        .def_readonly("norm_sq", &TimeSeries::norm_sq)
        .def_readonly("has_kerr", &TimeSeries::has_kerr)
        .def("__len__", &TimeSeries::samples);

    m.def("evolve", &evolve, py::arg("initial"), py::arg("h"), py::arg("t_grid"),
          py::arg("substeps_per_ns") = 0.0);
    m.def("expectation", &expectation);
    m.def("observables_series", &observables_series);

    py::class_<TransferMetrics>(m, "TransferMetrics")
        .def_readonly("peak", &TransferMetrics::peak)
        .def_readonly("t_peak", &TransferMetrics::t_peak)
        .def_readonly("t_threshold", &TransferMetrics::t_threshold)
        .def_readonly("threshold", &TransferMetrics::threshold);
    m.def("transfer_metrics", &transfer_metrics, py::arg("series"),
          py::arg("threshold") = 0.9);

    py::enum_<SolverKind>(m, "SolverKind")
        .value("REDUCED", SolverKind::Reduced)
        .value("ANALYTIC", SolverKind::Analytic)
        .value("FULL", SolverKind::Full);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("solver", &RunConfig::solver)
        .def_readwrite("kerr_mode", &RunConfig::kerr_mode)
        .def_readwrite("t_max_ns", &RunConfig::t_max_ns)
        .def_readwrite("samples", &RunConfig::samples)
        .def_readwrite("initial", &RunConfig::initial)
        .def_readwrite("output_path", &RunConfig::output_path)
        .def("system", &RunConfig::system)
        .def("time_grid", &RunConfig::time_grid)
        .def("validate", &RunConfig::validate);

    m.def("load_config", &load_config);
    m.def("echo_config", &echo_config);
    m.def("run_series", &run_series);
    m.def("run", &run, "Run and write the CSV to config.output_path");
    m.def("preset_ids", [] { return preset_ids(); });
    m.def("figure_preset", &figure_preset);
    m.def("reproduce", &reproduce, py::arg("id"), py::arg("outdir") = std::string("."));
    m.def("series_to_csv", &series_to_csv);
    m.def("extract_embedded_config", &extract_embedded_config);

    py::register_exception<ConfigError>(m, "ConfigError");
}
