#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kg/ensemble.hpp"
#include "kg/entanglement.hpp"
#include "kg/fockspace.hpp"
#include "kg/freeops.hpp"
#include "kg/graphs.hpp"
#include "kg/krylov.hpp"
#include "kg/lanczos.hpp"
#include "kg/otoc.hpp"
#include "kg/rng.hpp"
#include "kg/theory.hpp"

namespace py = pybind11;
using namespace kg;

PYBIND11_MODULE(kgpy, m) {
    m.doc() = "entanglement, Krylov complexity and OTOCs on regular graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_readwrite("n", &Graph::n)
        .def_readwrite("degree", &Graph::degree)
        .def_readwrite("edges", &Graph::edges)
        .def("adjacency", &Graph::adjacency);

    m.def("sample_regular", [](int n, int d, uint64_t seed) {
        auto rng = make_rng(seed);
        return sample_regular(n, d, rng);
    }, py::arg("n"), py::arg("d"), py::arg("seed") = 1);
    m.def("cycles_from_partition", &cycles_from_partition);
    m.def("partitions_min3", &partitions_min3);
    m.def("cycle_lengths", &cycle_lengths);
    m.def("iso_certificate", &iso_certificate);
    m.def("all_regular_graphs", [](int n, int d, uint64_t seed) {
        auto rng = make_rng(seed);
        return all_regular_graphs(n, d, rng);
    }, py::arg("n"), py::arg("d"), py::arg("seed") = 1);

    m.def("free_hamiltonian", &free_hamiltonian, py::arg("g"), py::arg("j") = 1.0);
    m.def("quasiperiodic_potential", &quasiperiodic_potential);
    m.def("quad_inner", &quad_inner);
    m.def("quad_liouville", &quad_liouville);
    m.def("number_op", &number_op);

    py::class_<SpectralMeasure>(m, "SpectralMeasure")
        .def_readonly("omega", &SpectralMeasure::omega)
        .def_readonly("weight", &SpectralMeasure::weight)
        .def("dim", &SpectralMeasure::dim);
    m.def("spectral_measure", &spectral_measure, py::arg("h"), py::arg("site"),
          py::arg("group_tol") = 1e-9, py::arg("drop_tol") = 1e-14);
    m.def("many_body_spectral_measure", &many_body_spectral_measure, py::arg("g"),
          py::arg("p"), py::arg("site"), py::arg("group_tol") = 1e-9,
          py::arg("drop_tol") = 1e-14);

    py::class_<LanczosResult>(m, "LanczosResult")
        .def_readonly("b", &LanczosResult::b)
        .def_readonly("dim", &LanczosResult::dim)
        .def_readonly("max_residual", &LanczosResult::max_residual)
        .def_readonly("reliable", &LanczosResult::reliable);
    m.def(
        "quad_lanczos",
        [](const Eigen::MatrixXd& h, const QuadraticOp& o0, double tol,
           int max_dim, int reorth) {
            return quad_lanczos(h, o0, tol, max_dim, reorth).r;
        },
        py::arg("h"), py::arg("o0"), py::arg("tol") = 1e-8,
        py::arg("max_dim") = -1, py::arg("reorth_passes") = 2);
    m.def("jacobi_from_measure", &jacobi_from_measure);

    py::class_<KrylovSeries>(m, "KrylovSeries")
        .def_readonly("t", &KrylovSeries::t)
        .def_readonly("c", &KrylovSeries::c)
        .def_readonly("max_norm_err", &KrylovSeries::max_norm_err);
    m.def("log_grid", &log_grid);
    m.def("lin_grid", &lin_grid);
    m.def("complexity_series", &complexity_series);
    m.def("complexity_time_average", &complexity_time_average);
    py::class_<PlateauResult>(m, "PlateauResult")
        .def_readonly("value", &PlateauResult::value)
        .def_readonly("t_start", &PlateauResult::t_start)
        .def_readonly("coverage", &PlateauResult::coverage)
        .def_readonly("found", &PlateauResult::found);
    m.def("plateau_average", &plateau_average, py::arg("s"),
          py::arg("drift_tol") = 0.02, py::arg("min_coverage") = 0.25);

    py::class_<ManyBodyParams>(m, "ManyBodyParams")
        .def(py::init<>())
        .def_readwrite("j", &ManyBodyParams::j)
        .def_readwrite("interacting", &ManyBodyParams::interacting)
        .def_readwrite("onsite", &ManyBodyParams::onsite);
    py::class_<FockBasis>(m, "FockBasis")
        .def_readonly("n", &FockBasis::n)
        .def_readonly("k", &FockBasis::k)
        .def_readonly("states", &FockBasis::states)
        .def("dim", &FockBasis::dim);
    m.def("fock_basis", &fock_basis, py::arg("n"), py::arg("k") = -1);
    m.def("many_body_hamiltonian", &many_body_hamiltonian);
    m.def("sector_dimension_bound", &sector_dimension_bound);
    m.def(
        "fock_lanczos",
        [](const Eigen::MatrixXd& h, const Eigen::MatrixXcd& o0, int n_sites,
           double tol, int max_dim, int reorth) {
            return fock_lanczos(h, o0, n_sites, tol, max_dim, reorth).r;
        },
        py::arg("h"), py::arg("o0"), py::arg("n_sites"), py::arg("tol") = 1e-8,
        py::arg("max_dim") = -1, py::arg("reorth_passes") = 2);

    m.def("initial_correlation", &initial_correlation);
    m.def("free_entropy_series", &free_entropy_series);
    m.def("many_body_entropy_series", &many_body_entropy_series);

    py::class_<OtocSeries>(m, "OtocSeries")
        .def_readonly("t", &OtocSeries::t)
        .def_readonly("f", &OtocSeries::f)
        .def_readonly("c", &OtocSeries::c)
        .def_readonly("err", &OtocSeries::err);
    m.def("otoc_free", &otoc_free);
    m.def("otoc_exact", &otoc_exact);
    m.def("otoc_typicality", &otoc_typicality);
    m.def("otoc_plateau_exact", &otoc_plateau_exact);
    py::class_<LyapunovFit>(m, "LyapunovFit")
        .def_readonly("lam", &LyapunovFit::lambda)
        .def_readonly("stderr", &LyapunovFit::stderr_)
        .def_readonly("t0", &LyapunovFit::t0)
        .def_readonly("t1", &LyapunovFit::t1)
        .def_readonly("ok", &LyapunovFit::ok);
    m.def("lyapunov_fit", &lyapunov_fit, py::arg("ts"), py::arg("c"),
          py::arg("lo") = 0.15, py::arg("hi") = 0.85, py::arg("tmin") = -1e300,
          py::arg("tmax") = 1e300);

    py::class_<TheoryRow>(m, "TheoryRow")
        .def_readonly("n", &TheoryRow::n)
        .def_readonly("count", &TheoryRow::count)
        .def_readonly("d_free", &TheoryRow::d_free)
        .def_readonly("log4_d_int_upper", &TheoryRow::log4_d_int_upper)
        .def_readonly("loop_avg", &TheoryRow::loop_avg);
    m.def("theory_row", &theory_row);
    m.def("theory_table", &theory_table);
    m.def("partition_count_min3", &partition_count_min3);
    m.def("count_partitions", &count_partitions);

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("slope", &FitResult::slope)
        .def_readonly("intercept", &FitResult::intercept)
        .def_readonly("slope_stderr", &FitResult::slope_stderr)
        .def_readonly("ok", &FitResult::ok);
    m.def("loglog_fit", &loglog_fit);
    m.def("linear_fit", &linear_fit);
    m.def("raw_power_fit", &raw_power_fit);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("kind", &RunConfig::kind)
        .def_readwrite("sizes", &RunConfig::sizes)
        .def_readwrite("degree", &RunConfig::degree)
        .def_readwrite("samples", &RunConfig::samples)
        .def_readwrite("j", &RunConfig::j)
        .def_readwrite("disorder_w", &RunConfig::disorder_w)
        .def_readwrite("quasiperiodic", &RunConfig::quasiperiodic)
        .def_readwrite("interacting", &RunConfig::interacting)
        .def_readwrite("tmin", &RunConfig::tmin)
        .def_readwrite("tmax", &RunConfig::tmax)
        .def_readwrite("tpoints", &RunConfig::tpoints)
        .def_readwrite("log_time", &RunConfig::log_time)
        .def_readwrite("seed", &RunConfig::seed)
        .def_readwrite("tol", &RunConfig::tol)
        .def_readwrite("workers", &RunConfig::workers)
        .def_readwrite("raw", &RunConfig::raw)
        .def_readwrite("typicality_samples", &RunConfig::typicality_samples)
        .def_readwrite("site_o", &RunConfig::site_o)
        .def_readwrite("site_q", &RunConfig::site_q)
        .def_readwrite("fit_tmin", &RunConfig::fit_tmin)
        .def_readwrite("fit_tmax", &RunConfig::fit_tmax);
    m.def("run_experiment", [](const RunConfig& cfg) {
        ExperimentResult res = run_experiment(cfg);
        std::vector<std::string> lines;
        for (const auto& r : res.records()) lines.push_back(r.dump());
        return py::make_tuple(lines, res.summary_csv_text(), res.fit.slope,
                              res.fit.slope_stderr, res.fit.ok);
    });
}
