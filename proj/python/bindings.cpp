#include "unruh_otto/unruh_otto.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace unruh_otto;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Unruh quantum Otto engine with an n-fold degenerate excited level";
    m.attr("__version__") = kVersion;

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<PoleProximity>(m, "PoleProximity", error.ptr());
    py::register_exception<NonConvergence>(m, "NonConvergence", error.ptr());
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
    py::register_exception<ConstraintUnsatisfiable>(m, "ConstraintUnsatisfiable", error.ptr());

    py::class_<specfun::SeriesConfig>(m, "SeriesConfig")
        .def(py::init([](double rel_tol, long max_terms, double pole_guard) {
                 specfun::SeriesConfig c{rel_tol, max_terms, pole_guard};
                 c.validate();
                 return c;
             }),
             py::arg("rel_tol") = 1e-10, py::arg("max_terms") = 1000000, py::arg("pole_guard") = 1e-6)
        .def_readwrite("rel_tol", &specfun::SeriesConfig::rel_tol)
        .def_readwrite("max_terms", &specfun::SeriesConfig::max_terms)
        .def_readwrite("pole_guard", &specfun::SeriesConfig::pole_guard);

    m.def("lerch_phi", &specfun::lerch_phi, py::arg("z"), py::arg("s"), py::arg("a"),
          py::arg("cfg") = specfun::SeriesConfig{});
    m.def("expint_e", &specfun::expint_e, py::arg("s"), py::arg("x"));
    m.def(
        "j_kernel", [](double x, double y, const specfun::SeriesConfig& cfg) { return specfun::j_kernel({x, y}, cfg); },
        py::arg("x"), py::arg("y"), py::arg("cfg") = specfun::SeriesConfig{});

    m.def(
        "rindler_event",
        [](double alpha, double tau) {
            const auto e = kinematics::rindler_event(alpha, tau);
            return py::make_tuple(e.t, e.x);
        },
        py::arg("alpha"), py::arg("tau"));
    m.def("velocity", &kinematics::velocity, py::arg("alpha"), py::arg("tau"));
    m.def("interaction_time", &kinematics::interaction_time, py::arg("v"), py::arg("alpha"));
    m.def("unruh_temperature", &kinematics::unruh_temperature, py::arg("alpha"));

    m.def("hamiltonian", &detector::hamiltonian, py::arg("n"), py::arg("omega"));
    m.def("monopole", &detector::monopole, py::arg("n"));
    m.def(
        "initial_state", [](int n, double p) { return detector::initial_state(n, p); }, py::arg("n"), py::arg("p"));
    m.def("shift_matrix", &detector::shift_matrix, py::arg("n"), py::arg("delta_p"));
    m.def("energy", &detector::energy, py::arg("rho"), py::arg("hamiltonian"));
    m.def("is_valid_state", &detector::is_valid_state, py::arg("rho"), py::arg("tol") = 1e-12);

    py::class_<response::ResponseArgs>(m, "ResponseArgs")
        .def(py::init([](double p, int n, double omega, double alpha, double v, double g) {
                 response::ResponseArgs a{p, n, omega, alpha, v, g};
                 a.validate();
                 return a;
             }),
             py::arg("p"), py::arg("n"), py::arg("omega"), py::arg("alpha"), py::arg("v"), py::arg("g") = 1.0)
        .def_readwrite("p", &response::ResponseArgs::p)
        .def_readwrite("n", &response::ResponseArgs::n)
        .def_readwrite("omega", &response::ResponseArgs::omega)
        .def_readwrite("alpha", &response::ResponseArgs::alpha)
        .def_readwrite("v", &response::ResponseArgs::v)
        .def_readwrite("g", &response::ResponseArgs::g)
        .def_property_readonly("gap_ratio", &response::ResponseArgs::gap_ratio)
        .def_property_readonly("tau_half", &response::ResponseArgs::tau_half);

    py::class_<response::QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("epsilon_schedule", &response::QuadratureConfig::epsilon_schedule)
        .def_readwrite("image_terms", &response::QuadratureConfig::image_terms)
        .def_readwrite("domain_factor", &response::QuadratureConfig::domain_factor)
        .def_readwrite("grid", &response::QuadratureConfig::grid)
        .def_readwrite("extrapolate", &response::QuadratureConfig::extrapolate)
        .def_readwrite("rel_tol", &response::QuadratureConfig::rel_tol)
        .def_readwrite("max_panels", &response::QuadratureConfig::max_panels);

    py::class_<response::QuadratureResult>(m, "QuadratureResult")
        .def_readonly("estimate", &response::QuadratureResult::estimate)
        .def_readonly("error_estimate", &response::QuadratureResult::error_estimate)
        .def_readonly("imag_residual", &response::QuadratureResult::imag_residual)
        .def_readonly("per_epsilon", &response::QuadratureResult::per_epsilon)
        .def_readonly("panels", &response::QuadratureResult::panels);

    m.def("switching", &response::switching, py::arg("tau"), py::arg("tau_half"));
    m.def("wightman", &response::wightman, py::arg("alpha"), py::arg("dtau"), py::arg("epsilon"),
          py::arg("image_terms"));
    m.def("delta_p_closed", &response::delta_p_closed, py::arg("args"), py::arg("cfg") = specfun::SeriesConfig{});
    m.def("delta_p_limit_n_inf", &response::delta_p_limit_n_inf, py::arg("args"),
          py::arg("cfg") = specfun::SeriesConfig{});
    m.def("delta_p_quadrature", &response::delta_p_quadrature, py::arg("args"),
          py::arg("qcfg") = response::QuadratureConfig{}, py::call_guard<py::gil_scoped_release>());

    py::class_<cycle::CycleParams>(m, "CycleParams")
        .def(py::init([](int n, double omega1, double omega2, double v, double alpha_H, double alpha_C, double g) {
                 cycle::CycleParams c;
                 c.spec = {n, omega1, omega2, g};
                 c.v = v;
                 c.alpha_H = alpha_H;
                 c.alpha_C = alpha_C;
                 c.validate();
                 return c;
             }),
             py::arg("n"), py::arg("omega1"), py::arg("omega2"), py::arg("v"), py::arg("alpha_H"), py::arg("alpha_C"),
             py::arg("g") = 1.0)
        .def_property_readonly("a_H", &cycle::CycleParams::a_H)
        .def_property_readonly("a_C", &cycle::CycleParams::a_C);

    py::class_<cycle::CycleReport>(m, "CycleReport")
        .def_readonly("W1", &cycle::CycleReport::W1)
        .def_readonly("Q2", &cycle::CycleReport::Q2)
        .def_readonly("W3", &cycle::CycleReport::W3)
        .def_readonly("Q4", &cycle::CycleReport::Q4)
        .def_readonly("Q_total", &cycle::CycleReport::Q_total)
        .def_readonly("W_total", &cycle::CycleReport::W_total)
        .def_readonly("eta", &cycle::CycleReport::eta)
        .def_readonly("delta_pH", &cycle::CycleReport::delta_pH)
        .def_readonly("delta_pC", &cycle::CycleReport::delta_pC)
        .def_readonly("p_used", &cycle::CycleReport::p_used)
        .def_readonly("validity_margin", &cycle::CycleReport::validity_margin)
        .def_readonly("step_residual", &cycle::CycleReport::step_residual)
        .def_readonly("kieu_ok", &cycle::CycleReport::kieu_ok)
        .def_readonly("closed_cycle_ok", &cycle::CycleReport::closed_cycle_ok)
        .def_readonly("perturbative_ok", &cycle::CycleReport::perturbative_ok)
        .def_readonly("positive_work", &cycle::CycleReport::positive_work);

    m.def("efficiency", &cycle::efficiency, py::arg("omega1"), py::arg("omega2"));
    m.def("cal_P", &cycle::cal_P, py::arg("a_H"), py::arg("a_C"), py::arg("v"), py::arg("cfg") = specfun::SeriesConfig{});
    m.def("solve_initial_population", &cycle::solve_initial_population, py::arg("params"),
          py::arg("cfg") = specfun::SeriesConfig{});
    m.def(
        "run_cycle",
        [](const cycle::CycleParams& params, std::optional<double> p, const specfun::SeriesConfig& cfg) {
            return cycle::run_cycle(params, p ? *p : cycle::solve_initial_population(params, cfg), cfg);
        },
        py::arg("params"), py::arg("p") = py::none(), py::arg("cfg") = specfun::SeriesConfig{});
    m.def("kieu_condition", &cycle::kieu_condition, py::arg("params"));
}
