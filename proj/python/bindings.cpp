#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "deltascat/errors.hpp"
#include "deltascat/regularization.hpp"
#include "deltascat/scattering.hpp"
#include "deltascat/special_functions.hpp"

namespace py = pybind11;
using namespace deltascat;

namespace {

std::complex<double> to_complex(ComplexValue c) { return {c.re, c.im}; }

}  // namespace

PYBIND11_MODULE(_deltascat, m) {
    m.doc() = "Cross sections for scattering off an attractive 2D delta-function potential";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DegenerateBracketError>(m, "DegenerateBracketError", PyExc_ArithmeticError);
    py::register_exception<SingularInputError>(m, "SingularInputError", PyExc_ValueError);

    m.attr("EULER_GAMMA") = kEulerGamma;

    // special functions
    m.def("bessel_j0", &bessel_j0, py::arg("z"));
    m.def("bessel_y0", &bessel_y0, py::arg("z"));
    m.def("bessel_k0", &bessel_k0, py::arg("z"));
    m.def("hankel1_0", [](double z) { return to_complex(hankel1_0(z)); }, py::arg("z"));
    m.def("k0_small_z", &k0_small_z, py::arg("z"));
    m.def("hankel1_0_small_z", [](double z) { return to_complex(hankel1_0_small_z(z)); },
          py::arg("z"));

    // scattering
    py::class_<ScatteringProblem>(m, "ScatteringProblem")
        .def(py::init<double, double>(), py::arg("k"), py::arg("e0"))
        .def_property_readonly("k", &ScatteringProblem::k)
        .def_property_readonly("e0", &ScatteringProblem::e0)
        .def_property_readonly("mu", &ScatteringProblem::mu)
        .def_property_readonly("x", &ScatteringProblem::x)
        .def("__repr__", [](const ScatteringProblem& p) {
            return "ScatteringProblem(k=" + py::repr(py::float_(p.k())).cast<std::string>() +
                   ", e0=" + py::repr(py::float_(p.e0())).cast<std::string>() + ")";
        });

    m.def("bound_state_scale", &bound_state_scale, py::arg("problem"));
    m.def("log_x", &log_x, py::arg("problem"));
    m.def("cross_section_closed",
          [](const ScatteringProblem& p) { return cross_section_closed(p).sigma; },
          py::arg("problem"));
    m.def("cross_section_partial_wave",
          [](const ScatteringProblem& p, int m_max) {
              return cross_section_partial_wave(p, m_max).sigma;
          },
          py::arg("problem"), py::arg("m_max") = 0);
    m.def("s_wave_phase_shift",
          [](const ScatteringProblem& p) { return s_wave_phase_shift(p).delta0; },
          py::arg("problem"));
    m.def("sin_sq_from_tan", py::overload_cast<double>(&sin_sq_from_tan), py::arg("t"));

    // regularization
    py::enum_<RegularizationMode>(m, "RegularizationMode")
        .value("full", RegularizationMode::full)
        .value("asymptotic", RegularizationMode::asymptotic)
        .value("truncated_log", RegularizationMode::truncated_log);

    py::class_<EpsilonSchedule>(m, "EpsilonSchedule")
        .def(py::init<double, double, int>(), py::arg("eps_start"), py::arg("factor"),
             py::arg("count"))
        .def_static("standard", &EpsilonSchedule::standard)
        .def_static("standard_for", &EpsilonSchedule::standard_for, py::arg("problem"))
        .def_property_readonly("eps_start", &EpsilonSchedule::eps_start)
        .def_property_readonly("factor", &EpsilonSchedule::factor)
        .def_property_readonly("count", &EpsilonSchedule::count)
        .def("values", &EpsilonSchedule::values);

    py::class_<LimitEstimate>(m, "LimitEstimate")
        .def_readonly("sigma_limit", &LimitEstimate::sigma_limit)
        .def_readonly("error_estimate", &LimitEstimate::error_estimate)
        .def_readonly("converged", &LimitEstimate::converged)
        .def_readonly("observed_order", &LimitEstimate::observed_order)
        .def_property_readonly("samples", [](const LimitEstimate& e) {
            py::list out;
            for (const auto& s : e.samples) out.append(py::make_tuple(s.eps, s.sigma));
            return out;
        });

    m.def("regularized_cross_section", &regularized_cross_section, py::arg("problem"),
          py::arg("eps"), py::arg("mode") = RegularizationMode::full);
    m.def("limit_extrapolate", &limit_extrapolate, py::arg("problem"), py::arg("schedule"),
          py::arg("mode") = RegularizationMode::full);
    m.def("mead_godines_wrong_limit", &mead_godines_wrong_limit, py::arg("problem"));
    m.def("wrong_limit_ratio", &wrong_limit_ratio, py::arg("problem"));
}
