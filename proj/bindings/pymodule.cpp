#include "stostab/criteria.hpp"
#include "stostab/json_io.hpp"
#include "stostab/moments.hpp"
#include "stostab/oscillator.hpp"
#include "stostab/quadratic_form.hpp"
#include "stostab/simulate.hpp"
#include "stostab/sweep.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace stostab;

PYBIND11_MODULE(_stostab, mod) {
    mod.doc() = "stability analysis of 2D linear SDEs with white-noise coefficients";

    py::enum_<Calculus>(mod, "Calculus")
        .value("ITO", Calculus::Ito)
        .value("STRATONOVICH", Calculus::Stratonovich);

    py::enum_<NoisePattern>(mod, "NoisePattern")
        .value("NO_NOISE", NoisePattern::NoNoise)
        .value("ONLY_E", NoisePattern::OnlyE)
        .value("ONLY_F", NoisePattern::OnlyF)
        .value("ONLY_G", NoisePattern::OnlyG)
        .value("ONLY_H", NoisePattern::OnlyH)
        .value("EQUAL_EF", NoisePattern::EqualEF)
        .value("EQUAL_EG", NoisePattern::EqualEG)
        .value("EQUAL_EH", NoisePattern::EqualEH)
        .value("EQUAL_FG", NoisePattern::EqualFG)
        .value("EQUAL_FH", NoisePattern::EqualFH)
        .value("EQUAL_GH", NoisePattern::EqualGH)
        .value("UNSUPPORTED", NoisePattern::Unsupported);

    py::enum_<StabilityNotion>(mod, "StabilityNotion")
        .value("PROBABILITY", StabilityNotion::ProbabilityStability)
        .value("MEAN_SQUARE", StabilityNotion::MeanSquareExponential);

    py::enum_<Verdict>(mod, "Verdict")
        .value("STABLE", Verdict::Stable)
        .value("UNSTABLE", Verdict::Unstable)
        .value("INCONCLUSIVE", Verdict::Inconclusive)
        .value("BOUNDARY", Verdict::Boundary);

    py::class_<SystemSpec>(mod, "SystemSpec")
        .def(py::init([](double a, double b, double c, double m, double e, double f,
                         double g, double h, Calculus calculus) {
                 return SystemSpec{a, b, c, m, e, f, g, h, calculus};
             }),
             py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("c") = 0.0,
             py::arg("m") = 0.0, py::arg("e") = 0.0, py::arg("f") = 0.0,
             py::arg("g") = 0.0, py::arg("h") = 0.0,
             py::arg("calculus") = Calculus::Ito)
        .def_readwrite("a", &SystemSpec::a)
        .def_readwrite("b", &SystemSpec::b)
        .def_readwrite("c", &SystemSpec::c)
        .def_readwrite("m", &SystemSpec::m)
        .def_readwrite("e", &SystemSpec::e)
        .def_readwrite("f", &SystemSpec::f)
        .def_readwrite("g", &SystemSpec::g)
        .def_readwrite("h", &SystemSpec::h)
        .def_readwrite("calculus", &SystemSpec::calculus)
        .def("__repr__", [](const SystemSpec& s) { return system_spec_to_json(s, -1); });

    py::class_<QuadraticForm>(mod, "QuadraticForm")
        .def(py::init<double, double, double>(), py::arg("p"), py::arg("q"), py::arg("r"))
        .def_readwrite("p", &QuadraticForm::p)
        .def_readwrite("q", &QuadraticForm::q)
        .def_readwrite("r", &QuadraticForm::r)
        .def("evaluate", &QuadraticForm::evaluate);

    py::class_<TraceEntry>(mod, "TraceEntry")
        .def_readonly("name", &TraceEntry::name)
        .def_readonly("value", &TraceEntry::value);

    py::class_<BifurcationBound>(mod, "BifurcationBound")
        .def_readonly("bound", &BifurcationBound::bound)
        .def_readonly("trace", &BifurcationBound::trace)
        .def_property_readonly("exact", [](const BifurcationBound& b) {
            return b.kind == BifurcationBound::Kind::Exact;
        });

    py::class_<StabilityReport>(mod, "StabilityReport")
        .def_readonly("verdict", &StabilityReport::verdict)
        .def_readonly("notion", &StabilityReport::notion)
        .def_readonly("criterion", &StabilityReport::theorem)
        .def_readonly("bound", &StabilityReport::bound)
        .def_readonly("attractor_note", &StabilityReport::attractor_note)
        .def_readonly("notes", &StabilityReport::notes)
        .def("to_json", [](const StabilityReport& r) { return report_to_json(r); });

    py::class_<CertificateReport>(mod, "CertificateReport")
        .def_readonly("v_positive_definite", &CertificateReport::v_positive_definite)
        .def_readonly("lv_form", &CertificateReport::lv_form)
        .def_readonly("lv_negative_definite", &CertificateReport::lv_negative_definite)
        .def_readonly("lv_negative_semidefinite", &CertificateReport::lv_negative_semidefinite)
        .def_readonly("circle_check_passed", &CertificateReport::circle_check_passed);

    py::class_<SimConfig>(mod, "SimConfig")
        .def(py::init<>())
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("horizon", &SimConfig::horizon)
        .def_readwrite("n_paths", &SimConfig::n_paths)
        .def_readwrite("seed", &SimConfig::seed)
        .def_readwrite("x0", &SimConfig::x0)
        .def_readwrite("y0", &SimConfig::y0)
        .def_readwrite("epsilon", &SimConfig::epsilon)
        .def_readwrite("n_record", &SimConfig::n_record);

    py::class_<EnsembleStats>(mod, "EnsembleStats")
        .def_readonly("times", &EnsembleStats::times)
        .def_readonly("second_moment", &EnsembleStats::second_moment)
        .def_readonly("std_error", &EnsembleStats::std_error)
        .def_readonly("ms_exponent", &EnsembleStats::ms_exponent)
        .def_readonly("amplitude", &EnsembleStats::amplitude)
        .def_readonly("exceedance_prob", &EnsembleStats::exceedance_prob)
        .def_readonly("attractor_fraction", &EnsembleStats::attractor_fraction)
        .def_readonly("n_exploded", &EnsembleStats::n_exploded);

    py::class_<SweepResult>(mod, "SweepResult")
        .def_readonly("intensities", &SweepResult::intensities)
        .def_readonly("analytic_verdicts", &SweepResult::analytic_verdicts)
        .def_readonly("oracle_verdicts", &SweepResult::oracle_verdicts)
        .def_readonly("analytic_bound", &SweepResult::analytic_bound)
        .def_readonly("empirical_threshold", &SweepResult::empirical_threshold);

    py::class_<OscillatorSpec>(mod, "OscillatorSpec")
        .def(py::init([](double k, double omega, double sigma1, double sigma2,
                         Calculus calculus) {
                 return OscillatorSpec{k, omega, sigma1, sigma2, calculus};
             }),
             py::arg("k"), py::arg("omega"), py::arg("sigma1") = 0.0,
             py::arg("sigma2") = 0.0, py::arg("calculus") = Calculus::Ito)
        .def_readwrite("k", &OscillatorSpec::k)
        .def_readwrite("omega", &OscillatorSpec::omega)
        .def_readwrite("sigma1", &OscillatorSpec::sigma1)
        .def_readwrite("sigma2", &OscillatorSpec::sigma2)
        .def_readwrite("calculus", &OscillatorSpec::calculus);

    py::enum_<OscillatorCase>(mod, "OscillatorCase")
        .value("FREQUENCY_NOISE", OscillatorCase::FrequencyNoise)
        .value("DAMPING_NOISE", OscillatorCase::DampingNoise)
        .value("EQUAL_NOISE", OscillatorCase::EqualNoise);

    mod.def("stratonovich_to_ito", &stratonovich_to_ito, py::arg("spec"));
    mod.def("ensure_ito", &ensure_ito, py::arg("spec"));
    mod.def("routh_hurwitz", &routh_hurwitz, py::arg("spec"));
    mod.def("classify_noise_pattern", &classify_noise_pattern, py::arg("spec"),
            py::arg("tol") = 0.0);
    mod.def("dual_transform", &dual_transform, py::arg("spec"));
    mod.def("analyze", &analyze, py::arg("spec"), py::arg("notion"),
            py::arg("pattern_tol") = 0.0);
    mod.def("apply_generator", &apply_generator, py::arg("spec"), py::arg("v"));
    mod.def("build_certificate", &build_certificate, py::arg("spec"), py::arg("pattern"),
            py::arg("notion"));
    mod.def("verify_certificate", &verify_certificate, py::arg("spec"), py::arg("v"));
    mod.def("ms_stable_by_moments", &ms_stable_by_moments, py::arg("spec"),
            py::arg("tol") = 1e-9);
    mod.def("moment_matrix", [](const SystemSpec& spec) {
        const auto M = moment_matrix(spec);
        std::vector<std::vector<double>> rows(3, std::vector<double>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) rows[i][j] = M(i, j);
        return rows;
    }, py::arg("spec"));
    mod.def("simulate_ensemble", &simulate_ensemble, py::arg("spec"), py::arg("config"));
    mod.def("oscillator_to_system", &oscillator_to_system, py::arg("osc"));
    mod.def("prop1_threshold",
            [](const OscillatorSpec& o) { return prop1_threshold(o).bound; }, py::arg("osc"));
    mod.def("prop2_threshold",
            [](const OscillatorSpec& o) { return prop2_threshold(o).bound; }, py::arg("osc"));
    mod.def("oscillator_certificate", &oscillator_certificate, py::arg("osc"),
            py::arg("case_"));
    mod.def("sweep", &sweep, py::arg("spec_template"), py::arg("pattern"), py::arg("grid"),
            py::arg("notion"));
    mod.def("find_threshold_bisect", &find_threshold_bisect, py::arg("spec_template"),
            py::arg("pattern"), py::arg("lo"), py::arg("hi"));
    mod.def("parse_system_spec", &parse_system_spec, py::arg("text"));
}
