#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gravdec/asymptotics.hpp"
#include "gravdec/constants.hpp"
#include "gravdec/decoherence.hpp"
#include "gravdec/errors.hpp"
#include "gravdec/oracle.hpp"
#include "gravdec/paths.hpp"
#include "gravdec/scenario.hpp"
#include "gravdec/units.hpp"

namespace py = pybind11;
using namespace gravdec;

namespace {

Scenario scenario_from(const std::string& text) { return scenario_from_json(json::parse(text)); }

py::dict time_dict(const DecoherenceTime& d) {
  py::dict out;
  out["seconds"] = d.seconds;
  out["regime"] = std::string(to_string(d.regime));
  out["valid"] = d.valid;
  out["decoheres"] = d.decoheres;
  out["state_factor"] = d.state_factor;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gravdec, m) {
  m.doc() = "Graviton-induced decoherence: closed forms, decoherence times and a quadrature oracle";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  py::enum_<StateKind>(m, "StateKind")
      .value("vacuum", StateKind::vacuum)
      .value("thermal", StateKind::thermal)
      .value("coherent", StateKind::coherent)
      .value("squeezed", StateKind::squeezed);
  py::enum_<Piece>(m, "Piece").value("I", Piece::I).value("II", Piece::II).value("III", Piece::III).value("IV", Piece::IV);

  py::class_<GravitonState>(m, "GravitonState")
      .def_static("vacuum", &GravitonState::vacuum)
      .def_static("thermal", &GravitonState::thermal, py::arg("T_g"))
      .def_static("coherent", &GravitonState::coherent, py::arg("alpha"))
      .def_static("squeezed", &GravitonState::squeezed, py::arg("r"))
      .def_readwrite("kind", &GravitonState::kind)
      .def_readwrite("T_g", &GravitonState::T_g)
      .def_readwrite("alpha", &GravitonState::alpha)
      .def_readwrite("r", &GravitonState::r);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init([](double mass, double v, double L0, double eta, double T_int, py::object Xi) {
             auto s = SystemParams::with_xi_equal_l0(mass, v, L0, eta, T_int);
             if (!Xi.is_none()) s.Xi = Xi.cast<double>();
             s.validate();
             return s;
           }),
           py::arg("m"), py::arg("v"), py::arg("L0"), py::arg("eta"), py::arg("T_int"), py::arg("Xi") = py::none())
      .def_readwrite("m", &SystemParams::m)
      .def_readwrite("v", &SystemParams::v)
      .def_readwrite("Xi", &SystemParams::Xi)
      .def_readwrite("L0", &SystemParams::L0)
      .def_readwrite("eta", &SystemParams::eta)
      .def_readwrite("T_int", &SystemParams::T_int);

  py::class_<NewtonianSource>(m, "NewtonianSource")
      .def(py::init([](double M, double R) {
             NewtonianSource s{M, R};
             s.validate();
             return s;
           }),
           py::arg("M") = 0.0, py::arg("R") = 1.0)
      .def_static("none", &NewtonianSource::none)
      .def_static("earth", &NewtonianSource::earth)
      .def_static("sun", &NewtonianSource::sun)
      .def_static("neutron_star", &NewtonianSource::neutron_star)
      .def_readwrite("M", &NewtonianSource::M)
      .def_readwrite("R", &NewtonianSource::R)
      .def("curvature_frequency_squared", &NewtonianSource::curvature_frequency_squared);

  m.def("f_function", py::vectorize(&f_function), py::arg("kind"), py::arg("piece"), py::arg("x"));
  m.def("g_function", py::vectorize(&g_function), py::arg("kind"), py::arg("piece"), py::arg("x"));

  m.def(
      "gamma1",
      [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src, py::array_t<double> t) {
        return py::vectorize([&](double tt) { return gamma1(st, sys, src, tt); })(t);
      },
      py::arg("state"), py::arg("system"), py::arg("source"), py::arg("t"));
  m.def(
      "gamma2",
      [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src, double v1, double v2,
         py::array_t<double> t) {
        const Config2 cfg{v1, v2};
        return py::vectorize([&](double tt) { return gamma2(st, sys, src, cfg, tt); })(t);
      },
      py::arg("state"), py::arg("system"), py::arg("source"), py::arg("v1"), py::arg("v2"), py::arg("t"));

  m.def(
      "gamma_by_quadrature",
      [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src, double t, py::object v1,
         py::object v2) {
        const PathModel paths = v1.is_none() ? configuration1_paths(sys.Xi, sys.v, t)
                                             : configuration2_paths(v1.cast<double>(), v2.cast<double>(), t);
        const QuadratureResult q = gamma_by_quadrature(paths, st, sys, src);
        return py::make_tuple(q.value, q.error);
      },
      py::arg("state"), py::arg("system"), py::arg("source"), py::arg("t"), py::arg("v1") = py::none(),
      py::arg("v2") = py::none());

  m.def("cutoff_frequency", &cutoff_frequency, py::arg("L0"));
  m.def("momentum_threshold", &momentum_threshold, py::arg("system"), py::arg("source"));
  m.def("mass_threshold", &mass_threshold, py::arg("system"), py::arg("source"));
  m.def("saturation_value", &saturation_value, py::arg("system"), py::arg("source"));
  m.def("cross_section", &cross_section, py::arg("theta"), py::arg("M"));
  m.def(
      "dec_time_short", [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src) {
        return time_dict(dec_time_short(st, sys, src));
      },
      py::arg("state"), py::arg("system"), py::arg("source"));
  m.def(
      "dec_time_long", [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src) {
        return time_dict(dec_time_long(st, sys, src));
      },
      py::arg("state"), py::arg("system"), py::arg("source"));
  m.def(
      "dec_time_numeric", [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src) {
        return time_dict(dec_time_numeric(st, sys, src));
      },
      py::arg("state"), py::arg("system"), py::arg("source"));
  m.def(
      "log_long_time_state_factor",
      [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src) {
        return log_long_time_state_factor(st, sys, src);
      },
      py::arg("state"), py::arg("system"), py::arg("source"));
  m.def(
      "recoherence_log_seconds",
      [](const GravitonState& st, const SystemParams& sys, const NewtonianSource& src) {
        return recoherence_threshold(st, sys, src).log_seconds;
      },
      py::arg("state"), py::arg("system"), py::arg("source"));

  // Scenario-level entry points speak JSON text; the Python wrapper parses it.
  m.def("_molecule_scenario", [] { return scenario_to_json(molecule_scenario()).dump(); });
  m.def("_eval_csv", [](const std::string& s) { return to_csv(run_eval(scenario_from(s))); });
  m.def("_fingerprint", [](const std::string& s) { return fingerprint(scenario_from(s)); });
  m.def("_tables", [] { return run_tables().dump(); });
  m.def("_dec_times", [](const std::string& s) { return run_dec_times(scenario_from(s)).dump(); });
  m.def("_oracle_check", [](const std::string& s, double threshold) {
    return run_oracle_check(scenario_from(s), QuadratureSpec{}, threshold).dump();
  });
  m.def("_sweep_csv", [](const std::string& s, const std::string& path, const std::vector<double>& values) {
    return to_csv(run_sweep(scenario_from(s), path, values));
  });
}
