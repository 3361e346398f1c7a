#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdarwin/info.hpp"
#include "qdarwin/oracle.hpp"
#include "qdarwin/redundancy.hpp"
#include "qdarwin/spectral.hpp"
#include "qdarwin/sweep.hpp"

namespace py = pybind11;
using namespace qdarwin;

PYBIND11_MODULE(_core, m) {
  m.doc() = "qdarwin compiled core";
  m.attr("__version__") = cli::version();

  py::class_<SystemQubit>(m, "SystemQubit")
      .def(py::init<double, cplx>(), py::arg("s00"), py::arg("s01"))
      .def_static("pure", &SystemQubit::pure, py::arg("s00"))
      .def_property_readonly("s00", &SystemQubit::s00)
      .def_property_readonly("s11", &SystemQubit::s11)
      .def_property_readonly("s01", &SystemQubit::s01)
      .def("is_pure", &SystemQubit::is_pure, py::arg("tol") = 1e-12);

  py::class_<EnvQubit>(m, "EnvQubit")
      .def(py::init<double, cplx>(), py::arg("r00"), py::arg("r01"))
      .def_property_readonly("r00", &EnvQubit::r00)
      .def_property_readonly("r11", &EnvQubit::r11)
      .def_property_readonly("r01", &EnvQubit::r01)
      .def_property_readonly("sigma", &EnvQubit::sigma)
      .def_property_readonly("lambda_plus", &EnvQubit::lambda_plus)
      .def_property_readonly("lambda_minus", &EnvQubit::lambda_minus)
      .def("is_pure", &EnvQubit::is_pure, py::arg("tol") = 1e-12);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](SystemQubit s, EnvQubit e, int nE, double t) {
             ModelParams p{s, e, nE, t};
             p.validate();
             return p;
           }),
           py::arg("sys"), py::arg("env"), py::arg("nE"), py::arg("t"))
      .def_readonly("sys", &ModelParams::sys)
      .def_readonly("env", &ModelParams::env)
      .def_readonly("nE", &ModelParams::nE)
      .def_readonly("t", &ModelParams::t);

  py::class_<InfoPoint>(m, "InfoPoint")
      .def_readonly("nF", &InfoPoint::nF)
      .def_readonly("t", &InfoPoint::t)
      .def_readonly("mutual_info", &InfoPoint::mutual_info)
      .def_readonly("discord", &InfoPoint::discord)
      .def_readonly("fragment_entropy_gain", &InfoPoint::fragment_entropy_gain);

  py::class_<RedundancyResult>(m, "RedundancyResult")
      .def_readonly("delta", &RedundancyResult::delta)
      .def_readonly("nF_delta", &RedundancyResult::nF_delta)
      .def_readonly("R_delta", &RedundancyResult::R_delta)
      .def_readonly("plateau", &RedundancyResult::plateau)
      .def_readonly("reached_only_at_full", &RedundancyResult::reached_only_at_full);

  py::class_<oracle::IdentityCheck>(m, "IdentityCheck")
      .def_readonly("name", &oracle::IdentityCheck::name)
      .def_readonly("oracle", &oracle::IdentityCheck::oracle)
      .def_readonly("fast", &oracle::IdentityCheck::fast)
      .def_readonly("diff", &oracle::IdentityCheck::diff)
      .def_readonly("passed", &oracle::IdentityCheck::passed);

  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def("haziness", &haziness, py::arg("env"));
  m.def("misalignment_capacity", &misalignment_capacity, py::arg("env"));
  m.def("make_env_state", &make_env_state, py::arg("sigma"), py::arg("zeta"));
  m.def("env_state_for_haziness", &env_state_for_haziness, py::arg("sigma"), py::arg("h"));

  m.def("mutual_information", &mutual_information, py::arg("params"), py::arg("nF"));
  m.def("discord", &discord, py::arg("params"), py::arg("nF"));
  m.def("discord_approx", &discord_approx, py::arg("params"), py::arg("nF"));
  m.def("fragment_entropy", &fragment_entropy, py::arg("sys"), py::arg("env"), py::arg("t"),
        py::arg("nF"));
  m.def(
      "fragment_spectrum",
      [](const SystemQubit& s, const EnvQubit& e, double t, int nF) {
        std::vector<std::pair<double, double>> out;
        const Spectrum spec = fragment_spectrum(s, e, t, nF);
        for (const auto& entry : spec.entries())
          out.emplace_back(entry.value, entry.multiplicity);
        return out;
      },
      py::arg("sys"), py::arg("env"), py::arg("t"), py::arg("nF"),
      "List of (eigenvalue, multiplicity) pairs.");
  m.def("plateau_deviation", &plateau_deviation, py::arg("sys"), py::arg("env"), py::arg("nF"));
  m.def("asymptotic_deviation", &asymptotic_deviation, py::arg("s00"), py::arg("lambda_plus"),
        py::arg("lambda_minus"), py::arg("nF"));

  m.def(
      "redundancy",
      [](const ModelParams& p, double delta, bool allow_full) {
        return redundancy(p, delta, RedundancyOptions{allow_full});
      },
      py::arg("params"), py::arg("delta"), py::arg("allow_full_environment") = false);
  m.def(
      "limiting_redundancy",
      [](const ModelParams& p, const std::vector<double>& deltas) {
        const auto r = limiting_redundancy(p, deltas);
        py::dict d;
        d["estimate"] = r.estimate;
        d["values"] = r.values;
        d["nF_delta"] = r.nF_delta;
        d["non_monotone"] = r.non_monotone;
        d["divergent"] = r.divergent;
        return d;
      },
      py::arg("params"), py::arg("deltas"));
  m.def("scaling_hazy", &scaling_hazy, py::arg("lambda_plus"), py::arg("lambda_minus"),
        py::arg("nE"), py::arg("delta"));
  m.def("scaling_misaligned", &scaling_misaligned, py::arg("sigma"), py::arg("t"), py::arg("nE"),
        py::arg("delta"));

  m.def(
      "check_identities",
      [](const ModelParams& p, int nF) { return oracle::check_identities(p, nF).checks; },
      py::arg("params"), py::arg("nF"), "Brute-force cross-checks for one fragment size.");
}
