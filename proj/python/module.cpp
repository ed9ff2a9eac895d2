// Python bindings: parameter sampling, vertex series, stable-envelope
// matrices, verification suites, and JSON reports.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "flagvert/envelope.hpp"
#include "flagvert/mirror.hpp"
#include "flagvert/params.hpp"
#include "flagvert/perm.hpp"
#include "flagvert/report.hpp"
#include "flagvert/verify.hpp"
#include "flagvert/vertex.hpp"

namespace py = pybind11;
using namespace fv;

namespace {

Backend backend_of(const std::string& b) {
  if (b == "exact") return Backend::Exact;
  if (b == "float") return Backend::Float;
  throw py::value_error("backend must be 'exact' or 'float'");
}

py::dict series_dict(const TruncatedSeries& s) {
  py::dict out;
  for (const auto& [deg, v] : s.c) {
    py::tuple key(deg.size());
    for (size_t i = 0; i < deg.size(); ++i) key[i] = deg[i];
    out[key] = v.str();
  }
  return out;
}

py::dict report_dict(const Report& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["pass"] = r.pass();
  py::list claims;
  for (const auto& c : r.claims) {
    py::dict cd;
    cd["claim_id"] = c.id;
    cd["statement"] = c.statement;
    cd["residual"] = c.residual;
    cd["tolerance"] = c.tolerance;
    cd["pass"] = c.pass;
    cd["runtime_ms"] = c.runtime_ms;
    cd["note"] = c.note;
    claims.append(cd);
  }
  d["claims"] = claims;
  return d;
}

}  // namespace

PYBIND11_MODULE(_flagvert, m) {
  m.doc() = "vertex functions, elliptic stable envelopes, and Macdonald operators "
            "for the cotangent bundle of the full flag variety";

  py::class_<ParamSet>(m, "ParamSet")
      .def_readonly("n", &ParamSet::n)
      .def_readonly("theta_terms", &ParamSet::theta_terms)
      .def_readonly("max_degree", &ParamSet::max_degree)
      .def("tol", [](const ParamSet& p) { return p.tol().to_double(); })
      .def("to_toml", &ParamSet::to_toml)
      .def_static("from_toml", &ParamSet::from_toml);

  m.def(
      "sample_params",
      [](int n, std::uint64_t seed, int theta_terms, int max_degree, const std::string& backend,
         int precision) {
        return sample_params(n, seed, theta_terms, max_degree, backend_of(backend), precision);
      },
      py::arg("n"), py::arg("seed") = 7, py::arg("theta_terms") = 40, py::arg("max_degree") = 4,
      py::arg("backend") = "float", py::arg("precision") = 120);

  m.def(
      "vertex_series",
      [](const std::string& perm, const ParamSet& p) {
        return series_dict(vertex_series(Perm::parse(perm), p));
      },
      py::arg("perm"), py::arg("params"),
      "Vertex coefficient series as {degree tuple: coefficient string}.");

  m.def(
      "vertex_limit",
      [](const std::string& perm, const ParamSet& p) {
        return series_dict(vertex_limit(Perm::parse(perm), p));
      },
      py::arg("perm"), py::arg("params"));

  m.def(
      "stab_matrix",
      [](const ParamSet& p, const std::string& form) {
        StabNorm norm;
        if (form == "raw")
          norm = StabNorm::Raw;
        else if (form == "stab")
          norm = StabNorm::Stab;
        else if (form == "s")
          norm = StabNorm::S;
        else if (form == "bold")
          norm = StabNorm::Bold;
        else if (form == "overline")
          norm = StabNorm::Overline;
        else if (form == "a")
          norm = StabNorm::A;
        else
          throw py::value_error("form must be raw|stab|s|bold|overline|a");
        StabMatrix sm = stab_matrix(p, norm);
        py::dict out;
        py::list order;
        for (const auto& I : sm.order) order.append(I.str());
        out["order"] = order;
        py::list rows;
        for (const auto& row : sm.m) {
          py::list r;
          for (const auto& v : row) r.append(v.str());
          rows.append(r);
        }
        out["entries"] = rows;
        return out;
      },
      py::arg("params"), py::arg("form") = "stab");

  m.def("verify_triangularity",
        [](const ParamSet& p) { return report_dict(verify_triangularity(p)); });
  m.def("verify_diagonal", [](const ParamSet& p) { return report_dict(verify_diagonal(p)); });
  m.def(
      "verify_quasiperiodicity",
      [](const ParamSet& p, std::uint64_t tseed) {
        return report_dict(verify_quasiperiodicity(p, tseed));
      },
      py::arg("params"), py::arg("tseed") = 0x51ab);
  m.def("verify_macdonald", [](const ParamSet& p) { return report_dict(verify_macdonald(p)); });
  m.def("verify_oracles", [](const ParamSet& p) { return report_dict(verify_oracles(p)); });
  m.def("verify_stab_inverse",
        [](const ParamSet& p) { return report_dict(verify_stab_inverse(p)); });
  m.def(
      "verify_main_theorem",
      [](const std::string& perm, const ParamSet& p, const std::string& form) {
        TheoremForm f;
        if (form == "overline")
          f = TheoremForm::Overline;
        else if (form == "bold")
          f = TheoremForm::Bold;
        else
          throw py::value_error("form must be overline|bold");
        return report_dict(verify_main_theorem(Perm::parse(perm), p, f));
      },
      py::arg("perm"), py::arg("params"), py::arg("form") = "overline");
  m.def("verify_limits", [](const std::string& perm, const ParamSet& p) {
    return report_dict(verify_limits(Perm::parse(perm), p));
  });
}
