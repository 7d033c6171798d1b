#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "whakit/bundle.hpp"
#include "whakit/cli.hpp"
#include "whakit/face_algebra.hpp"

namespace py = pybind11;
using namespace whakit;

namespace {

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(args, out, err);
  }
  return {code, out.str(), err.str()};
}

/// Certification reports for an algebra, as JSON strings.
std::vector<std::string> check(const std::string& reference, const std::string& base_dir) {
  const AlgebraSource src = load_algebra(reference, base_dir);
  std::vector<Report> reports;
  const CertifiedPair pair = certify_presented(src.presented, reports);
  if (pair.r) reports.push_back(check_derived_r_identities(*pair.r));
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(r.to_json(-1));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = std::string(kVersion);
  py::register_exception<Error>(m, "WhakitError", PyExc_ValueError);

  m.def("run_cli", &run, py::arg("args"), "Run the whakit CLI in process; returns (exit code, stdout, stderr).");
  m.def("check", &check, py::arg("reference"), py::arg("base_dir") = ".",
        "Certify a catalog algebra or bundle file; returns report JSON strings.");
  m.def(
      "face_bundle", [](unsigned n) { return write_algebra_bundle(face_algebra(n)); }, py::arg("n"),
      "Canonical bundle of the face algebra for N.");
  m.def(
      "face_structure", [](unsigned n) { return check_face_structure(n).to_json(-1); }, py::arg("n"),
      "Report JSON for the face algebra transmutation and block structure.");
}
