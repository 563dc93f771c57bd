#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "spencerlab/commands.hpp"
#include "spencerlab/errors.hpp"
#include "spencerlab/scene_file.hpp"

namespace py = pybind11;
using namespace spencerlab;

namespace {

std::vector<std::string> ideal_strings(const AffineScene& s) {
  std::vector<std::string> out;
  for (const auto& g : s.ideal().generators()) out.push_back(g.to_string());
  return out;
}

// kwargs mirror the CLI flags (dashes become underscores)
CommandOptions options_from(const std::string& command, const py::kwargs& kw) {
  CommandOptions o;
  o.command = command;
  for (const auto& [k, v] : kw) {
    const std::string key = py::str(k);
    if (key == "degree_bound") o.degree_bound = v.cast<int>();
    else if (key == "r") o.r = v.cast<int>();
    else if (key == "module") o.module = v.cast<std::string>();
    else if (key == "elements") o.elements = v.cast<std::vector<std::string>>();
    else if (key == "n") o.n = v.cast<std::size_t>();
    else if (key == "p") o.p = v.cast<int>();
    else if (key == "complex") o.complex = v.cast<std::string>();
    else if (key == "along") o.along = py::str(v);
    else if (key == "r_max") o.r_max = v.cast<int>();
    else if (key == "extended_scene") o.extended_scene = std::string(py::str(v));
    else throw InputError("unknown option '" + key + "'");
  }
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact homology of Koszul, de Rham, jet and Spencer complexes";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);
  (void)input_error;

  py::class_<AffineScene>(m, "Scene")
      .def_property_readonly("name", &AffineScene::name)
      .def_property_readonly("variables", [](const AffineScene& s) { return s.ring()->names(); })
      .def_property_readonly("weights", [](const AffineScene& s) { return s.ring()->weights(); })
      .def_property_readonly("ideal", &ideal_strings)
      .def("format", &format_scene)
      .def("__repr__", [](const AffineScene& s) { return "<Scene " + s.name() + ">"; });

  m.def("load_scene", [](const std::filesystem::path& p) { return load_scene(p); }, py::arg("path"));
  m.def("parse_scene", &parse_scene, py::arg("text"), py::arg("name") = "");
  m.def("commands", &command_names);

  m.def(
      "run_json",
      [](const std::string& command, const AffineScene& scene, const py::kwargs& kw) {
        const CommandOptions o = options_from(command, kw);
        py::gil_scoped_release release;
        return run_command(o, scene).dump(2);
      },
      py::arg("command"), py::arg("scene"));
  m.def(
      "affine_space", [](std::size_t n) { return affine_space(n); }, py::arg("n"));
}
