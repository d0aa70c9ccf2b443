#include "semisep/cli/cli.hpp"
#include "semisep/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using semisep::cli::Json;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact semiseparability checks for finite categories and finite-dimensional algebra";

    py::register_exception<semisep::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<semisep::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<semisep::BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);

    m.def(
        "run",
        [](const std::vector<std::string>& args, const std::string& base) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = semisep::cli::run(args, out, err, base);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), py::arg("base") = "",
        "Runs one command line; returns (exit code, stdout, stderr).");

    m.def(
        "execute",
        [](const std::string& command, const std::string& input, const std::string& params) {
            auto r = semisep::cli::execute(command, Json::parse(input), Json::parse(params));
            return r.dump();
        },
        py::arg("command"), py::arg("input"), py::arg("params") = "{}",
        "Report for a command on an inline input, as JSON text.");

    m.def(
        "verify_report",
        [](const std::string& report) { return semisep::cli::verify_report(Json::parse(report)).dump(); },
        py::arg("report"), "Verification block for a report, as JSON text.");

    m.attr("SCHEMA_VERSION") = semisep::io::kSchemaVersion;
}
