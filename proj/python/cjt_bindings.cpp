#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cjt/cli.hpp"
#include "cjt/json_io.hpp"
#include "cjt/zoo.hpp"

namespace py = pybind11;

namespace {

// Modules cross the boundary as JSON text; the Python side parses it with the json module.
cjt::ModuleRep load(const std::string& text, bool allow_large) {
    return cjt::module_from_json(cjt::Json::parse(text), allow_large);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jordan types of modules over elementary abelian p-groups";

    py::register_exception<cjt::Json::exception>(m, "JsonError", PyExc_ValueError);

    py::class_<cjt::JordanType>(m, "JordanType")
        .def(py::init([](std::uint32_t p, std::vector<std::uint64_t> counts) { return cjt::JordanType(p, counts); }),
             py::arg("p"), py::arg("counts"))
        .def_static("parse", &cjt::parse_pretty, py::arg("p"), py::arg("text"))
        .def_readonly("p", &cjt::JordanType::p)
        .def_readonly("counts", &cjt::JordanType::counts)
        .def("dim", &cjt::JordanType::dim)
        .def("power_ranks", &cjt::JordanType::power_ranks)
        .def("is_projective", &cjt::JordanType::is_projective)
        .def("stable", [](const cjt::JordanType& t) { return cjt::stable(t); })
        .def("__mul__", [](const cjt::JordanType& a, const cjt::JordanType& b) { return cjt::tensor_type(a, b); })
        .def("__add__", [](const cjt::JordanType& a, const cjt::JordanType& b) { return a + b; })
        .def("__eq__", [](const cjt::JordanType& a, const cjt::JordanType& b) { return a == b; })
        .def("__str__", &cjt::JordanType::pretty)
        .def("__repr__", [](const cjt::JordanType& t) { return "JordanType(" + t.pretty() + ")"; });

    m.def("dominance", [](const cjt::JordanType& a, const cjt::JordanType& b) {
        return std::string(cjt::to_string(cjt::dominance_compare(a, b)));
    });

    m.def(
        "example", [](const std::string& name, const std::map<std::string, std::int64_t>& params) {
            return cjt::to_json(cjt::build_example(name, params)).dump();
        },
        py::arg("name"), py::arg("params") = std::map<std::string, std::int64_t>{});

    m.def(
        "check_constant",
        [](const std::string& module, unsigned max_e, bool exact, bool allow_large) {
            cjt::CheckOptions opt;
            opt.max_e = max_e;
            opt.exact = exact;
            cjt::ModuleRep mod = load(module, allow_large);
            py::gil_scoped_release release;
            return cjt::to_json(cjt::check_constant(mod, opt)).dump();
        },
        py::arg("module"), py::arg("max_e") = 2, py::arg("exact") = true, py::arg("allow_large") = false);

    m.def(
        "generic_type", [](const std::string& module, bool allow_large) {
            cjt::ModuleRep mod = load(module, allow_large);
            py::gil_scoped_release release;
            return cjt::generic_type(mod);
        },
        py::arg("module"), py::arg("allow_large") = false);

    m.def(
        "jordan_at",
        [](const std::string& module, std::vector<cjt::Elem> point, unsigned ext) {
            cjt::ModuleRep mod = load(module, true);
            cjt::FieldPtr f = mod.field->is_prime() ? cjt::make_field(mod.p(), ext) : mod.field;
            return cjt::jordan_at(mod, cjt::make_point(f, std::move(point)));
        },
        py::arg("module"), py::arg("point"), py::arg("ext") = 1);

    m.def(
        "omega_dim", [](std::uint32_t p, std::size_t r, int n) {
            return cjt::omega_k(cjt::make_field(p, 1), r, n)->dim;
        },
        py::arg("p"), py::arg("rank"), py::arg("n"));

    m.def(
        "run", [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cjt::execute(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
