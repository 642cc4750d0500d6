#include "ordfactor/checks.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ordfactor;

namespace {

RunConfig config(std::size_t cap_m, std::size_t cap_unique)
{
    RunConfig c;
    c.enumc.cap = cap_m;
    c.cap_unique = cap_unique;
    return c;
}

std::string run(const Loaded& l, const std::string& conditions, std::size_t cap_m, std::size_t cap_unique)
{
    return format_json(run_checks(l, expand_conditions(conditions), config(cap_m, cap_unique)));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "check_generated",
        [](const std::string& gen, const std::string& conditions, std::size_t cap_m, std::size_t cap_unique,
           std::uint64_t seed) { return run(generate(gen, seed), conditions, cap_m, cap_unique); },
        py::arg("gen"), py::arg("conditions") = "all", py::arg("cap_m") = 20, py::arg("cap_unique") = 6,
        py::arg("seed") = 0);
    m.def(
        "check_text",
        [](const std::string& text, const std::string& conditions, std::size_t cap_m, std::size_t cap_unique) {
            return run(parse_instance(text), conditions, cap_m, cap_unique);
        },
        py::arg("text"), py::arg("conditions") = "all", py::arg("cap_m") = 20, py::arg("cap_unique") = 6);
    m.def(
        "instance_text",
        [](const std::string& gen, std::uint64_t seed) { return serialize(to_spec(generate(gen, seed))); },
        py::arg("gen"), py::arg("seed") = 0);
    // [(base, exponent)], or None when the element has no decomposition
    m.def(
        "decompose",
        [](const std::string& gen, const std::string& element, std::uint64_t seed) {
            Loaded l = generate(gen, seed);
            const Instance& inst = *l.inst;
            auto d = ordfactor::decompose(inst, inst.P().at(element));
            std::optional<std::vector<std::pair<std::string, unsigned>>> out;
            if (d) {
                out.emplace();
                for (const auto& pp : *d)
                    out->push_back({inst.label(pp.base), pp.exponent});
            }
            return out;
        },
        py::arg("gen"), py::arg("element"), py::arg("seed") = 0);
    m.def("conditions", [] { return known_conditions(); });
}
