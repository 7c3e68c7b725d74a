#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domino/correspondence.hpp"
#include "domino/isotypic.hpp"
#include "domino/kl.hpp"
#include "domino/orbit.hpp"
#include "domino/reps.hpp"

namespace py = pybind11;
using namespace domino;

namespace {

Kind kind_of(const std::string& k) { return parse_kind(k); }

// JSON crosses the boundary as text; the Python side decodes it.
std::string pair_json(const TableauPair& p) { return p.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Domino tableaux of types B/C: insertion, operators, orbits, KL cells";

    py::class_<DominoTableau>(m, "DominoTableau")
        .def_property_readonly("rank", &DominoTableau::rank)
        .def_property_readonly("kind", [](const DominoTableau& t) { return std::string(1, kind_char(t.kind())); })
        .def_property_readonly("shape", [](const DominoTableau& t) { return t.shape().parts(); })
        .def("render", &DominoTableau::render)
        .def("to_json", [](const DominoTableau& t) { return t.to_json().dump(); })
        .def_static("from_json", [](const std::string& s) { return DominoTableau::decode(s); })
        .def("__eq__", [](const DominoTableau& a, const DominoTableau& b) { return a == b; })
        .def("__hash__", &DominoTableau::hash)
        .def("__repr__", [](const DominoTableau& t) { return "<DominoTableau " + t.shape().str() + ">"; });

    py::class_<TableauPair>(m, "TableauPair")
        .def(py::init<DominoTableau, DominoTableau>(), py::arg("left"), py::arg("right"))
        .def_readonly("left", &TableauPair::left)
        .def_readonly("right", &TableauPair::right)
        .def("swapped", &TableauPair::swapped)
        .def("valid", &TableauPair::valid)
        .def("to_json", &pair_json)
        .def_static("from_json", [](const std::string& s) { return TableauPair::decode(s); })
        .def("__eq__", [](const TableauPair& a, const TableauPair& b) { return a == b; })
        .def("__hash__", &TableauPair::hash);

    m.def("insert", [](const std::vector<int>& w, const std::string& kind) {
        return insert(SignedPermutation(w), kind_of(kind));
    }, py::arg("word"), py::arg("kind") = "C");
    m.def("extract", [](const TableauPair& p) { return extract(p).images(); });
    m.def("enumerate_tableaux", [](const std::vector<int>& shape, const std::string& kind) {
        return enumerate_tableaux(Shape(shape), kind_of(kind));
    }, py::arg("shape"), py::arg("kind") = "C");
    m.def("tilable_shapes", [](int n, const std::string& kind) {
        std::vector<std::vector<int>> out;
        for (auto& s : tilable_shapes(n, kind_of(kind))) out.push_back(s.parts());
        return out;
    }, py::arg("rank"), py::arg("kind") = "C");
    m.def("two_quotient", [](const std::vector<int>& shape) {
        auto q = two_core_quotient(Shape(shape)).quotient;
        return std::make_pair(q.first.parts(), q.second.parts());
    });
    m.def("is_special", [](const std::vector<int>& shape, const std::string& kind) {
        return is_special(Shape(shape), kind_of(kind));
    }, py::arg("shape"), py::arg("kind") = "C");

    m.def("apply_operators", [](const std::string& ops, const TableauPair& p) {
        return apply_sequence(parse_sequence(ops), p);
    }, py::arg("operators"), py::arg("pair"));
    m.def("orbit", [](const TableauPair& p, bool with_s) {
        return orbit(p, with_s ? kTransitiveFamily : (kFamilyT | kFamilyU));
    }, py::arg("pair"), py::arg("with_s_family") = true);
    m.def("_orbit_check", [](const std::string& kind, int max_rank, bool with_s) {
        py::gil_scoped_release release;
        return check_campaign(kind_of(kind), max_rank, with_s ? kTransitiveFamily : (kFamilyT | kFamilyU)).to_json().dump();
    });

    m.def("kl_polynomial", [](const std::vector<int>& u, const std::vector<int>& v) {
        KLOptions o;
        o.use_cache = false;
        KLTable t(static_cast<int>(u.size()), o);
        return t.kl(SignedPermutation(u), SignedPermutation(v));
    }, py::arg("u"), py::arg("v"));
    m.def("_character_table", [](int n) { return character_table(n).to_json().dump(); });
    m.def("_verify_isotypic", [](int n, const std::string& kind) {
        py::gil_scoped_release release;
        KLOptions o;
        o.use_cache = false;
        KLTable t(n, o);
        CellStructure cs(t, kind_of(kind));
        return verify_isotypic(cs).to_json().dump();
    });
    m.def("_c6_check", [] { return c6_combinatorial_check().to_json().dump(); });
}
