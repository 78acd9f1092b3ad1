// Python bindings: graphs in, "p/q" strings and JSON documents out.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"
#include "qwz/serialize.hpp"
#include "qwz/zeta.hpp"

namespace py = pybind11;
using namespace qwz;

namespace {

std::vector<std::string> coefficient_strings(const RatPolynomial& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coefficients()) out.push_back(to_pq_string(c));
    return out;
}

std::string zeta_document(const Graph& g, std::size_t order) {
    const ArcSet arcs(g);
    const RatPolynomial edge_form = ihara_reciprocal_edge_form(arcs);
    const RationalFunction bass_form = ihara_reciprocal_bass_form(g);
    Json doc = Json::object();
    doc["edge_form"] = to_json(edge_form);
    doc["bass_form"] = to_json(bass_form);
    doc["equal"] = RationalFunction(edge_form) == bass_form;
    Json series = Json::array();
    const PowerSeries inverse = PowerSeries::from_polynomial(edge_form, order).inverse();
    for (const auto& c : inverse.coefficients()) series.push_back(to_pq_string(c));
    doc["series"] = std::move(series);
    return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum-walk transition matrices and graph zeta functions";

    // Later registrations take precedence, so the base class goes first.
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_ValueError);
    py::register_exception<IdentityViolation>(m, "IdentityViolation", PyExc_ArithmeticError);
    py::register_exception<ResourceGuard>(m, "ResourceGuard", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                 std::vector<Edge> es;
                 for (auto [u, v] : edges) es.push_back({u, v});
                 return Graph(n, std::move(es));
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
        })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); }, py::arg("text"));
    m.def("parse_edge_list", [](const std::string& s) { return parse_edge_list(s); }, py::arg("text"));
    m.def("encode_graph6", &encode_graph6, py::arg("graph"));

    m.def(
        "charpoly",
        [](const Graph& g, const std::string& target) {
            return coefficient_strings(operator_charpoly(g, parse_operator(target)));
        },
        py::arg("graph"), py::arg("target") = "U", "Ascending \"p/q\" coefficients of the operator's char poly.");
    m.def(
        "spectrum",
        [](const Graph& g, const std::string& target, double tolerance) {
            return roots(operator_charpoly(g, parse_operator(target)), tolerance).values;
        },
        py::arg("graph"), py::arg("target") = "U", py::arg("tolerance") = kDefaultPairingTolerance);
    m.def("_zeta_json", &zeta_document, py::arg("graph"), py::arg("order") = 8);
    m.def(
        "_verify_json",
        [](std::uint64_t seed, std::size_t trials) {
            py::gil_scoped_release release;
            return to_json(run_identity_suite(builtin_corpus(seed), {seed, trials})).dump();
        },
        py::arg("seed") = kDefaultSeed, py::arg("trials") = 10);
    m.def(
        "_distinguish_json",
        [](const Graph& g, const Graph& h) {
            py::gil_scoped_release release;
            return to_json(srg_distinguish(g, h), "first", "second").dump();
        },
        py::arg("first"), py::arg("second"));
    m.attr("SHRIKHANDE_GRAPH6") = std::string(kShrikhandeGraph6);
    m.attr("ROOK_4X4_GRAPH6") = std::string(kRook4x4Graph6);
}
