#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/switching.hpp"

namespace py = pybind11;
using namespace hyperspec;

namespace {

SpectralOptions options(std::size_t degree_cap, std::size_t dim_cap, unsigned threads) {
    SpectralOptions o;
    o.degree_cap = degree_cap;
    o.dim_cap = dim_cap;
    o.workers = threads;
    return o;
}

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_hyperspec, m) {
    m.doc() = "Exact spectra of uniform hypergraphs";

    py::register_exception<Error>(m, "HyperspecError", PyExc_RuntimeError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, int, std::vector<Edge>>(), py::arg("n"), py::arg("k"), py::arg("edges") = std::vector<Edge>{})
        .def_property_readonly("n", &Hypergraph::n)
        .def_property_readonly("k", &Hypergraph::k)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def("degrees", &Hypergraph::degrees)
        .def("relabeled", &Hypergraph::relabeled, py::arg("perm"))
        .def("format", [](const Hypergraph& h) { return format_hypergraph(h); })
        .def_static("parse", [](const std::string& text) { return parse_hypergraph(text); })
        .def(py::self == py::self)
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(n=" + std::to_string(h.n()) + ", k=" + std::to_string(h.k()) +
                   ", edges=" + std::to_string(h.edge_count()) + ")";
        });

    m.def("complete_hypergraph", &complete_hypergraph, py::arg("n"), py::arg("k"));
    m.def("complement", &complement);
    m.def("count_simplices", &count_simplices);
    m.def("is_isomorphic", &is_isomorphic, "Vertex map g -> h (1-based images) or None");

    m.def(
        "char_poly",
        [](const Hypergraph& h, std::size_t degree_cap, std::size_t dim_cap, unsigned threads) {
            py::gil_scoped_release release;
            return char_poly(adjacency_tensor(h), options(degree_cap, dim_cap, threads)).coeff_strings();
        },
        py::arg("h"), py::arg("degree_cap") = 128, py::arg("dim_cap") = 512, py::arg("threads") = 1,
        "Coefficients as 'p/q' strings, index = degree");
    m.def(
        "e_char_poly",
        [](const Hypergraph& h, bool raw, std::size_t dim_cap) {
            py::gil_scoped_release release;
            const SpectralOptions o = options(128, dim_cap, 1);
            const Tensor a = adjacency_tensor(h);
            return (raw ? e_char_poly_raw(a, o) : e_char_poly(a, o)).coeff_strings();
        },
        py::arg("h"), py::arg("raw") = false, py::arg("dim_cap") = 512);
    m.def("are_cospectral", [](const Hypergraph& g, const Hypergraph& h) { return are_cospectral(g, h); });

    m.def(
        "example_pair",
        [](int n) {
            auto ex = example_pair(n);
            return py::make_tuple(ex.h, ex.g, ex.partition.v1().ids());
        },
        py::arg("n"), "(H, G, V1) for the E-cospectral example on 4 + n vertices");
    m.def(
        "verify_switch",
        [](const Hypergraph& h, const std::vector<int>& v1) {
            SwitchingPartition p(v1, h.n());
            const SwitchReport report = validate(h, p);
            const Hypergraph g = switch_hypergraph(h, p);
            const SimilarityResult sim = verify_similarity(h, g, p);
            py::dict out;
            out["verdict"] = sim.holds;
            out["G"] = g;
            out["report"] = to_python(to_json(report));
            return out;
        },
        py::arg("h"), py::arg("v1"));

    m.def(
        "ds_verify",
        [](const Hypergraph& h, bool prune) {
            DsOptions o;
            o.prune = prune;
            json j;
            {
                py::gil_scoped_release release;
                j = to_json(ds_verify(h, o));
            }
            return to_python(j);
        },
        py::arg("h"), py::arg("prune") = true);
    m.def(
        "lemma4_scan",
        [](int n, int k) {
            json j;
            {
                py::gil_scoped_release release;
                j = to_json(lemma4_scan(n, k));
            }
            return to_python(j);
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "simplex_destruction_min",
        [](int n, int k, int r) { return to_python(to_json(simplex_destruction_min(n, k, r))); }, py::arg("n"),
        py::arg("k"), py::arg("r"));
}
