#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "chromakit/bijection.hpp"
#include "chromakit/engine_dc.hpp"
#include "chromakit/engine_ie.hpp"
#include "chromakit/engine_walk.hpp"
#include "chromakit/errors.hpp"
#include "chromakit/formulas.hpp"
#include "chromakit/multigraph.hpp"
#include "chromakit/oracle.hpp"
#include "chromakit/polynomial.hpp"
#include "chromakit/verify.hpp"

namespace py = pybind11;

// Bridge cpp_int <-> python int through decimal strings, so counts and
// coefficients cross the boundary without truncation.
namespace pybind11::detail {

template <>
struct type_caster<chromakit::BigInt> {
    PYBIND11_TYPE_CASTER(chromakit::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        PyObject* repr = PyObject_Str(src.ptr());
        if (repr == nullptr) {
            PyErr_Clear();
            return false;
        }
        const char* text = PyUnicode_AsUTF8(repr);
        if (text == nullptr) {
            Py_DECREF(repr);
            PyErr_Clear();
            return false;
        }
        value = chromakit::BigInt(text);
        Py_DECREF(repr);
        return true;
    }

    static handle cast(const chromakit::BigInt& src, return_value_policy, handle) {
        return PyLong_FromString(src.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace chromakit;

std::vector<Edge> edges_from_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) edges.push_back(Edge{a, b});
    return edges;
}

std::vector<std::pair<Vertex, Vertex>> pairs_from_edges(const std::vector<Edge>& edges) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.a, e.b);
    return pairs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact chromatic-polynomial toolkit: four computation routes over "
              "arbitrary-precision integers, plus the cycle coloring codec.";

    py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);

    py::class_<Multigraph>(m, "Multigraph")
        .def(py::init([](std::size_t vertex_count,
                         const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return Multigraph(vertex_count, edges_from_pairs(edges));
             }),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Multigraph::vertex_count)
        .def_property_readonly("edge_count", &Multigraph::edge_count)
        .def("edges", [](const Multigraph& g) { return pairs_from_edges(g.edges()); })
        .def("has_loop", &Multigraph::has_loop)
        .def("delete_edge", &Multigraph::delete_edge, py::arg("edge_id"))
        .def("contract_edge", &Multigraph::contract_edge, py::arg("edge_id"))
        .def("connected_component_count", &Multigraph::connected_component_count)
        .def("collapse_parallel_edges", &Multigraph::collapse_parallel_edges)
        .def("canonical_key",
             [](const Multigraph& g) { return py::bytes(g.canonical_key()); })
        .def(py::self == py::self)
        .def("__repr__", [](const Multigraph& g) {
            return "Multigraph(vertices=" + std::to_string(g.vertex_count()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("k"));
    m.def("to_edge_list", &to_edge_list, py::arg("graph"));
    m.def("from_edge_list", &from_edge_list, py::arg("text"));
    m.def("read_edge_list_file", &read_edge_list_file, py::arg("path"));
    m.def("write_edge_list_file", &write_edge_list_file, py::arg("graph"), py::arg("path"));

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<>())
        .def(py::init<std::vector<BigInt>>(), py::arg("coefficients"))
        .def_property_readonly("degree", &Polynomial::degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("coefficients", &Polynomial::coefficients)
        .def("coefficient", &Polynomial::coefficient, py::arg("power"))
        .def("evaluate", &Polynomial::evaluate, py::arg("x"))
        .def("to_json", &Polynomial::to_json)
        .def("to_pretty", &Polynomial::to_pretty)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", &Polynomial::pow, py::arg("exponent"))
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.to_pretty() + ")"; });

    m.def("count_proper_colorings", &count_proper_colorings, py::arg("graph"), py::arg("lam"),
          py::arg("max_assignments") = budget::kMaxAssignments);
    m.def("enumerate_proper_cycle_colorings", &enumerate_proper_cycle_colorings, py::arg("n"),
          py::arg("lam"), py::arg("max_enumerated") = budget::kMaxEnumerated);
    m.def("count_walks_brute", &count_walks_brute, py::arg("graph"), py::arg("from_vertex"),
          py::arg("to_vertex"), py::arg("length"),
          py::arg("max_work") = budget::kMaxAssignments);

    py::class_<DcStats>(m, "DcStats")
        .def_readonly("nodes", &DcStats::nodes)
        .def_readonly("cache_hits", &DcStats::cache_hits)
        .def_readonly("max_depth", &DcStats::max_depth)
        .def("__repr__", [](const DcStats& s) {
            return "DcStats(nodes=" + std::to_string(s.nodes) +
                   ", cache_hits=" + std::to_string(s.cache_hits) +
                   ", max_depth=" + std::to_string(s.max_depth) + ")";
        });

    m.def(
        "chromatic_polynomial_dc",
        [](const Multigraph& g) {
            DcResult result = chromatic_polynomial_dc(g);
            return std::make_pair(std::move(result.polynomial), result.stats);
        },
        py::arg("graph"));
    m.def("chromatic_polynomial_path", &chromatic_polynomial_path, py::arg("n"));

    m.def("cycle_inclusion_exclusion", &cycle_inclusion_exclusion, py::arg("n"));
    m.def("chromatic_by_subsets", &chromatic_by_subsets, py::arg("graph"),
          py::arg("max_edges") = kSubsetEdgeBudget);

    py::class_<IntMatrix>(m, "IntMatrix")
        .def(py::init<std::size_t>(), py::arg("dim"))
        .def_static("identity", &IntMatrix::identity, py::arg("dim"))
        .def_property_readonly("dim", &IntMatrix::dim)
        .def("__getitem__",
             [](const IntMatrix& m, std::pair<std::size_t, std::size_t> index) {
                 if (index.first >= m.dim() || index.second >= m.dim()) {
                     throw py::index_error("matrix index out of range");
                 }
                 return m.at(index.first, index.second);
             })
        .def("rows",
             [](const IntMatrix& m) {
                 std::vector<std::vector<BigInt>> rows(m.dim(), std::vector<BigInt>(m.dim()));
                 for (std::size_t i = 0; i < m.dim(); ++i) {
                     for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
                 }
                 return rows;
             })
        .def("trace", &IntMatrix::trace)
        .def(py::self * py::self)
        .def(py::self == py::self);

    m.def("adjacency_matrix", &adjacency_matrix, py::arg("graph"));
    m.def("matrix_power", &matrix_power, py::arg("matrix"), py::arg("n"));
    m.def("count_closed_walks", &count_closed_walks, py::arg("graph"), py::arg("n"));
    m.def("complete_graph_closed_walks", &complete_graph_closed_walks, py::arg("lam"),
          py::arg("n"));
    m.def("chromatic_count_via_walks", &chromatic_count_via_walks, py::arg("n"), py::arg("lam"));

    m.def("cyclic_descents", &cyclic_descents, py::arg("t"));
    m.def("encode_phi", &encode_phi, py::arg("omega"), py::arg("lam"));
    m.def("is_constant", &is_constant, py::arg("sigma"));
    m.def("decode_psi", &decode_psi, py::arg("sigma"), py::arg("lam"));
    m.def(
        "decode_psi_trace",
        [](const CodeWord& sigma, std::int64_t lam) {
            DecodeTrace trace = decode_psi_trace(sigma, lam);
            return std::make_pair(std::move(trace.sigma_bar), std::move(trace.omega));
        },
        py::arg("sigma"), py::arg("lam"));
    m.def("exceptional_colorings", &exceptional_colorings, py::arg("n"), py::arg("lam"));

    py::class_<BijectionCount>(m, "BijectionCount")
        .def_readonly("n", &BijectionCount::n)
        .def_readonly("lam", &BijectionCount::lambda)
        .def_readonly("bijective_part", &BijectionCount::bijective_part)
        .def_readonly("exceptional_part", &BijectionCount::exceptional_part)
        .def_readonly("total", &BijectionCount::total)
        .def("__repr__", [](const BijectionCount& c) {
            return "BijectionCount(n=" + std::to_string(c.n) +
                   ", lam=" + std::to_string(c.lambda) + ", total=" + c.total.str() + ")";
        });
    m.def("count_via_bijection", &count_via_bijection, py::arg("n"), py::arg("lam"));

    m.def("cycle_closed_form", &cycle_closed_form, py::arg("n"));
    m.def("path_closed_form", &path_closed_form, py::arg("n"));
    m.def("complete_closed_form", &complete_closed_form, py::arg("k"));

    py::class_<VerifyFailure>(m, "VerifyFailure")
        .def_readonly("n", &VerifyFailure::n)
        .def_readonly("lam", &VerifyFailure::lambda)
        .def_readonly("method", &VerifyFailure::method)
        .def_readonly("got", &VerifyFailure::got)
        .def_readonly("expected", &VerifyFailure::expected);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("agreed", &VerifyReport::agreed)
        .def_readonly("failures", &VerifyReport::failures)
        .def_readonly("methods", &VerifyReport::methods)
        .def_readonly("table", &VerifyReport::table)
        .def_readonly("timings_ms", &VerifyReport::timings_ms)
        .def("render",
             [](const VerifyReport& report, bool with_timings) {
                 return render_verify_report(report, with_timings);
             },
             py::arg("with_timings") = false);

    m.def(
        "verify_cycle_methods",
        [](std::size_t n_max, std::int64_t lambda_max, bool include_oracle,
           std::size_t oracle_n_max, std::int64_t oracle_lambda_max, std::uint64_t oracle_budget) {
            VerifyOptions options;
            options.n_max = n_max;
            options.lambda_max = lambda_max;
            options.include_oracle = include_oracle;
            options.oracle_n_max = oracle_n_max;
            options.oracle_lambda_max = oracle_lambda_max;
            options.oracle_budget = oracle_budget;
            return verify_cycle_methods(options);
        },
        py::arg("n_max"), py::arg("lambda_max"), py::arg("include_oracle") = true,
        py::arg("oracle_n_max") = SIZE_MAX, py::arg("oracle_lambda_max") = INT64_MAX,
        py::arg("oracle_budget") = budget::kMaxAssignments);

    m.attr("MAX_ASSIGNMENTS_BUDGET") = budget::kMaxAssignments;
    m.attr("MAX_ENUMERATED_BUDGET") = budget::kMaxEnumerated;
    m.attr("SUBSET_EDGE_BUDGET") = kSubsetEdgeBudget;
    m.attr("__version__") = "0.1.0";
}
