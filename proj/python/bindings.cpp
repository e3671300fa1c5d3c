#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <string>
#include <vector>

#include "hyperten/apply.hpp"
#include "hyperten/bounds.hpp"
#include "hyperten/hypergraph.hpp"
#include "hyperten/odd_bipartite.hpp"
#include "hyperten/perron.hpp"
#include "hyperten/report.hpp"
#include "hyperten/tensor.hpp"

namespace py = pybind11;
using namespace hyperten;

namespace {

TensorKind kind_from(const std::string& target) {
    if (target == "a" || target == "adjacency") return TensorKind::adjacency;
    if (target == "l" || target == "laplacian") return TensorKind::laplacian;
    if (target == "q" || target == "signless") return TensorKind::signless;
    throw std::invalid_argument("unknown tensor target: " + target);
}

py::dict bounds_dict(const BoundsReport& b) {
    py::dict d;
    d["lower_average_degree"] = to_string(b.lower_average_degree);
    d["lower_average_degree_value"] = to_double(b.lower_average_degree);
    d["lower_equality_predicted"] = b.lower_equality_predicted;
    d["upper_max_degree"] = b.upper_max_degree;
    d["upper_max_equality_predicted"] = b.upper_max_equality_predicted;
    d["upper_edge_degree_product"] =
        b.upper_edge_degree_product ? py::object(py::float_(*b.upper_edge_degree_product))
                                    : py::object(py::none());
    d["witness_edge"] = b.witness_edge;
    d["upper_uniform_geometric_mean"] =
        b.upper_uniform_geometric_mean ? py::object(py::float_(*b.upper_uniform_geometric_mean))
                                       : py::object(py::none());
    d["upper_yuan_pairwise"] = b.upper_yuan_pairwise
                                   ? py::object(py::float_(*b.upper_yuan_pairwise))
                                   : py::object(py::none());
    d["yuan_in_best"] = b.yuan_in_best;
    d["best_upper"] = b.best_upper;
    d["per_component"] = b.per_component;
    return d;
}

py::dict bipartition_dict(const Hypergraph& h, const OddBipartition& bip) {
    py::dict d;
    d["feasible"] = bip.feasible;
    if (bip.feasible) {
        d["v1"] = bip.v1;
    } else {
        d["witness_odd_edge"] = bip.witness_odd_edge;
        std::vector<std::vector<int>> edges;
        for (size_t idx : bip.witness_edges) edges.push_back(h.edges()[idx]);
        d["witness_edges"] = edges;
    }
    return d;
}

OddBipartition bipartition_from_v1(const Hypergraph& h, const std::vector<int>& v1) {
    if (!check_bipartition(h, v1))
        throw std::invalid_argument("v1 is not a valid odd bipartition of this hypergraph");
    OddBipartition bip;
    bip.feasible = true;
    bip.v1 = v1;
    return bip;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral analysis of general hypergraphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def(py::init<int, std::vector<std::vector<int>>, bool>(), py::arg("vertex_count"),
             py::arg("edges"), py::arg("allow_singletons") = false)
        .def_property_readonly("vertex_count", &Hypergraph::vertex_count)
        .def_property_readonly("edges", &Hypergraph::edges)
        .def_property_readonly("rank", &Hypergraph::rank)
        .def_property_readonly("corank", &Hypergraph::corank)
        .def("__repr__", [](const Hypergraph& h) {
            return "Hypergraph(" + std::to_string(h.vertex_count()) + " vertices, " +
                   std::to_string(h.edges().size()) + " edges)";
        });

    py::class_<PerronResult>(m, "PerronResult")
        .def_readonly("rho_lower", &PerronResult::rho_lower)
        .def_readonly("rho_upper", &PerronResult::rho_upper)
        .def_readonly("iterations", &PerronResult::iterations)
        .def_readonly("converged", &PerronResult::converged)
        .def_readonly("vector", &PerronResult::vector)
        .def_property_readonly("target",
                               [](const PerronResult& r) { return tensor_kind_name(r.target); })
        .def("estimate", &PerronResult::estimate)
        .def("width", &PerronResult::width)
        .def("__repr__", [](const PerronResult& r) {
            return "PerronResult(estimate=" + format_double(r.estimate()) +
                   ", width=" + format_double(r.width()) +
                   ", converged=" + (r.converged ? "True" : "False") + ")";
        });

    m.def(
        "parse",
        [](const std::string& text, bool allow_singletons) {
            return parse_hypergraph(text, allow_singletons);
        },
        py::arg("text"), py::arg("allow_singletons") = false);
    m.def("serialize", &serialize);

    m.def("degrees", [](const Hypergraph& h) { return degree_profile(h).degrees; });
    m.def("average_degree",
          [](const Hypergraph& h) { return to_double(degree_profile(h).average_degree); });
    m.def("rank_corank", &rank_corank);
    m.def("is_uniform", &is_uniform);
    m.def("is_regular", &is_regular);
    m.def("is_connected", &is_connected);
    m.def("connected_components", &connected_components);
    m.def("is_weakly_irreducible", &is_weakly_irreducible);

    m.def(
        "tensor_apply",
        [](const Hypergraph& h, const std::string& target, const std::vector<double>& x) {
            return tensor_apply(h, kind_from(target), x);
        },
        py::arg("h"), py::arg("target"), py::arg("x"));
    m.def("adjacency_form",
          [](const Hypergraph& h, const std::vector<double>& x) { return adjacency_form(h, x); });

    m.def(
        "collatz_wielandt",
        [](const Hypergraph& h, const std::string& target, const std::vector<double>& x) {
            return collatz_wielandt(h, kind_from(target), x);
        },
        py::arg("h"), py::arg("target"), py::arg("x"));
    m.def(
        "spectral_radius",
        [](const Hypergraph& h, const std::string& target, double tol, long max_iterations) {
            PerronOptions opts;
            opts.tol = tol;
            opts.max_iterations = max_iterations;
            return spectral_radius_per_component(h, kind_from(target), opts);
        },
        py::arg("h"), py::arg("target") = "a", py::arg("tol") = 1e-10,
        py::arg("max_iterations") = 100000);
    m.def(
        "rayleigh",
        [](const Hypergraph& h, const std::string& target, const std::vector<double>& x) {
            return rayleigh(h, kind_from(target), x);
        },
        py::arg("h"), py::arg("target"), py::arg("x"));

    m.def("bounds", [](const Hypergraph& h) { return bounds_dict(bounds_report(h)); });

    m.def("find_odd_bipartition",
          [](const Hypergraph& h) { return bipartition_dict(h, find_odd_bipartition(h)); });
    m.def(
        "signless_kernel_residual",
        [](const Hypergraph& h, const std::vector<int>& v1) {
            return signless_kernel_certificate(h, bipartition_from_v1(h, v1)).value;
        },
        py::arg("h"), py::arg("v1"));
    m.def(
        "similarity_certificate",
        [](const Hypergraph& h, const std::vector<int>& v1, std::size_t budget) {
            return similarity_certificate(h, bipartition_from_v1(h, v1), budget);
        },
        py::arg("h"), py::arg("v1"), py::arg("budget") = kDefaultDenseBudget);
    m.def(
        "signed_perron_residual",
        [](const Hypergraph& h, const std::vector<int>& v1, const PerronResult& perron) {
            return signed_perron_certificate(h, bipartition_from_v1(h, v1), perron).value;
        },
        py::arg("h"), py::arg("v1"), py::arg("perron"));
    m.def("laplacian_allones_residual",
          [](const Hypergraph& h) { return laplacian_allones_check(h).value; });

    m.def(
        "tensor_nonzeros",
        [](const Hypergraph& h, const std::string& target, std::size_t budget) {
            DenseTensor t;
            switch (kind_from(target)) {
                case TensorKind::adjacency: t = dense_adjacency(h, budget); break;
                case TensorKind::laplacian: t = dense_laplacian(h, budget); break;
                case TensorKind::signless: t = dense_signless(h, budget); break;
            }
            return dense_nonzero_lines(t);
        },
        py::arg("h"), py::arg("target") = "a", py::arg("budget") = kDefaultDenseBudget);

    m.def(
        "report_json",
        [](const Hypergraph& h, double tol, long max_iterations, const std::string& target) {
            ReportOptions opts;
            opts.tol = tol;
            opts.max_iterations = max_iterations;
            opts.target = target;
            return report_json(build_report(h, opts));
        },
        py::arg("h"), py::arg("tol") = 1e-10, py::arg("max_iterations") = 100000,
        py::arg("target") = "both");
}
