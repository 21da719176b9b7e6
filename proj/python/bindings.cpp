#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "domlab/edge_list.hpp"
#include "domlab/families.hpp"
#include "domlab/family_spec.hpp"
#include "domlab/solver.hpp"
#include "domlab/sweep.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace domlab;

namespace {

VertexSet to_set(const Graph& g, const std::vector<Vertex>& members) { return VertexSet(g.order(), members); }

DominationQuery query(const Graph& g, int k, const std::string& variant) { return {g, k, parse_variant(variant)}; }

}  // namespace

PYBIND11_MODULE(_domlab, m) {
    m.doc() = "k-tuple total (restrained) domination toolkit";

    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("min_degree", &Graph::min_degree)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors, "v"_a)
        .def("degree", &Graph::degree, "v"_a)
        .def("adjacent", &Graph::adjacent, "u"_a, "v"_a)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<domlab.Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    py::class_<SolveResult>(m, "SolveResult")
        .def_property_readonly("feasible", &SolveResult::feasible)
        .def_readonly("value", &SolveResult::value)
        .def_property_readonly("certificate", [](const SolveResult& r) { return r.certificate.members(); })
        .def_property_readonly("partition", [](const SolveResult& r) {
            std::vector<std::vector<Vertex>> out;
            for (const auto& cls : r.partition) out.push_back(cls.members());
            return out;
        })
        .def_readonly("nodes_explored", &SolveResult::nodes_explored)
        .def("__repr__", [](const SolveResult& r) {
            return r.feasible() ? "<SolveResult value=" + std::to_string(r.value) + ">" : std::string("<SolveResult infeasible>");
        });

    m.def("from_family", [](const std::string& spec) { return parse_family(spec); }, "spec"_a,
          "Graph from a family spec such as 'prism:cycle:6'.");
    m.def("from_edges", &build_graph, "n"_a, "edges"_a);
    m.def("from_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
    }, "text"_a);
    m.def("edge_list", &to_edge_list, "graph"_a);
    m.def("complement", &complement, "graph"_a);
    m.def("complementary_prism", &complementary_prism, "graph"_a);

    m.def("is_ktds", [](const Graph& g, const std::vector<Vertex>& s, int k) { return is_ktds(g, to_set(g, s), k); },
          "graph"_a, "vertices"_a, "k"_a = 1);
    m.def("is_ktrds", [](const Graph& g, const std::vector<Vertex>& s, int k) { return is_ktrds(g, to_set(g, s), k); },
          "graph"_a, "vertices"_a, "k"_a = 1);

    m.def("gamma", [](const Graph& g, int k, const std::string& variant) {
        return gamma_exact(query(g, k, variant), SolverLimits::from_environment());
    }, "graph"_a, "k"_a = 1, "variant"_a = "restrained", py::call_guard<py::gil_scoped_release>());
    m.def("gamma_naive", [](const Graph& g, int k, const std::string& variant) {
        return gamma_naive(query(g, k, variant), SolverLimits::from_environment());
    }, "graph"_a, "k"_a = 1, "variant"_a = "restrained", py::call_guard<py::gil_scoped_release>());
    m.def("domatic", [](const Graph& g, int k, const std::string& variant) {
        return domatic_exact(query(g, k, variant), SolverLimits::from_environment());
    }, "graph"_a, "k"_a = 1, "variant"_a = "restrained", py::call_guard<py::gil_scoped_release>());

    m.def("verify", [](const std::vector<std::string>& sections, std::uint64_t seed, int workers) {
        SweepConfig cfg;
        cfg.sections = sections;
        cfg.seed = seed;
        cfg.workers = workers;
        Report report;
        {
            py::gil_scoped_release release;
            report = run_sweep(cfg);
        }
        const auto s = report.summary();
        py::dict summary("total"_a = s.total, "matched"_a = s.matched, "discrepancies"_a = s.discrepancies,
                         "allowlisted"_a = s.allowlisted, "skipped"_a = s.skipped);
        return py::make_tuple(summary, report.csv(false));
    }, "sections"_a = std::vector<std::string>{}, "seed"_a = 1, "workers"_a = 1,
       "Runs the verification sweep; returns (summary dict, CSV text).");
}
