#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigmarho/csp.hpp"
#include "sigmarho/errors.hpp"
#include "sigmarho/graph.hpp"
#include "sigmarho/kernel_modulator.hpp"
#include "sigmarho/kernel_nd.hpp"
#include "sigmarho/modular.hpp"
#include "sigmarho/sigma_rho.hpp"
#include "sigmarho/sweep.hpp"

namespace py = pybind11;
using namespace sigmarho;

namespace {

VertexSet to_vertex_set(const std::vector<int>& vs) { return VertexSet(vs); }

std::optional<std::vector<int>> answer_witness(const DominationAnswer& a) {
    if (!a.witness.has_value()) return std::nullopt;
    return a.witness->values();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "[sigma,rho]-domination kernels and solvers";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);
    py::register_exception<UnsupportedSpecError>(m, "UnsupportedSpecError", PyExc_ValueError);
    py::register_exception<LiftError>(m, "LiftError", PyExc_RuntimeError);
    py::register_exception<InterpolationError>(m, "InterpolationError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int>(), py::arg("n"))
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<WeightedGraph>(m, "WeightedGraph")
        .def_readonly("graph", &WeightedGraph::graph)
        .def_readonly("weights", &WeightedGraph::weights);

    py::class_<NumberSet>(m, "NumberSet")
        .def_static("finite", &NumberSet::finite, py::arg("values"))
        .def_static("naturals", &NumberSet::naturals)
        .def_static("positive_naturals", &NumberSet::positive_naturals)
        .def("contains", &NumberSet::contains, py::arg("c"))
        .def_property_readonly("is_finite", &NumberSet::is_finite)
        .def("__repr__", [](const NumberSet& s) { return s.to_string(); });

    py::class_<SigmaRhoSpec>(m, "SigmaRhoSpec")
        .def(py::init<NumberSet, NumberSet>(), py::arg("sigma"), py::arg("rho"))
        .def_readonly("sigma", &SigmaRhoSpec::sigma)
        .def_readonly("rho", &SigmaRhoSpec::rho)
        .def("__repr__", [](const SigmaRhoSpec& s) {
            return "SigmaRhoSpec(sigma=" + s.sigma.to_string() + ", rho=" + s.rho.to_string() +
                   ")";
        });

    py::class_<DominationAnswer>(m, "DominationAnswer")
        .def_readonly("exists", &DominationAnswer::exists)
        .def_readonly("cost", &DominationAnswer::cost)
        .def_property_readonly("witness", &answer_witness)
        .def("__repr__", [](const DominationAnswer& a) {
            return a.exists ? "DominationAnswer(exists=True)" : "DominationAnswer(exists=False)";
        });

    m.def("preset", &preset, py::arg("name"));
    m.def("preset_names", [] { return preset_names(); });
    m.def("parse_number_set", &parse_number_set, py::arg("text"));

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("g"));
    m.def("generate_random", &generate_random, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("generate_random_connected", &generate_random_connected, py::arg("n"), py::arg("p"),
          py::arg("seed"));

    m.def(
        "is_sigma_rho_dominating",
        [](const Graph& g, const std::vector<int>& d, const SigmaRhoSpec& spec) {
            return is_sigma_rho_dominating(g, to_vertex_set(d), spec);
        },
        py::arg("g"), py::arg("d"), py::arg("spec"));
    m.def("brute_force", &brute_force, py::arg("g"), py::arg("spec"),
          py::arg("budget") = std::nullopt, py::arg("cap") = oracle_vertex_cap());
    m.def("brute_force_weighted", &brute_force_weighted, py::arg("g"), py::arg("spec"),
          py::arg("budget") = std::nullopt, py::arg("cap") = oracle_vertex_cap());

    m.def(
        "compute_vertex_cover",
        [](const Graph& g, std::optional<int> budget) -> std::optional<std::vector<int>> {
            auto r = compute_vertex_cover(g, budget);
            if (!r) return std::nullopt;
            return r->values();
        },
        py::arg("g"), py::arg("budget") = std::nullopt);
    m.def(
        "compute_degree_d_modulator",
        [](const Graph& g, int d, std::optional<int> budget) -> std::optional<std::vector<int>> {
            auto r = compute_degree_d_modulator(g, d, budget);
            if (!r) return std::nullopt;
            return r->values();
        },
        py::arg("g"), py::arg("d"), py::arg("budget") = std::nullopt);

    m.def("check_guard", &check_guard, py::arg("spec"), py::arg("d"));

    py::class_<KernelResult>(m, "KernelResult")
        .def_property_readonly("variable_count",
                               [](const KernelResult& kr) { return kr.csp.variable_count; })
        .def_property_readonly("degree_bound",
                               [](const KernelResult& kr) { return kr.csp.degree_bound; })
        .def_property_readonly(
            "constraint_count",
            [](const KernelResult& kr) { return kr.csp.constraints.size(); })
        .def_property_readonly(
            "bit_size_estimate",
            [](const KernelResult& kr) { return kr.metadata.bit_size_estimate; })
        .def_readonly("modulator_order", &KernelResult::modulator_order)
        .def_property_readonly("csp_text",
                               [](const KernelResult& kr) { return serialize_csp(kr.csp); });

    m.def(
        "kernelize",
        [](const Graph& g, const std::vector<int>& s, int d, const SigmaRhoSpec& spec) {
            return kernelize(g, to_vertex_set(s), d, spec);
        },
        py::arg("g"), py::arg("modulator"), py::arg("d"), py::arg("spec"));
    m.def(
        "kernel_satisfiable",
        [](const KernelResult& kr) { return satisfiable_brute(kr.csp); },
        py::arg("kernel"));
    m.def(
        "lift_assignment",
        [](const KernelResult& kr, const std::vector<int>& tau) {
            return lift_assignment(kr, tau).values();
        },
        py::arg("kernel"), py::arg("assignment"));
    m.def(
        "solve_by_guessing",
        [](const Graph& g, const std::vector<int>& s, int d, const SigmaRhoSpec& spec) {
            return solve_by_guessing(g, to_vertex_set(s), d, spec);
        },
        py::arg("g"), py::arg("modulator"), py::arg("d"), py::arg("spec"));

    py::class_<TypePartition>(m, "TypePartition")
        .def_property_readonly("blocks",
                               [](const TypePartition& p) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& b : p.blocks) out.push_back(b.vertices);
                                   return out;
                               })
        .def_property_readonly("clique_flags",
                               [](const TypePartition& p) {
                                   std::vector<bool> out;
                                   for (const auto& b : p.blocks) out.push_back(b.is_clique);
                                   return out;
                               })
        .def_readonly("block_of", &TypePartition::block_of);
    m.def("compute_type_partition", &compute_type_partition, py::arg("g"));

    py::class_<NdKernel>(m, "NdKernel")
        .def_readonly("reduced", &NdKernel::reduced)
        .def_readonly("budget_out", &NdKernel::budget_out)
        .def_readonly("kept_vertices", &NdKernel::kept_vertices);
    m.def("kernel_bounded", &kernel_bounded, py::arg("g"), py::arg("spec"), py::arg("k"));
    m.def("kernel_rho_finite", &kernel_rho_finite, py::arg("g"), py::arg("spec"), py::arg("k"));
    m.def("kernel_sigma_finite", &kernel_sigma_finite, py::arg("g"), py::arg("spec"),
          py::arg("k"));
    m.def("nd_enumerate_solve", &nd_enumerate_solve, py::arg("g"), py::arg("spec"),
          py::arg("budget") = std::nullopt, py::arg("profile_cap") = 20'000'000);
    m.def("nd_enumerate_solve_sigma", &nd_enumerate_solve_sigma, py::arg("g"), py::arg("spec"),
          py::arg("budget") = std::nullopt, py::arg("profile_cap") = 20'000'000);

    m.def(
        "modular_width", [](const Graph& g) { return modular_width(decompose(g)); },
        py::arg("g"));
    m.def(
        "solve_eds_modular", [](const Graph& g) { return solve_eds_modular(g); }, py::arg("g"));
    m.def(
        "solve_ptds_modular", [](const Graph& g) { return solve_ptds_modular(g); },
        py::arg("g"));

    py::class_<SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("count", &SweepConfig::count)
        .def_readwrite("n_min", &SweepConfig::n_min)
        .def_readwrite("n_max", &SweepConfig::n_max)
        .def_readwrite("ps", &SweepConfig::ps)
        .def_readwrite("seed", &SweepConfig::seed)
        .def_readwrite("ds", &SweepConfig::ds)
        .def_readwrite("spec_names", &SweepConfig::spec_names)
        .def_readwrite("timings", &SweepConfig::timings);
    py::class_<RunReport>(m, "RunReport")
        .def("to_tsv", &RunReport::to_tsv)
        .def("summary", &RunReport::summary)
        .def_readonly("disagreements", &RunReport::disagreements)
        .def_readonly("lift_inconsistencies", &RunReport::lift_inconsistencies);
    m.def("run_sweep", &run_sweep, py::arg("config"));
}
