#include "italdom/constructions.hpp"
#include "italdom/errors.hpp"
#include "italdom/io.hpp"
#include "italdom/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace italdom;

namespace {

WeightFunction to_weights(const std::vector<int>& w)
{
    return WeightFunction(w);
}

std::vector<int> from_weights(const WeightFunction& f)
{
    return {f.values().begin(), f.values().end()};
}

std::vector<int> from_word(const VertexWord& w)
{
    return {w.letters().begin(), w.letters().end()};
}

} // namespace

PYBIND11_MODULE(_italdom, m)
{
    m.doc() = "Italian and perfect Italian domination on Sierpinski graphs";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    static py::exception<InvalidInput> invalid(m, "InvalidInput", base.ptr());
    static py::exception<CapacityError> capacity(m, "CapacityError", base.ptr());
    static py::exception<OutOfRegime> regime(m, "OutOfRegime", base.ptr());
    static py::exception<InternalError> internal(m, "InternalError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const InvalidInput& e) {
            py::set_error(invalid, e.what());
        } catch (const CapacityError& e) {
            py::set_error(capacity, e.what());
        } catch (const OutOfRegime& e) {
            py::set_error(regime, e.what());
        } catch (const InternalError& e) {
            py::set_error(internal, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    py::enum_<Variant>(m, "Variant").value("italian", Variant::italian).value("perfect", Variant::perfect);
    py::enum_<Engine>(m, "Engine")
        .value("exhaustive", Engine::exhaustive)
        .value("path_dp", Engine::path_dp)
        .value("branch_bound", Engine::branch_bound);
    py::enum_<Regime>(m, "Regime")
        .value("kn", Regime::kn)
        .value("level2", Regime::level2)
        .value("level3plus", Regime::level3plus)
        .value("path", Regime::path);
    py::enum_<ViolationKind>(m, "ViolationKind")
        .value("deficit", ViolationKind::deficit)
        .value("inexact", ViolationKind::inexact);

    // graphs
    py::class_<Graph>(m, "Graph")
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("family", [](const Graph& g) { return std::string(family_name(g.family())); })
        .def("neighbours", [](const Graph& g, Vertex v) {
            if (v < 0 || v >= g.size())
                throw py::index_error("vertex out of range");
            const auto n = g.neighbours(v);
            return std::vector<Vertex>(n.begin(), n.end());
        })
        .def("degree", [](const Graph& g, Vertex v) {
            if (v < 0 || v >= g.size())
                throw py::index_error("vertex out of range");
            return g.degree(v);
        })
        .def("adjacent", &Graph::adjacent)
        .def("edges", &Graph::edges)
        .def("label", &Graph::label)
        .def("connected", &Graph::connected)
        .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
        .def("to_dot", [](const Graph& g, std::optional<std::vector<int>> w) {
            return to_dot(g, w ? std::optional(to_weights(*w)) : std::nullopt);
        }, py::arg("weights") = py::none())
        .def("hash", &graph_hash)
        .def_static("from_json", [](const std::string& text) {
            try {
                return graph_from_json(json::parse(text));
            } catch (const json::exception& e) {
                throw InvalidInput(e.what());
            }
        })
        .def("__len__", &Graph::size);

    m.def("build_sierpinski", [](int n, int t) { return build_sierpinski(n, t).graph(); }, py::arg("n"),
          py::arg("t"), "S(K_n,t) with vertices in word-rank order");
    m.def("build_complete", [](int n) { return build_complete(n); });
    m.def("build_path", [](int m) { return build_path(m); });
    m.def("sierpinski_edges_by_rule", &sierpinski_edges_by_rule);
    m.def("adjacent_by_rule", [](std::vector<int> u, std::vector<int> v, int n) {
        return adjacent_by_rule(VertexWord(std::move(u)), VertexWord(std::move(v)), n);
    });
    m.def("word_rank", [](std::vector<int> w, int n) { return word_rank(VertexWord(std::move(w)), n); });
    m.def("rank_word", [](std::int64_t r, int n, int t) { return from_word(rank_word(r, n, t)); });
    m.def("extreme_vertices", [](int n, int t) {
        std::vector<std::vector<int>> out;
        for (const auto& w : extreme_vertices(build_sierpinski(n, t)))
            out.push_back(from_word(w));
        return out;
    });

    // verification
    py::class_<Violation>(m, "Violation")
        .def_readonly("vertex", &Violation::vertex)
        .def_readonly("neighbour_sum", &Violation::neighbour_sum)
        .def_readonly("kind", &Violation::kind);
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("valid", &VerificationReport::valid)
        .def_readonly("violations", &VerificationReport::violations)
        .def_readonly("total_weight", &VerificationReport::total_weight);

    m.def("total_weight", [](const std::vector<int>& w) { return total_weight(to_weights(w)); });
    m.def("verify_idf", [](const Graph& g, const std::vector<int>& w) { return verify_idf(g, to_weights(w)); });
    m.def("verify_pid", [](const Graph& g, const std::vector<int>& w) { return verify_pid(g, to_weights(w)); });

    // constructions
    m.def("regime_for", &regime_for);
    m.def("closed_form_italian", &closed_form_italian);
    m.def("closed_form_perfect", &closed_form_perfect);
    m.def("construct_level2", [](int n) { return from_weights(construct_level2(n)); });
    m.def("construct_level3plus", [](int n, int t) { return from_weights(construct_level3plus(n, t)); });
    m.def("construct_path", [](int m) { return from_weights(construct_path(m)); });
    m.def("construct_kn", [](int n) { return from_weights(construct_kn(n)); });
    m.def("construct", [](int n, int t) {
        const auto c = construct(n, t);
        return py::make_tuple(c.regime, from_weights(c.weights), c.closed_form);
    }, "Returns (regime, weights, closed_form)");

    // solvers
    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("exhaustive_vertex_limit", &SearchConfig::exhaustive_vertex_limit)
        .def_readwrite("node_budget", &SearchConfig::node_budget)
        .def_readwrite("weight_cutoff", &SearchConfig::weight_cutoff)
        .def_readwrite("solution_cap", &SearchConfig::solution_cap)
        .def_property("seed",
                      [](const SearchConfig& c) -> std::optional<std::vector<int>> {
                          if (!c.seed)
                              return std::nullopt;
                          return from_weights(*c.seed);
                      },
                      [](SearchConfig& c, std::optional<std::vector<int>> w) {
                          c.seed = w ? std::optional(to_weights(*w)) : std::nullopt;
                      });

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("optimum", &SolveResult::optimum)
        .def_property_readonly("witness", [](const SolveResult& r) { return from_weights(r.witness); })
        .def_readonly("nodes_explored", &SolveResult::nodes_explored)
        .def_readonly("engine", &SolveResult::engine)
        .def_readonly("variant", &SolveResult::variant)
        .def_readonly("proven", &SolveResult::proven)
        .def("to_json", [](const SolveResult& r) { return solve_result_to_json(r).dump(); });

    py::class_<Enumeration>(m, "Enumeration")
        .def_readonly("optimum", &Enumeration::optimum)
        .def_property_readonly("optima", [](const Enumeration& e) {
            std::vector<std::vector<int>> out;
            for (const auto& f : e.optima)
                out.push_back(from_weights(f));
            return out;
        })
        .def_readonly("complete", &Enumeration::complete)
        .def_readonly("nodes_explored", &Enumeration::nodes_explored);

    const SearchConfig defaults;
    m.def("solve_exhaustive", &solve_exhaustive, py::arg("graph"), py::arg("variant") = Variant::italian,
          py::arg("config") = defaults, py::call_guard<py::gil_scoped_release>());
    m.def("solve_path_dp", &solve_path_dp, py::arg("m"), py::arg("variant") = Variant::italian);
    m.def("solve_branch_bound", &solve_branch_bound, py::arg("graph"), py::arg("variant") = Variant::italian,
          py::arg("config") = defaults, py::call_guard<py::gil_scoped_release>());
    m.def("enumerate_optima", &enumerate_optima, py::arg("graph"), py::arg("variant") = Variant::italian,
          py::arg("config") = defaults, py::arg("optimum") = py::none(), py::call_guard<py::gil_scoped_release>());
    m.def("solve", &solve, py::arg("graph"), py::arg("variant"), py::arg("engine"), py::arg("config") = defaults,
          py::call_guard<py::gil_scoped_release>());
}
