#pragma once

#include "italdom/domination.hpp"
#include "italdom/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace italdom {

enum class Engine { exhaustive, path_dp, branch_bound };

[[nodiscard]] std::string_view engine_name(Engine e);
[[nodiscard]] Engine parse_engine(std::string_view name);

struct SearchConfig {
    /// Largest graph solve_exhaustive accepts (3^|V| assignments).
    int exhaustive_vertex_limit = 16;
    /// Search nodes branch-and-bound may expand before giving up.
    std::uint64_t node_budget = 20'000'000;
    /// Stop as soon as a witness of at most this weight is known.
    std::optional<std::int64_t> weight_cutoff;
    /// Initial incumbent; must be valid for the requested variant.
    std::optional<WeightFunction> seed;
    /// Most optima enumerate_optima returns.
    std::size_t solution_cap = 10'000;
};

struct SolveResult {
    std::int64_t optimum = 0;
    WeightFunction witness;
    std::uint64_t nodes_explored = 0;
    Engine engine = Engine::exhaustive;
    Variant variant = Variant::italian;
    /// True when the optimum is certified, false for a best-found incumbent.
    bool proven = false;
};

/// Tries all 3^|V| assignments. The witness is the lexicographically smallest
/// optimal weight vector. Throws CapacityError above the vertex limit.
[[nodiscard]] SolveResult solve_exhaustive(const Graph& g, Variant variant, const SearchConfig& config = {});

/// Left-to-right dynamic program over the path P_m.
[[nodiscard]] SolveResult solve_path_dp(int m, Variant variant);

/// Depth-first branch-and-bound. Vertices are fixed in descending degree order
/// (rank breaks ties) and partial assignments are cut by a residual-demand
/// lower bound. Once the optimum is proven a second pass in rank order
/// recovers the lexicographically smallest optimal witness. Budget exhaustion
/// yields proven = false with the best incumbent.
[[nodiscard]] SolveResult solve_branch_bound(const Graph& g, Variant variant, const SearchConfig& config = {});

struct Enumeration {
    std::int64_t optimum = 0;
    std::vector<WeightFunction> optima;
    /// False when the solution cap or node budget cut the listing short.
    bool complete = false;
    std::uint64_t nodes_explored = 0;
};

/// All optimal functions in lexicographic order, up to config.solution_cap.
/// When optimum is not supplied it is computed with solve_branch_bound; if
/// that is not proven the result is empty and incomplete.
[[nodiscard]] Enumeration enumerate_optima(const Graph& g, Variant variant, const SearchConfig& config = {},
                                           std::optional<std::int64_t> optimum = std::nullopt);

/// Picks path-dp for paths (including S(K_2,t)), exhaustive when the graph fits the
/// exhaustive limit, branch-and-bound otherwise.
[[nodiscard]] Engine default_engine(const Graph& g, const SearchConfig& config = {});

[[nodiscard]] SolveResult solve(const Graph& g, Variant variant, Engine engine, const SearchConfig& config = {});

} // namespace italdom
