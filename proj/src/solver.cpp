#include "italdom/solver.hpp"

#include "italdom/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

namespace italdom {

std::string_view engine_name(Engine e)
{
    switch (e) {
    case Engine::exhaustive: return "exhaustive";
    case Engine::path_dp: return "path-dp";
    case Engine::branch_bound: return "branch-bound";
    }
    return "?";
}

Engine parse_engine(std::string_view name)
{
    if (name == "exhaustive")
        return Engine::exhaustive;
    if (name == "path-dp")
        return Engine::path_dp;
    if (name == "branch-bound")
        return Engine::branch_bound;
    throw InvalidInput("unknown engine '" + std::string(name) + "' (expected exhaustive, path-dp or branch-bound)");
}

namespace {

    bool satisfied(int weight, int sum, Variant variant)
    {
        if (weight != 0)
            return true;
        return variant == Variant::italian ? sum >= 2 : sum == 2;
    }

    // Full-vector state for the exhaustive engine: every vertex always has a
    // weight and `bad` counts vertices currently violating the condition.
    class ExhaustiveState {
    public:
        ExhaustiveState(const Graph& g, Variant variant)
            : g_(g), variant_(variant), weight_(g.size(), 0), sum_(g.size(), 0), bad_(g.size())
        {
        }

        void set(Vertex v, int value)
        {
            const int delta = value - weight_[v];
            if (delta == 0)
                return;
            bad_ -= !satisfied(weight_[v], sum_[v], variant_);
            weight_[v] = value;
            bad_ += !satisfied(weight_[v], sum_[v], variant_);
            for (Vertex u : g_.neighbours(v)) {
                bad_ -= !satisfied(weight_[u], sum_[u], variant_);
                sum_[u] += delta;
                bad_ += !satisfied(weight_[u], sum_[u], variant_);
            }
        }

        [[nodiscard]] bool valid() const { return bad_ == 0; }
        [[nodiscard]] const std::vector<int>& weights() const { return weight_; }

    private:
        const Graph& g_;
        Variant variant_;
        std::vector<int> weight_;
        std::vector<int> sum_;
        int bad_;
    };

    class Exhaustive {
    public:
        Exhaustive(const Graph& g, Variant variant) : state_(g, variant), size_(g.size()) {}

        void run() { descend(0, 0); }

        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        std::vector<int> witness;
        std::uint64_t leaves = 0;

    private:
        void descend(Vertex v, std::int64_t weight)
        {
            if (v == size_) {
                ++leaves;
                if (weight < best && state_.valid()) {
                    best = weight;
                    witness = state_.weights();
                }
                return;
            }
            for (int value = 0; value <= 2; ++value) {
                state_.set(v, value);
                descend(v + 1, weight + value);
            }
            state_.set(v, 0);
        }

        ExhaustiveState state_;
        int size_;
    };

    constexpr int unassigned = -1;

    // Partial-assignment search shared by the optimisation, lexicographic
    // recovery and enumeration passes. A node is cut when a zero-weight vertex
    // can no longer be satisfied, or when weight + lower bound exceeds limit.
    class BranchAndBound {
    public:
        enum class Mode { minimise, first_within, collect_equal };

        BranchAndBound(const Graph& g, Variant variant, std::vector<Vertex> order, std::uint64_t budget)
            : g_(g), variant_(variant), order_(std::move(order)), budget_(budget), weight_(g.size(), unassigned),
              sum_(g.size(), 0), free_(g.size()), need_(g.size(), 0)
        {
            for (Vertex v = 0; v < g.size(); ++v)
                free_[v] = g.degree(v);
        }

        /// Minimal number of further weight units needed by any completion.
        std::int64_t lower_bound()
        {
            std::int64_t demand = 0;
            for (Vertex v = 0; v < g_.size(); ++v) {
                need_[v] = weight_[v] > 0 ? 0 : std::max(0, 2 - sum_[v]);
                demand += need_[v];
            }
            if (demand == 0)
                return 0;
            // Best demand reduction per unit of weight, doubled to stay integral.
            std::int64_t best_gain2 = 0;
            for (Vertex u = 0; u < g_.size(); ++u) {
                if (weight_[u] != unassigned)
                    continue;
                std::int64_t one = need_[u];
                std::int64_t two = need_[u];
                for (Vertex x : g_.neighbours(u)) {
                    one += std::min(1, need_[x]);
                    two += need_[x];
                }
                best_gain2 = std::max({best_gain2, 2 * one, two});
            }
            if (best_gain2 == 0)
                return infeasible;
            return (2 * demand + best_gain2 - 1) / best_gain2;
        }

        /// Runs the search; returns false if the node budget ran out.
        bool run(Mode mode, std::int64_t limit)
        {
            mode_ = mode;
            limit_ = limit;
            const int n = g_.size();
            std::vector<int> next(n + 1, 0);
            int depth = 0;
            if (total_ + lower_bound() > limit_)
                return true;
            while (depth >= 0) {
                if (depth == n) {
                    if (on_leaf())
                        return true;
                    --depth;
                    continue;
                }
                const Vertex u = order_[depth];
                if (weight_[u] != unassigned)
                    unassign(u);
                const int value = next[depth];
                if (value > 2 || total_ + value > limit_) {
                    next[depth] = 0;
                    --depth;
                    continue;
                }
                next[depth] = value + 1;
                assign(u, value);
                if (++nodes_ > budget_) {
                    unwind();
                    return false;
                }
                if (consistent(u) && total_ + lower_bound() <= limit_) {
                    ++depth;
                    if (depth < n)
                        next[depth] = 0;
                }
            }
            return true;
        }

        std::int64_t limit() const { return limit_; }
        std::uint64_t nodes() const { return nodes_; }
        std::vector<std::vector<int>> found;
        std::size_t cap = std::numeric_limits<std::size_t>::max();
        std::optional<std::int64_t> stop_at;
        bool capped = false;

        static constexpr std::int64_t infeasible = std::numeric_limits<std::int32_t>::max();

    private:
        void assign(Vertex u, int value)
        {
            weight_[u] = value;
            total_ += value;
            for (Vertex x : g_.neighbours(u)) {
                sum_[x] += value;
                --free_[x];
            }
        }

        void unassign(Vertex u)
        {
            const int value = weight_[u];
            weight_[u] = unassigned;
            total_ -= value;
            for (Vertex x : g_.neighbours(u)) {
                sum_[x] -= value;
                ++free_[x];
            }
        }

        void unwind()
        {
            for (Vertex v = 0; v < g_.size(); ++v)
                if (weight_[v] != unassigned)
                    unassign(v);
        }

        bool vertex_ok(Vertex x) const
        {
            if (weight_[x] != 0)
                return true;
            if (sum_[x] + 2 * free_[x] < 2)
                return false;
            // sums never decrease, so an excess is already final
            if (variant_ == Variant::perfect && sum_[x] > 2)
                return false;
            return true;
        }

        bool consistent(Vertex u) const
        {
            if (!vertex_ok(u))
                return false;
            for (Vertex x : g_.neighbours(u))
                if (!vertex_ok(x))
                    return false;
            return true;
        }

        // Returns true when the search should stop.
        bool on_leaf()
        {
            for (Vertex v = 0; v < g_.size(); ++v)
                if (!satisfied(weight_[v], sum_[v], variant_))
                    throw InternalError("branch-and-bound reached an invalid complete assignment");
            switch (mode_) {
            case Mode::minimise:
                found.assign(1, weight_);
                limit_ = total_ - 1;
                return stop_at && total_ <= *stop_at;
            case Mode::first_within:
                found.assign(1, weight_);
                return true;
            case Mode::collect_equal:
                if (total_ == limit_) {
                    if (found.size() >= cap) {
                        capped = true;
                        return true;
                    }
                    found.push_back(weight_);
                }
                return false;
            }
            return true;
        }

        const Graph& g_;
        Variant variant_;
        std::vector<Vertex> order_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        Mode mode_ = Mode::minimise;
        std::int64_t limit_ = 0;
        std::int64_t total_ = 0;
        std::vector<int> weight_;
        std::vector<int> sum_;
        std::vector<int> free_;
        std::vector<int> need_;
    };

    std::vector<Vertex> degree_order(const Graph& g)
    {
        std::vector<Vertex> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        return order;
    }

    std::vector<Vertex> rank_order(const Graph& g)
    {
        std::vector<Vertex> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        return order;
    }

    void check_witness(const Graph& g, const SolveResult& r)
    {
        if (!verify(g, r.witness, r.variant).valid || total_weight(r.witness) != r.optimum)
            throw InternalError(std::string(engine_name(r.engine)) + " produced an invalid witness");
    }

} // namespace

SolveResult solve_exhaustive(const Graph& g, Variant variant, const SearchConfig& config)
{
    if (g.size() > config.exhaustive_vertex_limit)
        throw CapacityError("exhaustive search is limited to " + std::to_string(config.exhaustive_vertex_limit) +
                            " vertices, graph has " + std::to_string(g.size()));
    Exhaustive search(g, variant);
    search.run();
    SolveResult r;
    r.optimum = search.best;
    r.witness = WeightFunction(search.witness);
    r.nodes_explored = search.leaves;
    r.engine = Engine::exhaustive;
    r.variant = variant;
    r.proven = true;
    check_witness(g, r);
    return r;
}

SolveResult solve_path_dp(int m, Variant variant)
{
    if (m < 1)
        throw InvalidInput("path needs m >= 1");
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    // cost[i][a][b]: cheapest weight for vertices i+1..m-1 given w(i-1) = a and
    // w(i) = b, such that vertices i..m-1 end up satisfied. Vertex i's left
    // neighbour weight is a (0 when i = 0), its right neighbour is chosen next.
    using Table = std::array<std::array<int, 3>, 3>;
    std::vector<Table> cost(m);
    std::uint64_t cells = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            ++cells;
            cost[m - 1][a][b] = satisfied(b, a, variant) ? 0 : inf;
        }
    for (int i = m - 2; i >= 0; --i)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                int best = inf;
                for (int c = 0; c < 3; ++c) {
                    ++cells;
                    if (satisfied(b, a + c, variant) && cost[i + 1][b][c] < inf)
                        best = std::min(best, c + cost[i + 1][b][c]);
                }
                cost[i][a][b] = best;
            }

    // At i = 0 there is no left neighbour, so a = 0.
    int optimum = inf;
    for (int b = 0; b < 3; ++b)
        if (cost[0][0][b] < inf)
            optimum = std::min(optimum, b + cost[0][0][b]);
    if (optimum >= inf)
        throw InternalError("path dynamic program found no feasible assignment");

    // Forward pass choosing the smallest feasible weight at each position.
    std::vector<int> w(m);
    int remaining = optimum;
    int a = 0;
    for (int b = 0; b < 3; ++b)
        if (cost[0][0][b] < inf && b + cost[0][0][b] == remaining) {
            w[0] = b;
            break;
        }
    remaining -= w[0];
    for (int i = 0; i + 1 < m; ++i) {
        const int b = w[i];
        for (int c = 0; c < 3; ++c)
            if (satisfied(b, a + c, variant) && cost[i + 1][b][c] < inf && c + cost[i + 1][b][c] == remaining) {
                w[i + 1] = c;
                break;
            }
        remaining -= w[i + 1];
        a = b;
    }

    SolveResult r;
    r.optimum = optimum;
    r.witness = WeightFunction(std::move(w));
    r.nodes_explored = cells;
    r.engine = Engine::path_dp;
    r.variant = variant;
    r.proven = true;
    check_witness(build_path(m, std::numeric_limits<std::int64_t>::max()), r);
    return r;
}

SolveResult solve_branch_bound(const Graph& g, Variant variant, const SearchConfig& config)
{
    SolveResult r;
    r.engine = Engine::branch_bound;
    r.variant = variant;

    // All-ones is valid for both variants since no vertex has weight zero.
    WeightFunction incumbent(std::vector<int>(g.size(), 1));
    if (config.seed) {
        if (config.seed->size() != g.size())
            throw InvalidInput("seed witness does not match the graph size");
        if (!verify(g, *config.seed, variant).valid)
            throw InvalidInput("seed witness is not a valid " + std::string(variant_name(variant)) + " function");
        if (total_weight(*config.seed) < total_weight(incumbent))
            incumbent = *config.seed;
    }

    BranchAndBound search(g, variant, degree_order(g), config.node_budget);
    search.stop_at = config.weight_cutoff;
    const std::int64_t root_bound = search.lower_bound();
    const bool cut_off = config.weight_cutoff && total_weight(incumbent) <= *config.weight_cutoff;
    const bool completed = cut_off || search.run(BranchAndBound::Mode::minimise, total_weight(incumbent) - 1);
    if (!search.found.empty())
        incumbent = WeightFunction(search.found.front());
    r.nodes_explored = search.nodes();
    r.optimum = total_weight(incumbent);
    const bool stopped_early = config.weight_cutoff && r.optimum <= *config.weight_cutoff;
    r.proven = completed && (!stopped_early || r.optimum <= root_bound);
    r.witness = incumbent;

    if (r.proven) {
        // Second pass: lexicographically first function of optimal weight.
        const std::uint64_t left = config.node_budget > r.nodes_explored ? config.node_budget - r.nodes_explored : 0;
        BranchAndBound lex(g, variant, rank_order(g), left);
        if (lex.run(BranchAndBound::Mode::first_within, r.optimum) && !lex.found.empty())
            r.witness = WeightFunction(lex.found.front());
        r.nodes_explored += lex.nodes();
    }
    check_witness(g, r);
    return r;
}

Enumeration enumerate_optima(const Graph& g, Variant variant, const SearchConfig& config,
                             std::optional<std::int64_t> optimum)
{
    Enumeration out;
    std::uint64_t budget = config.node_budget;
    if (!optimum) {
        const SolveResult r = solve_branch_bound(g, variant, config);
        out.nodes_explored = r.nodes_explored;
        if (!r.proven) {
            out.optimum = r.optimum;
            return out;
        }
        optimum = r.optimum;
        budget = budget > r.nodes_explored ? budget - r.nodes_explored : 0;
    }
    out.optimum = *optimum;
    BranchAndBound search(g, variant, rank_order(g), budget);
    search.cap = config.solution_cap;
    const bool finished = search.run(BranchAndBound::Mode::collect_equal, *optimum);
    out.nodes_explored += search.nodes();
    out.complete = finished && !search.capped;
    for (auto& w : search.found)
        out.optima.emplace_back(std::move(w));
    return out;
}

Engine default_engine(const Graph& g, const SearchConfig& config)
{
    if (g.family() == Family::path || (g.family() == Family::sierpinski && g.param_n() == 2))
        return Engine::path_dp;
    if (g.size() <= config.exhaustive_vertex_limit)
        return Engine::exhaustive;
    return Engine::branch_bound;
}

SolveResult solve(const Graph& g, Variant variant, Engine engine, const SearchConfig& config)
{
    switch (engine) {
    case Engine::exhaustive:
        return solve_exhaustive(g, variant, config);
    case Engine::path_dp: {
        // The engine needs a path in line order: vertex v adjacent to v+1 only.
        bool is_path = g.size() >= 1 && g.edge_count() == g.size() - 1;
        for (Vertex v = 0; is_path && v + 1 < g.size(); ++v)
            is_path = g.adjacent(v, v + 1);
        if (!is_path)
            throw InvalidInput("path-dp needs a path graph whose vertices are in line order");
        SolveResult r = solve_path_dp(g.size(), variant);
        return r;
    }
    case Engine::branch_bound:
        return solve_branch_bound(g, variant, config);
    }
    throw InternalError("unhandled engine");
}

} // namespace italdom
