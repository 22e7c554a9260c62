#include "italdom/constructions.hpp"
#include "italdom/errors.hpp"
#include "italdom/solver.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace italdom;

namespace {

void check_result(const Graph& g, const SolveResult& r)
{
    CHECK(verify(g, r.witness, r.variant).valid);
    CHECK(total_weight(r.witness) == r.optimum);
}

} // namespace

TEST_CASE("solve_exhaustive examples")
{
    const auto p4 = solve_exhaustive(build_path(4), Variant::italian);
    CHECK(p4.optimum == 3);
    CHECK(p4.proven);
    CHECK(p4.nodes_explored == 81);

    // brute force over 3^4: no weight-1 function dominates K_4
    const auto k4 = build_complete(4);
    CHECK(oracle::brute_force(k4, false).optimum == 2);
    CHECK(solve_exhaustive(k4, Variant::italian).optimum == 2);

    const auto s32 = build_sierpinski(3, 2);
    const auto r = solve_exhaustive(s32, Variant::italian);
    CHECK(r.optimum == 5);
    check_result(s32, r);

    SearchConfig small;
    small.exhaustive_vertex_limit = 8;
    CHECK_THROWS_AS((void)solve_exhaustive(s32, Variant::italian, small), CapacityError);
    CHECK_THROWS_AS((void)solve_exhaustive(build_path(17), Variant::italian), CapacityError);
}

TEST_CASE("exhaustive witness is the lexicographically smallest optimum")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto g = oracle::random_connected(rng, n, 0.3);
        for (bool perfect : {false, true}) {
            const auto brute = oracle::brute_force(g, perfect);
            const auto r = solve_exhaustive(g, perfect ? Variant::perfect : Variant::italian);
            REQUIRE(r.optimum == brute.optimum);
            REQUIRE(std::vector<int>(r.witness.values().begin(), r.witness.values().end()) == brute.optima.front());
        }
    }
}

TEST_CASE("solve_path_dp")
{
    CHECK(solve_path_dp(1, Variant::italian).optimum == 1);
    CHECK(solve_path_dp(7, Variant::italian).optimum == 4);

    const auto p12 = solve_exhaustive(build_path(12), Variant::perfect);
    CHECK(p12.optimum == 7);
    const auto dp12 = solve_path_dp(12, Variant::perfect);
    CHECK(dp12.optimum == 7);
    CHECK(dp12.witness == p12.witness);

    for (int m = 1; m <= 64; ++m)
        for (auto variant : {Variant::italian, Variant::perfect}) {
            const auto r = solve_path_dp(m, variant);
            REQUIRE(r.optimum == (m + 2) / 2);
            check_result(build_path(m), r);
        }

    CHECK_THROWS_AS((void)solve_path_dp(0, Variant::italian), InvalidInput);
}

TEST_CASE("solve_branch_bound examples")
{
    const auto s33 = build_sierpinski(3, 3);
    const auto r33 = solve_branch_bound(s33, Variant::italian);
    CHECK(r33.optimum == 12);
    CHECK(r33.proven);
    check_result(s33, r33);

    const auto s42 = build_sierpinski(4, 2);
    const auto r42 = solve_branch_bound(s42, Variant::italian);
    CHECK(r42.optimum == 7);
    CHECK(r42.proven);
    // same witness as the exhaustive engine
    CHECK(r42.witness == solve_exhaustive(s42, Variant::italian).witness);
}

TEST_CASE("branch-and-bound agrees with exhaustive on random connected graphs")
{
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const auto g = oracle::random_connected(rng, n, 0.2);
        for (auto variant : {Variant::italian, Variant::perfect}) {
            const auto ex = solve_exhaustive(g, variant);
            const auto bb = solve_branch_bound(g, variant);
            REQUIRE(bb.proven);
            REQUIRE(bb.optimum == ex.optimum);
            REQUIRE(bb.witness == ex.witness);
            check_result(g, bb);
        }
    }
}

TEST_CASE("budget exhaustion is flagged, not thrown")
{
    const auto g = build_sierpinski(3, 3);
    SearchConfig tiny;
    tiny.node_budget = 10;
    const auto r = solve_branch_bound(g, Variant::italian, tiny);
    CHECK_FALSE(r.proven);
    CHECK(r.nodes_explored <= 11);
    check_result(g, r);
}

TEST_CASE("seeded incumbent and cutoff")
{
    const auto s33 = build_sierpinski(3, 3);
    SearchConfig seeded;
    seeded.seed = construct_level3plus(s33);
    const auto plain = solve_branch_bound(s33, Variant::italian);
    const auto r = solve_branch_bound(s33, Variant::italian, seeded);
    CHECK(r.proven);
    CHECK(r.optimum == 12);
    CHECK(r.witness == plain.witness);
    CHECK(r.nodes_explored <= plain.nodes_explored);

    const auto s42 = build_sierpinski(4, 2);
    SearchConfig seeded42;
    seeded42.seed = construct_level2(4);
    const auto r42 = solve_branch_bound(s42, Variant::perfect, seeded42);
    CHECK(r42.proven);
    CHECK(r42.optimum == 7);
    const auto i42 = solve_branch_bound(s42, Variant::italian, seeded42);
    CHECK(i42.proven);
    CHECK(i42.optimum == 7);

    SearchConfig bad;
    bad.seed = WeightFunction::zeros(s33.size());
    CHECK_THROWS_AS((void)solve_branch_bound(s33, Variant::italian, bad), InvalidInput);

    // a cutoff met by the seed returns at once; 12 is above the root bound
    SearchConfig cut = seeded;
    cut.weight_cutoff = 12;
    const auto c = solve_branch_bound(s33, Variant::italian, cut);
    CHECK(c.optimum == 12);
    CHECK_FALSE(c.proven);
    CHECK(c.nodes_explored == 0);
}

TEST_CASE("enumerate_optima")
{
    // K_3: the three weight-2 singletons and the three (1,1,0) patterns
    const auto k3 = build_complete(3);
    const auto brute = oracle::brute_force(k3, false);
    CHECK(brute.optimum == 2);
    CHECK(brute.optima.size() == 6);
    const auto e3 = enumerate_optima(k3, Variant::italian);
    CHECK(e3.complete);
    CHECK(e3.optimum == 2);
    REQUIRE(e3.optima.size() == brute.optima.size());
    for (std::size_t i = 0; i < brute.optima.size(); ++i)
        CHECK(e3.optima[i] == WeightFunction(brute.optima[i]));

    const auto e2 = enumerate_optima(build_path(2), Variant::italian);
    CHECK(e2.optima == std::vector<WeightFunction>{WeightFunction({0, 2}), WeightFunction({1, 1}),
                                                   WeightFunction({2, 0})});

    const auto e1 = enumerate_optima(build_path(1), Variant::italian);
    CHECK(e1.optima == std::vector<WeightFunction>{WeightFunction({1})});

    SearchConfig capped;
    capped.solution_cap = 2;
    const auto partial = enumerate_optima(k3, Variant::italian, capped);
    CHECK_FALSE(partial.complete);
    CHECK(partial.optima.size() == 2);
}

TEST_CASE("enumeration matches brute force on random graphs")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const auto g = oracle::random_connected(rng, n, 0.3);
        for (bool perfect : {false, true}) {
            const auto brute = oracle::brute_force(g, perfect);
            const auto e = enumerate_optima(g, perfect ? Variant::perfect : Variant::italian);
            REQUIRE(e.complete);
            REQUIRE(e.optimum == brute.optimum);
            REQUIRE(e.optima.size() == brute.optima.size());
            for (std::size_t i = 0; i < e.optima.size(); ++i)
                REQUIRE(e.optima[i] == WeightFunction(brute.optima[i]));
        }
    }
}

TEST_CASE("engine dispatch")
{
    CHECK(default_engine(build_path(30)) == Engine::path_dp);
    CHECK(default_engine(build_sierpinski(2, 5)) == Engine::path_dp);
    CHECK(default_engine(build_complete(5)) == Engine::exhaustive);
    CHECK(default_engine(build_sierpinski(3, 3)) == Engine::branch_bound);

    const auto r = solve(build_sierpinski(2, 4), Variant::italian, Engine::path_dp);
    CHECK(r.optimum == 9);
    CHECK_THROWS_AS((void)solve(build_complete(4), Variant::italian, Engine::path_dp), InvalidInput);
    CHECK(parse_engine("branch-bound") == Engine::branch_bound);
    CHECK_THROWS_AS((void)parse_engine("ilp"), InvalidInput);
}
