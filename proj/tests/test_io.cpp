#include "italdom/constructions.hpp"
#include "italdom/errors.hpp"
#include "italdom/io.hpp"

#include <doctest.h>

#include <random>

using namespace italdom;

TEST_CASE("graph JSON layout")
{
    const auto g = build_sierpinski(3, 2);
    const json doc = graph_to_json(g);
    CHECK(doc["family"] == "sierpinski");
    CHECK(doc["n"] == 3);
    CHECK(doc["t"] == 2);
    CHECK(doc["vertices"].size() == 9);
    CHECK(doc["vertices"][0] == "11");
    CHECK(doc["vertices"][8] == "33");
    REQUIRE(doc["edges"].size() == 12);
    CHECK(doc["edges"][0] == json::array({0, 1}));
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        CHECK(doc["edges"][i][0] < doc["edges"][i][1]);
        if (i > 0)
            CHECK(doc["edges"][i - 1] < doc["edges"][i]);
    }

    const json path = graph_to_json(build_path(3));
    CHECK(path["family"] == "path");
    CHECK(path["n"] == 3);
    CHECK_FALSE(path.contains("t"));
}

TEST_CASE("graph JSON round trip preserves the hash")
{
    std::mt19937 rng(3);
    for (int n = 2; n <= 4; ++n)
        for (int t = 1; t <= 3; ++t) {
            const auto g = build_sierpinski(n, t);
            const Graph back = graph_from_json(json::parse(graph_to_json(g).dump(2)));
            CHECK(back.edges() == g.graph().edges());
            CHECK(graph_hash(back) == graph_hash(g));
        }
    for (const Graph& g : {build_complete(5), build_path(9)}) {
        const Graph back = graph_from_json(graph_to_json(g));
        CHECK(canonical_graph_bytes(back) == canonical_graph_bytes(g));
    }
}

TEST_CASE("canonical bytes are stable and distinguish graphs")
{
    CHECK(canonical_graph_bytes(build_sierpinski(3, 2)) == canonical_graph_bytes(build_sierpinski(3, 2)));
    CHECK(graph_hash(build_sierpinski(3, 2)) != graph_hash(build_sierpinski(2, 3)));
    CHECK(graph_hash(build_path(8)) != graph_hash(build_sierpinski(2, 3)));
    CHECK(graph_hash(build_path(1)).size() == 64);
    // FIPS 180-2 test vector
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("malformed graph documents")
{
    CHECK_THROWS_AS((void)graph_from_json(json::parse(R"({"family":"torus","vertices":[],"edges":[]})")),
                    InvalidInput);
    CHECK_THROWS_AS((void)graph_from_json(json::parse(R"({"family":"custom","vertices":["a"],"edges":[[0,0]]})")),
                    InvalidInput);
    CHECK_THROWS_AS((void)graph_from_json(json::parse(R"({"family":"custom","vertices":["a","b"],"edges":[[0]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(
        (void)graph_from_json(json::parse(R"({"family":"sierpinski","n":3,"t":2,"vertices":["a"],"edges":[]})")),
        InvalidInput);
    CHECK_THROWS_AS((void)graph_from_json(json::parse(R"({"vertices":[]})")), InvalidInput);

    const auto custom =
        graph_from_json(json::parse(R"({"family":"custom","vertices":["a","b","c"],"edges":[[1,2],[0,1]]})"));
    CHECK(custom.edge_count() == 2);
    CHECK(custom.label(2) == "c");
}

TEST_CASE("weight documents")
{
    const auto g = build_sierpinski(3, 2);
    const auto f = construct_level2(3);
    const json doc = weights_to_json(g, f);
    CHECK(doc["graph_hash"] == graph_hash(g));
    CHECK(weights_from_json(doc, g) == f);

    const auto other = build_sierpinski(2, 3);
    CHECK_THROWS_AS((void)weights_from_json(doc, other), InvalidInput);

    json wrong_size = doc;
    wrong_size["weights"].push_back(0);
    CHECK_THROWS_AS((void)weights_from_json(wrong_size, g), InvalidInput);

    json bad_value = doc;
    bad_value["weights"][0] = 3;
    CHECK_THROWS_AS((void)weights_from_json(bad_value, g), InvalidInput);
}

TEST_CASE("report and solve-result JSON")
{
    const auto k3 = build_complete(3);
    const auto report = verify_idf(k3, WeightFunction::zeros(3));
    const json doc = report_to_json(k3, report, Variant::italian);
    CHECK(doc["valid"] == false);
    CHECK(doc["violations"].size() == 3);
    CHECK(doc["violations"][0]["kind"] == "deficit");
    CHECK(doc["violations"][0]["neighbor_sum"] == 0);

    SolveResult r;
    r.optimum = 2;
    r.witness = WeightFunction({2, 0, 0});
    r.engine = Engine::branch_bound;
    r.variant = Variant::perfect;
    r.proven = true;
    r.nodes_explored = 17;
    const json s = solve_result_to_json(r);
    CHECK(s.dump() ==
          R"({"engine":"branch-bound","nodes_explored":17,"optimum":2,"proven":true,"variant":"perfect","witness":[2,0,0]})");
}

TEST_CASE("DOT export")
{
    const auto g = build_sierpinski(3, 1);
    const std::string plain = to_dot(g);
    CHECK(plain.find("graph sierpinski {") == 0);
    CHECK(plain.find("\"1\" -- \"2\";") != std::string::npos);
    CHECK(plain.find("fillcolor") == std::string::npos);

    const std::string coloured = to_dot(g, construct_kn(3));
    CHECK(coloured.find("\"1\" [fillcolor=red") != std::string::npos);
    CHECK(coloured.find("\"2\" [fillcolor=white") != std::string::npos);
    CHECK_THROWS_AS((void)to_dot(g, WeightFunction::zeros(2)), InvalidInput);
}
