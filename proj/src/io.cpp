#include "italdom/io.hpp"

#include "italdom/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace italdom {

json graph_to_json(const Graph& g)
{
    json doc;
    doc["family"] = std::string(family_name(g.family()));
    if (g.family() != Family::custom)
        doc["n"] = g.param_n();
    if (g.family() == Family::sierpinski)
        doc["t"] = g.param_t();
    json vertices = json::array();
    for (Vertex v = 0; v < g.size(); ++v)
        vertices.push_back(g.label(v));
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    return doc;
}

Graph graph_from_json(const json& doc)
{
    try {
        const Family family = parse_family(doc.at("family").get<std::string>());
        const auto labels = doc.at("vertices").get<std::vector<std::string>>();
        if (labels.size() > static_cast<std::size_t>(std::numeric_limits<int>::max()))
            throw CapacityError("too many vertices");
        const int count = static_cast<int>(labels.size());
        std::vector<Edge> edges;
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidInput("edge entries must be [u, v] pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        int n = 0;
        int t = 0;
        if (family != Family::custom)
            n = doc.at("n").get<int>();
        if (family == Family::sierpinski) {
            t = doc.at("t").get<int>();
            if (n < 2 || t < 1 || checked_power(n, t, default_capacity()) != count)
                throw InvalidInput("Sierpinski document does not carry n^t vertices");
        }
        const bool numbered = family == Family::complete || family == Family::path;
        return {count, edges, numbered ? std::vector<std::string>{} : labels, family, n, t};
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed graph document: ") + e.what());
    }
}

std::string canonical_graph_bytes(const Graph& g)
{
    return graph_to_json(g).dump();
}

std::string sha256_hex(const std::string& bytes)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1)
        throw InternalError("SHA-256 digest failed");
    std::ostringstream out;
    out << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i)
        out << std::setw(2) << static_cast<int>(digest[i]);
    return out.str();
}

std::string graph_hash(const Graph& g)
{
    return sha256_hex(canonical_graph_bytes(g));
}

json weights_to_json(const Graph& g, const WeightFunction& f)
{
    if (f.size() != g.size())
        throw InvalidInput("weight function size does not match the graph");
    json doc;
    doc["graph_hash"] = graph_hash(g);
    doc["weights"] = std::vector<int>(f.values().begin(), f.values().end());
    return doc;
}

WeightFunction weights_from_json(const json& doc, const Graph& g)
{
    try {
        const auto hash = doc.at("graph_hash").get<std::string>();
        if (hash != graph_hash(g))
            throw InvalidInput("weight file graph_hash " + hash + " does not match the graph (" + graph_hash(g) + ")");
        WeightFunction f(doc.at("weights").get<std::vector<int>>());
        if (f.size() != g.size())
            throw InvalidInput("weight file has " + std::to_string(f.size()) + " entries, graph has " +
                               std::to_string(g.size()) + " vertices");
        return f;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed weight document: ") + e.what());
    }
}

json report_to_json(const Graph& g, const VerificationReport& report, Variant variant)
{
    json doc;
    doc["variant"] = std::string(variant_name(variant));
    doc["valid"] = report.valid;
    doc["total_weight"] = report.total_weight;
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"vertex", v.vertex},
                              {"label", g.label(v.vertex)},
                              {"neighbor_sum", v.neighbour_sum},
                              {"kind", std::string(violation_kind_name(v.kind))}});
    doc["violations"] = std::move(violations);
    return doc;
}

json solve_result_to_json(const SolveResult& r)
{
    return {{"variant", std::string(variant_name(r.variant))},
            {"engine", std::string(engine_name(r.engine))},
            {"optimum", r.optimum},
            {"proven", r.proven},
            {"nodes_explored", r.nodes_explored},
            {"witness", std::vector<int>(r.witness.values().begin(), r.witness.values().end())}};
}

namespace {

    std::string quoted(const std::string& s)
    {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + '"';
    }

} // namespace

std::string to_dot(const Graph& g, const std::optional<WeightFunction>& weights)
{
    if (weights && weights->size() != g.size())
        throw InvalidInput("weight function size does not match the graph");
    static constexpr std::array<const char*, 3> fill{"white", "lightblue", "red"};

    std::ostringstream out;
    out << "graph " << family_name(g.family()) << " {\n";
    if (weights)
        out << "  node [style=filled];\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "  " << quoted(g.label(v));
        if (weights)
            out << " [fillcolor=" << fill[(*weights)[v]] << ", xlabel=\"" << (*weights)[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << quoted(g.label(u)) << " -- " << quoted(g.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw InvalidInput("write to '" + path + "' failed");
}

} // namespace italdom
