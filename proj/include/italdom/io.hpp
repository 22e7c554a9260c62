#pragma once

#include "italdom/domination.hpp"
#include "italdom/graph.hpp"
#include "italdom/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace italdom {

using json = nlohmann::json;

/// Canonical graph document: family, n, t (Sierpinski only), vertex labels in
/// rank order, and [u,v] edges with u < v in lexicographic order.
[[nodiscard]] json graph_to_json(const Graph& g);

/// Rebuilds a graph from its document. Edges are validated and normalised;
/// a Sierpinski document must carry n^t vertices.
[[nodiscard]] Graph graph_from_json(const json& doc);

/// Compact serialisation used for hashing; keys sorted, no whitespace.
[[nodiscard]] std::string canonical_graph_bytes(const Graph& g);

/// Lower-case hex SHA-256 of canonical_graph_bytes(g).
[[nodiscard]] std::string graph_hash(const Graph& g);

[[nodiscard]] std::string sha256_hex(const std::string& bytes);

/// {"graph_hash", "weights"}.
[[nodiscard]] json weights_to_json(const Graph& g, const WeightFunction& f);

/// Parses a weight document and checks its hash against g. Throws
/// InvalidInput on a hash or size mismatch.
[[nodiscard]] WeightFunction weights_from_json(const json& doc, const Graph& g);

[[nodiscard]] json report_to_json(const Graph& g, const VerificationReport& report, Variant variant);

[[nodiscard]] json solve_result_to_json(const SolveResult& r);

/// Undirected DOT; when weights are supplied vertices are filled by weight.
[[nodiscard]] std::string to_dot(const Graph& g, const std::optional<WeightFunction>& weights = std::nullopt);

[[nodiscard]] json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

} // namespace italdom
