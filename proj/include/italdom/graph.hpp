#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace italdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A word of length t over the alphabet {1,...,n}; the identity of a vertex
/// of S(K_n,t). Ordering is lexicographic.
class VertexWord {
public:
    VertexWord() = default;
    VertexWord(std::initializer_list<int> letters) : letters_(letters) {}
    explicit VertexWord(std::vector<int> letters) : letters_(std::move(letters)) {}

    [[nodiscard]] std::span<const int> letters() const { return letters_; }
    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return letters_[i]; }

    /// Concatenated digits for n <= 9, comma separated otherwise.
    [[nodiscard]] std::string label(int n) const;

    friend auto operator<=>(const VertexWord&, const VertexWord&) = default;
    friend bool operator==(const VertexWord&, const VertexWord&) = default;

private:
    std::vector<int> letters_;
};

/// Throws InvalidInput unless every letter of w lies in {1,...,n}.
void check_word(const VertexWord& w, int n);

/// Base-n positional rank of w (letter k maps to digit k-1, first letter most
/// significant).
[[nodiscard]] std::int64_t word_rank(const VertexWord& w, int n);

/// Inverse of word_rank for words of length t.
[[nodiscard]] VertexWord rank_word(std::int64_t rank, int n, int t);

/// The three-clause adjacency rule of S(K_n,t), evaluated directly on words.
[[nodiscard]] bool adjacent_by_rule(const VertexWord& u, const VertexWord& v, int n);

/// n^t, or a CapacityError if it exceeds limit.
[[nodiscard]] std::int64_t checked_power(int n, int t, std::int64_t limit);

enum class Family { sierpinski, complete, path, custom };

[[nodiscard]] std::string_view family_name(Family f);
[[nodiscard]] Family parse_family(std::string_view name);

/// Default vertex limit for generated graphs. Reads ITALDOM_MAX_VERTICES once,
/// falling back to 10^6.
[[nodiscard]] std::int64_t default_capacity();

/// Immutable undirected, loop-free graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints throw InvalidInput. Labels must be empty or one
    /// unique string per vertex.
    Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels = {},
          Family family = Family::custom, int n = 0, int t = 0);

    [[nodiscard]] int size() const { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] std::int64_t edge_count() const { return edge_count_; }
    [[nodiscard]] std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] bool connected() const;

    /// Edges (u,v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] bool has_labels() const { return !labels_.empty(); }
    /// Stored label, or the decimal rank when the graph is unlabelled.
    [[nodiscard]] std::string label(Vertex v) const;

    [[nodiscard]] Family family() const { return family_; }
    /// Alphabet size (sierpinski), clique order (complete) or path order.
    [[nodiscard]] int param_n() const { return n_; }
    /// Level; zero for non-Sierpinski families.
    [[nodiscard]] int param_t() const { return t_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::string> labels_;
    std::int64_t edge_count_ = 0;
    Family family_ = Family::custom;
    int n_ = 0;
    int t_ = 0;
};

/// S(K_n,t): vertices are words indexed by rank.
class SierpinskiGraph {
public:
    SierpinskiGraph(int n, int t, Graph graph) : n_(n), t_(t), graph_(std::move(graph)) {}

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int t() const { return t_; }
    [[nodiscard]] const Graph& graph() const { return graph_; }
    [[nodiscard]] int size() const { return graph_.size(); }
    [[nodiscard]] VertexWord word(Vertex v) const { return rank_word(v, n_, t_); }
    [[nodiscard]] Vertex vertex(const VertexWord& w) const;

    operator const Graph&() const { return graph_; } // NOLINT(google-explicit-constructor)

private:
    int n_;
    int t_;
    Graph graph_;
};

/// Recursive construction: n relabelled copies of S(K_n,t-1) plus the bridge
/// edges {x y^(t-1), y x^(t-1)}.
[[nodiscard]] SierpinskiGraph build_sierpinski(int n, int t, std::int64_t capacity = default_capacity());

/// Edge set of S(K_n,t) by testing adjacent_by_rule on every pair. Quadratic;
/// test oracle only.
[[nodiscard]] std::vector<Edge> sierpinski_edges_by_rule(int n, int t);

[[nodiscard]] Graph build_complete(int n, std::int64_t capacity = default_capacity());
[[nodiscard]] Graph build_path(int m, std::int64_t capacity = default_capacity());

/// The n constant words in alphabet order.
[[nodiscard]] std::vector<VertexWord> extreme_vertices(const SierpinskiGraph& g);

} // namespace italdom
