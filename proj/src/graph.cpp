#include "italdom/graph.hpp"

#include "italdom/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <unordered_set>

namespace italdom {

std::string VertexWord::label(int n) const
{
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (n > 9 && i > 0)
            out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

void check_word(const VertexWord& w, int n)
{
    if (n < 1)
        throw InvalidInput("alphabet size must be positive, got " + std::to_string(n));
    if (w.size() == 0)
        throw InvalidInput("empty vertex word");
    for (int letter : w.letters())
        if (letter < 1 || letter > n)
            throw InvalidInput("letter " + std::to_string(letter) + " outside {1,...," + std::to_string(n) + "}");
}

std::int64_t word_rank(const VertexWord& w, int n)
{
    check_word(w, n);
    std::int64_t rank = 0;
    for (int letter : w.letters()) {
        if (rank > (std::numeric_limits<std::int64_t>::max() - (n - 1)) / n)
            throw InvalidInput("word rank overflows 64 bits");
        rank = rank * n + (letter - 1);
    }
    return rank;
}

VertexWord rank_word(std::int64_t rank, int n, int t)
{
    if (n < 1 || t < 1)
        throw InvalidInput("rank_word needs n >= 1 and t >= 1");
    const std::int64_t count = checked_power(n, t, std::numeric_limits<std::int64_t>::max());
    if (rank < 0 || rank >= count)
        throw InvalidInput("rank " + std::to_string(rank) + " outside [0, " + std::to_string(count) + ")");
    std::vector<int> letters(t);
    for (int i = t - 1; i >= 0; --i) {
        letters[i] = static_cast<int>(rank % n) + 1;
        rank /= n;
    }
    return VertexWord(std::move(letters));
}

bool adjacent_by_rule(const VertexWord& u, const VertexWord& v, int n)
{
    if (u.size() != v.size())
        throw InvalidInput("words of different length: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    check_word(u, n);
    check_word(v, n);

    const std::size_t t = u.size();
    for (std::size_t i = 0; i < t; ++i) {
        // (i) equal prefix before i
        bool prefix = true;
        for (std::size_t j = 0; j < i && prefix; ++j)
            prefix = u[j] == v[j];
        if (!prefix)
            return false;
        // (ii) differ at i
        if (u[i] == v[i])
            continue;
        // (iii) swapped tails after i
        for (std::size_t j = i + 1; j < t; ++j)
            if (u[j] != v[i] || v[j] != u[i])
                return false;
        return true;
    }
    return false;
}

std::int64_t checked_power(int n, int t, std::int64_t limit)
{
    if (n < 1 || t < 0)
        throw InvalidInput("checked_power needs n >= 1 and t >= 0");
    std::int64_t p = 1;
    for (int i = 0; i < t; ++i) {
        if (p > limit / n)
            throw CapacityError(std::to_string(n) + "^" + std::to_string(t) + " exceeds the vertex limit of " +
                                std::to_string(limit));
        p *= n;
    }
    return p;
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::sierpinski: return "sierpinski";
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::custom: return "custom";
    }
    return "custom";
}

Family parse_family(std::string_view name)
{
    if (name == "sierpinski")
        return Family::sierpinski;
    if (name == "complete")
        return Family::complete;
    if (name == "path")
        return Family::path;
    if (name == "custom")
        return Family::custom;
    throw InvalidInput("unknown graph family '" + std::string(name) + "'");
}

std::int64_t default_capacity()
{
    static const std::int64_t value = [] {
        if (const char* env = std::getenv("ITALDOM_MAX_VERTICES")) {
            char* end = nullptr;
            const long long parsed = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0)
                return static_cast<std::int64_t>(parsed);
        }
        return std::int64_t{1'000'000};
    }();
    return value;
}

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<std::string> labels, Family family, int n,
             int t)
    : adjacency_(vertex_count < 0 ? 0 : vertex_count), labels_(std::move(labels)), family_(family), n_(n), t_(t)
{
    if (vertex_count < 0)
        throw InvalidInput("negative vertex count");
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != vertex_count)
            throw InvalidInput("label count " + std::to_string(labels_.size()) + " does not match vertex count " +
                               std::to_string(vertex_count));
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size())
            throw InvalidInput("vertex labels are not unique");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint out of range");
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += static_cast<std::int64_t>(list.size());
    }
    edge_count_ /= 2;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& list : adjacency_)
        best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    if (u < 0 || u >= size())
        return false;
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

bool Graph::connected() const
{
    if (size() == 0)
        return true;
    std::vector<char> seen(size(), 0);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex v : adjacency_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push(v);
            }
    }
    return reached == size();
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const
{
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Vertex SierpinskiGraph::vertex(const VertexWord& w) const
{
    if (static_cast<int>(w.size()) != t_)
        throw InvalidInput("word length " + std::to_string(w.size()) + " does not match t = " + std::to_string(t_));
    return static_cast<Vertex>(word_rank(w, n_));
}

namespace {

    std::vector<Edge> clique_edges(int n)
    {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return edges;
    }

    std::vector<std::string> word_labels(int n, int t, std::int64_t count)
    {
        std::vector<std::string> labels;
        labels.reserve(count);
        for (std::int64_t r = 0; r < count; ++r)
            labels.push_back(rank_word(r, n, t).label(n));
        return labels;
    }

} // namespace

SierpinskiGraph build_sierpinski(int n, int t, std::int64_t capacity)
{
    if (n < 2)
        throw InvalidInput("S(K_n,t) needs n >= 2, got n = " + std::to_string(n));
    if (t < 1)
        throw InvalidInput("S(K_n,t) needs t >= 1, got t = " + std::to_string(t));
    const std::int64_t count = checked_power(n, t, capacity);

    std::vector<Edge> edges = clique_edges(n);
    std::int64_t block = n; // vertices in S(K_n, level)
    for (int level = 2; level <= t; ++level) {
        std::vector<Edge> next;
        next.reserve(edges.size() * n + n * (n - 1) / 2);
        for (int x = 0; x < n; ++x) {
            const auto offset = static_cast<Vertex>(x * block);
            for (auto [u, v] : edges)
                next.emplace_back(u + offset, v + offset);
        }
        // rank of the constant word y^(level-1) inside a block
        const std::int64_t repunit = (block - 1) / (n - 1);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                next.emplace_back(static_cast<Vertex>(x * block + y * repunit),
                                  static_cast<Vertex>(y * block + x * repunit));
        edges = std::move(next);
        block *= n;
    }
    return {n, t,
            Graph(static_cast<int>(count), edges, word_labels(n, t, count), Family::sierpinski, n, t)};
}

std::vector<Edge> sierpinski_edges_by_rule(int n, int t)
{
    const auto count = static_cast<Vertex>(checked_power(n, t, default_capacity()));
    std::vector<VertexWord> words;
    words.reserve(count);
    for (Vertex r = 0; r < count; ++r)
        words.push_back(rank_word(r, n, t));
    std::vector<Edge> edges;
    for (Vertex u = 0; u < count; ++u)
        for (Vertex v = u + 1; v < count; ++v)
            if (adjacent_by_rule(words[u], words[v], n))
                edges.emplace_back(u, v);
    return edges;
}

Graph build_complete(int n, std::int64_t capacity)
{
    if (n < 1)
        throw InvalidInput("complete graph needs n >= 1");
    if (n > capacity)
        throw CapacityError("K_" + std::to_string(n) + " exceeds the vertex limit of " + std::to_string(capacity));
    const auto edges = clique_edges(n);
    return {n, edges, {}, Family::complete, n, 0};
}

Graph build_path(int m, std::int64_t capacity)
{
    if (m < 1)
        throw InvalidInput("path needs m >= 1");
    if (m > capacity)
        throw CapacityError("P_" + std::to_string(m) + " exceeds the vertex limit of " + std::to_string(capacity));
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < m; ++v)
        edges.emplace_back(v, v + 1);
    return {m, edges, {}, Family::path, m, 0};
}

std::vector<VertexWord> extreme_vertices(const SierpinskiGraph& g)
{
    std::vector<VertexWord> out;
    for (int letter = 1; letter <= g.n(); ++letter)
        out.emplace_back(std::vector<int>(g.t(), letter));
    return out;
}

} // namespace italdom
