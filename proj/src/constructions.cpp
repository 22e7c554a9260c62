#include "italdom/constructions.hpp"

#include "italdom/errors.hpp"

#include <limits>
#include <string>

namespace italdom {

std::string_view regime_name(Regime r)
{
    switch (r) {
    case Regime::kn: return "Kn";
    case Regime::level2: return "Level2";
    case Regime::level3plus: return "Level3Plus";
    case Regime::path: return "Path";
    }
    return "?";
}

Regime regime_for(int n, int t)
{
    if (n < 2 || t < 1)
        throw OutOfRegime("S(K_n,t) needs n >= 2 and t >= 1, got n = " + std::to_string(n) + ", t = " +
                          std::to_string(t));
    if (n == 2)
        return Regime::path;
    if (t == 1)
        return Regime::kn;
    if (t == 2)
        return Regime::level2;
    return Regime::level3plus;
}

std::int64_t closed_form_italian(int n, int t)
{
    constexpr auto max = std::numeric_limits<std::int64_t>::max();
    switch (regime_for(n, t)) {
    case Regime::path:
        // ceil((2^t + 1) / 2)
        return checked_power(2, t - 1, max - 1) + 1;
    case Regime::kn:
        return 2;
    case Regime::level2:
        return 2 * static_cast<std::int64_t>(n) - 1;
    case Regime::level3plus:
        return checked_power(n, t - 2, max / (2 * static_cast<std::int64_t>(n) - 2)) * (2 * std::int64_t{n} - 2);
    }
    throw InternalError("unhandled regime");
}

std::int64_t closed_form_perfect(int n, int t)
{
    return closed_form_italian(n, t);
}

WeightFunction construct_level2(int n)
{
    if (n < 3)
        throw OutOfRegime("the level-2 construction needs n >= 3, got n = " + std::to_string(n));
    std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        w[i * n + i] = 1; // v_i v_i
        w[i * n + 0] = 1; // v_i v_1
    }
    return WeightFunction(std::move(w));
}

namespace {

    int level3_weight(int x, int y, int z, int n)
    {
        // letters are 0-based here
        const int pred = (x + n - 1) % n;
        const int succ = (x + 1) % n;
        if (z == pred)
            return 1;
        if (z == succ && y != pred && y != succ)
            return 1;
        return 0;
    }

} // namespace

WeightFunction construct_level3plus(const SierpinskiGraph& g)
{
    const int n = g.n();
    if (n < 3 || g.t() < 3)
        throw OutOfRegime("the level-3+ construction needs n >= 3 and t >= 3, got n = " + std::to_string(n) +
                          ", t = " + std::to_string(g.t()));
    std::vector<int> w(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        const int z = v % n;
        const int y = (v / n) % n;
        const int x = (v / (n * n)) % n;
        w[v] = level3_weight(x, y, z, n);
    }
    WeightFunction f(std::move(w));
    const auto report = verify_pid(g, f);
    if (!report.valid)
        throw InternalError("level-3+ construction for n = " + std::to_string(n) + ", t = " + std::to_string(g.t()) +
                            " failed perfect Italian verification at vertex " +
                            g.graph().label(report.violations.front().vertex));
    return f;
}

WeightFunction construct_level3plus(int n, int t, std::int64_t capacity)
{
    if (n < 3 || t < 3)
        throw OutOfRegime("the level-3+ construction needs n >= 3 and t >= 3, got n = " + std::to_string(n) +
                          ", t = " + std::to_string(t));
    return construct_level3plus(build_sierpinski(n, t, capacity));
}

WeightFunction construct_path(int m)
{
    if (m < 1)
        throw InvalidInput("path needs m >= 1");
    std::vector<int> w(m, 0);
    for (int v = 0; v < m; v += 2)
        w[v] = 1;
    w[m - 1] = 1;
    return WeightFunction(std::move(w));
}

WeightFunction construct_kn(int n)
{
    if (n < 1)
        throw InvalidInput("complete graph needs n >= 1");
    std::vector<int> w(n, 0);
    w[0] = n == 1 ? 1 : 2;
    return WeightFunction(std::move(w));
}

Construction construct(int n, int t, std::int64_t capacity)
{
    const Regime regime = regime_for(n, t);
    const std::int64_t value = closed_form_italian(n, t);
    switch (regime) {
    case Regime::path:
        return {regime, construct_path(static_cast<int>(checked_power(2, t, capacity))), value};
    case Regime::kn:
        return {regime, construct_kn(n), value};
    case Regime::level2:
        (void)checked_power(n, 2, capacity);
        return {regime, construct_level2(n), value};
    case Regime::level3plus:
        return {regime, construct_level3plus(n, t, capacity), value};
    }
    throw InternalError("unhandled regime");
}

} // namespace italdom
