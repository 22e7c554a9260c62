#pragma once

#include "italdom/domination.hpp"
#include "italdom/graph.hpp"

#include <cstdint>
#include <string_view>

namespace italdom {

/// Which closed form / construction applies to S(K_n,t).
enum class Regime {
    kn,          // t = 1, n >= 3
    level2,      // t = 2, n >= 3
    level3plus,  // t >= 3, n >= 3
    path,        // n = 2, any t
};

[[nodiscard]] std::string_view regime_name(Regime r);
[[nodiscard]] Regime regime_for(int n, int t);

/// Italian domination number of S(K_n,t), n >= 2, t >= 1.
[[nodiscard]] std::int64_t closed_form_italian(int n, int t);

/// Perfect Italian domination number of S(K_n,t); coincides with the Italian
/// value in every regime.
[[nodiscard]] std::int64_t closed_form_perfect(int n, int t);

/// Weight 1 on every v_i v_i and every v_i v_1 of S(K_n,2); 2n-1 in total.
[[nodiscard]] WeightFunction construct_level2(int n);

/// Weight of a vertex depends on its last three letters (x,y,z): 1 iff
/// z = x-1, or z = x+1 with y not in {x-1, x+1}, indices cyclic on {1..n}.
/// Self-verifies as a perfect Italian function; InternalError otherwise.
[[nodiscard]] WeightFunction construct_level3plus(int n, int t, std::int64_t capacity = default_capacity());

/// Overload that reuses an existing S(K_n,t) for the self-check.
[[nodiscard]] WeightFunction construct_level3plus(const SierpinskiGraph& g);

/// Odd line positions, plus the last vertex when m is even.
[[nodiscard]] WeightFunction construct_path(int m);

/// 2 on the first vertex of K_n (1 when n = 1).
[[nodiscard]] WeightFunction construct_kn(int n);

struct Construction {
    Regime regime;
    WeightFunction weights;
    std::int64_t closed_form;
};

/// Dispatches on regime_for(n, t). The weights are indexed by the vertex ranks
/// of build_sierpinski(n, t).
[[nodiscard]] Construction construct(int n, int t, std::int64_t capacity = default_capacity());

} // namespace italdom
