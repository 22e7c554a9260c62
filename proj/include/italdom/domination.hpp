#pragma once

#include "italdom/graph.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace italdom {

enum class Variant { italian, perfect };

[[nodiscard]] std::string_view variant_name(Variant v);
[[nodiscard]] Variant parse_variant(std::string_view name);

/// Total map vertex rank -> {0,1,2}.
class WeightFunction {
public:
    WeightFunction() = default;
    /// Throws InvalidInput on any entry outside {0,1,2}.
    explicit WeightFunction(std::vector<int> weights);
    static WeightFunction zeros(int size) { return WeightFunction(std::vector<int>(size, 0)); }

    [[nodiscard]] int size() const { return static_cast<int>(weights_.size()); }
    [[nodiscard]] int operator[](Vertex v) const { return weights_[v]; }
    [[nodiscard]] std::span<const int> values() const { return weights_; }
    void set(Vertex v, int weight);

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
    friend auto operator<=>(const WeightFunction&, const WeightFunction&) = default;

private:
    std::vector<int> weights_;
};

[[nodiscard]] std::int64_t total_weight(const WeightFunction& f);

enum class ViolationKind { deficit, inexact };

[[nodiscard]] std::string_view violation_kind_name(ViolationKind k);

struct Violation {
    Vertex vertex;
    int neighbour_sum;
    ViolationKind kind;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::int64_t total_weight = 0;
};

/// Every zero-weight vertex needs open-neighbourhood weight >= 2.
[[nodiscard]] VerificationReport verify_idf(const Graph& g, const WeightFunction& f);

/// Every zero-weight vertex needs open-neighbourhood weight exactly 2.
[[nodiscard]] VerificationReport verify_pid(const Graph& g, const WeightFunction& f);

[[nodiscard]] VerificationReport verify(const Graph& g, const WeightFunction& f, Variant variant);

} // namespace italdom
