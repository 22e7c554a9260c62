#include "italdom/domination.hpp"

#include "italdom/errors.hpp"

#include <numeric>
#include <string>

namespace italdom {

std::string_view variant_name(Variant v)
{
    return v == Variant::italian ? "italian" : "perfect";
}

Variant parse_variant(std::string_view name)
{
    if (name == "italian")
        return Variant::italian;
    if (name == "perfect")
        return Variant::perfect;
    throw InvalidInput("unknown variant '" + std::string(name) + "' (expected italian or perfect)");
}

std::string_view violation_kind_name(ViolationKind k)
{
    return k == ViolationKind::deficit ? "deficit" : "inexact";
}

WeightFunction::WeightFunction(std::vector<int> weights) : weights_(std::move(weights))
{
    for (std::size_t v = 0; v < weights_.size(); ++v)
        if (weights_[v] < 0 || weights_[v] > 2)
            throw InvalidInput("weight " + std::to_string(weights_[v]) + " at vertex " + std::to_string(v) +
                               " is not in {0,1,2}");
}

void WeightFunction::set(Vertex v, int weight)
{
    if (v < 0 || v >= size())
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    if (weight < 0 || weight > 2)
        throw InvalidInput("weight " + std::to_string(weight) + " is not in {0,1,2}");
    weights_[v] = weight;
}

std::int64_t total_weight(const WeightFunction& f)
{
    const auto w = f.values();
    return std::accumulate(w.begin(), w.end(), std::int64_t{0});
}

namespace {

    VerificationReport check(const Graph& g, const WeightFunction& f, Variant variant)
    {
        if (f.size() != g.size())
            throw InvalidInput("weight function has " + std::to_string(f.size()) + " entries but the graph has " +
                               std::to_string(g.size()) + " vertices");
        VerificationReport report;
        report.total_weight = total_weight(f);
        for (Vertex v = 0; v < g.size(); ++v) {
            if (f[v] != 0)
                continue;
            int sum = 0;
            for (Vertex u : g.neighbours(v))
                sum += f[u];
            if (sum < 2)
                report.violations.push_back({v, sum, ViolationKind::deficit});
            else if (variant == Variant::perfect && sum > 2)
                report.violations.push_back({v, sum, ViolationKind::inexact});
        }
        report.valid = report.violations.empty();
        return report;
    }

} // namespace

VerificationReport verify_idf(const Graph& g, const WeightFunction& f)
{
    return check(g, f, Variant::italian);
}

VerificationReport verify_pid(const Graph& g, const WeightFunction& f)
{
    return check(g, f, Variant::perfect);
}

VerificationReport verify(const Graph& g, const WeightFunction& f, Variant variant)
{
    return check(g, f, variant);
}

} // namespace italdom
