#include "dirfdr/core_stats.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "dirfdr/errors.hpp"

namespace dirfdr {

namespace {

void validate(const GroupSummary& g) {
    if (g.size < 2) {
        throw DegenerateGroupError(fmt::format("group size {} is below 2", g.size));
    }
    if (!(g.variance >= 0.0) || !std::isfinite(g.variance) || !std::isfinite(g.mean)) {
        throw std::invalid_argument(
            fmt::format("invalid group summary (mean {}, variance {})", g.mean, g.variance));
    }
}

} // namespace

GroupSummary summarize_group(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw DegenerateGroupError(
            fmt::format("sample variance needs at least 2 observations, got {}", samples.size()));
    }
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t k = 0;
    for (double x : samples) {
        ++k;
        const double delta = x - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (x - mean);
    }
    return {mean, m2 / static_cast<double>(k - 1), k};
}

double welch_t(const GroupSummary& a, const GroupSummary& b) {
    validate(a);
    validate(b);
    const double se2 = a.variance / static_cast<double>(a.size) + b.variance / static_cast<double>(b.size);
    if (!(se2 > 0.0)) {
        throw DegenerateVarianceError("Welch denominator is zero: both groups have zero variance");
    }
    return (a.mean - b.mean) / std::sqrt(se2);
}

std::vector<PairStatistic> pairwise_statistics(std::span<const GroupSummary> groups) {
    const std::size_t m = groups.size();
    if (m < 2) {
        throw std::invalid_argument(fmt::format("need at least 2 groups, got {}", m));
    }
    std::vector<PairStatistic> out;
    out.reserve(pair_count(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            try {
                out.push_back({i, j, welch_t(groups[i], groups[j])});
            } catch (const DegenerateVarianceError&) {
                throw DegenerateVarianceError(
                    fmt::format("Welch denominator is zero for pair ({}, {})", i, j), i, j);
            }
        }
    }
    return out;
}

} // namespace dirfdr
