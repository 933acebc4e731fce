#ifndef DIRFDR_CORE_STATS_HPP
#define DIRFDR_CORE_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace dirfdr {

/// Sufficient statistics of one group: mean, sample variance (divisor n-1) and size.
struct GroupSummary {
    double mean = 0.0;
    double variance = 0.0;
    std::size_t size = 0;
};

/// Welch t-statistic for the ordered pair (i, j), i < j, 0-based group indices.
struct PairStatistic {
    std::size_t i = 0;
    std::size_t j = 0;
    double t = 0.0;
};

/// Number of unordered pairs among m groups, m(m-1)/2.
constexpr std::size_t pair_count(std::size_t m) noexcept { return m < 2 ? 0 : m * (m - 1) / 2; }

/// Position of (i, j) in the lexicographic enumeration of pairs of m groups.
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t m) noexcept {
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

/// Mean and sample variance by Welford's update. Throws DegenerateGroupError for fewer than 2 samples.
GroupSummary summarize_group(std::span<const double> samples);

/// (a.mean - b.mean) / sqrt(a.variance/a.size + b.variance/b.size).
/// Throws DegenerateVarianceError when the denominator is zero.
double welch_t(const GroupSummary& a, const GroupSummary& b);

/// All m(m-1)/2 Welch statistics in lexicographic (i, j) order.
std::vector<PairStatistic> pairwise_statistics(std::span<const GroupSummary> groups);

} // namespace dirfdr

#endif // DIRFDR_CORE_STATS_HPP
