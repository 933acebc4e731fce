#include "dirfdr/bh_directional.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "dirfdr/errors.hpp"

namespace dirfdr {

namespace {

void validate_inputs(std::span<const PairPValue> pvalues, double alpha) {
    if (pvalues.empty()) {
        throw DomainError("step-up needs at least one p-value");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError(fmt::format("alpha must lie in (0, 1), got {}", alpha));
    }
    for (const auto& pv : pvalues) {
        if (!(pv.p >= 0.0 && pv.p <= 1.0)) {
            throw DomainError(fmt::format("p-value {} for pair ({}, {}) is outside [0, 1]", pv.p, pv.i, pv.j));
        }
    }
}

} // namespace

std::size_t DecisionSet::rejections() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(decisions.begin(), decisions.end(), [](const PairDecision& d) { return d.rejected; }));
}

SortedPValues::SortedPValues(std::span<const PairPValue> pvalues) : values_(pvalues.begin(), pvalues.end()) {
    std::stable_sort(values_.begin(), values_.end(), [](const PairPValue& a, const PairPValue& b) {
        return std::tie(a.p, a.i, a.j) < std::tie(b.p, b.i, b.j);
    });
}

double stepup_cutoff(double alpha, std::size_t k, std::size_t q) noexcept {
    return alpha * static_cast<double>(k) / static_cast<double>(q);
}

DecisionSet bh_stepup(std::span<const PairPValue> pvalues, double alpha) {
    validate_inputs(pvalues, alpha);
    const SortedPValues sorted(pvalues);
    const std::size_t q = sorted.size();

    std::size_t k_hat = 0;
    for (std::size_t k = q; k >= 1; --k) {
        if (sorted.order_statistic(k) <= stepup_cutoff(alpha, k, q)) {
            k_hat = k;
            break;
        }
    }

    DecisionSet out;
    out.alpha = alpha;
    out.k_hat = k_hat;
    out.threshold_alpha_hat = k_hat == 0 ? 0.0 : stepup_cutoff(alpha, k_hat, q);
    out.decisions.reserve(q);
    const double p_cut = k_hat == 0 ? -1.0 : sorted.order_statistic(k_hat);
    for (const auto& pv : pvalues) {
        out.decisions.push_back({pv.i, pv.j, pv.p <= p_cut, Sign::none});
    }
    return out;
}

double bh_threshold(std::span<const PairPValue> pvalues, double alpha) {
    validate_inputs(pvalues, alpha);
    const std::size_t q = pvalues.size();
    for (std::size_t k = q; k >= 1; --k) {
        const double candidate = stepup_cutoff(alpha, k, q);
        const auto below = static_cast<std::size_t>(std::count_if(
            pvalues.begin(), pvalues.end(), [candidate](const PairPValue& pv) { return pv.p <= candidate; }));
        if (below >= k) return candidate;
    }
    return 0.0;
}

DecisionSet declare_signs(DecisionSet decisions, std::span<const PairStatistic> stats) {
    if (decisions.decisions.size() != stats.size()) {
        throw ConsistencyError(fmt::format("{} decisions but {} statistics",
                                           decisions.decisions.size(), stats.size()));
    }
    for (std::size_t idx = 0; idx < stats.size(); ++idx) {
        auto& d = decisions.decisions[idx];
        const auto& s = stats[idx];
        if (d.i != s.i || d.j != s.j) {
            throw ConsistencyError(fmt::format("decision pair ({}, {}) does not match statistic pair ({}, {})",
                                               d.i, d.j, s.i, s.j));
        }
        if (!d.rejected) {
            d.sign = Sign::none;
        } else if (s.t > 0.0) {
            d.sign = Sign::positive;
        } else if (s.t < 0.0) {
            d.sign = Sign::negative;
        } else {
            throw InvariantViolation(fmt::format("pair ({}, {}) rejected with t = 0", s.i, s.j));
        }
    }
    return decisions;
}

DecisionSet williams_bh(std::span<const GroupSummary> groups, double alpha, CalibrationPolicy policy) {
    const auto stats = pairwise_statistics(groups);
    std::vector<PairPValue> pvalues;
    pvalues.reserve(stats.size());
    for (const auto& s : stats) {
        pvalues.push_back({s.i, s.j, calibrate_pair(s, policy, groups).p_two_sided});
    }
    return declare_signs(bh_stepup(pvalues, alpha), stats);
}

} // namespace dirfdr
