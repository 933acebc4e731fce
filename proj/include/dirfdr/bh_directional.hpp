#ifndef DIRFDR_BH_DIRECTIONAL_HPP
#define DIRFDR_BH_DIRECTIONAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dirfdr/calibration.hpp"
#include "dirfdr/core_stats.hpp"

namespace dirfdr {

enum class Sign { none, positive, negative };

/// Two-sided p-value attached to the pair (i, j).
struct PairPValue {
    std::size_t i = 0;
    std::size_t j = 0;
    double p = 1.0;
};

struct PairDecision {
    std::size_t i = 0;
    std::size_t j = 0;
    bool rejected = false;
    Sign sign = Sign::none;
};

/// Outcome of the step-up. `decisions` is parallel to the p-value input.
struct DecisionSet {
    double alpha = 0.0;
    std::size_t k_hat = 0;             // 0: nothing rejected
    double threshold_alpha_hat = 0.0;  // alpha * k_hat / q
    std::vector<PairDecision> decisions;

    std::size_t rejections() const noexcept;
};

/// P-values in ascending order; ties keep lexicographic pair order.
class SortedPValues {
public:
    explicit SortedPValues(std::span<const PairPValue> pvalues);

    std::span<const PairPValue> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    /// k-th order statistic, 1-based.
    double order_statistic(std::size_t k) const { return values_.at(k - 1).p; }

private:
    std::vector<PairPValue> values_;
};

/// Step-up cutoff alpha * k / q shared by every route that evaluates it.
double stepup_cutoff(double alpha, std::size_t k, std::size_t q) noexcept;

/// k_hat = max{k : p_(k) <= alpha k / q}; rejects every pair with p <= p_(k_hat).
/// Signs are left unset. Throws DomainError on empty input, alpha outside (0, 1)
/// or a p-value outside [0, 1].
DecisionSet bh_stepup(std::span<const PairPValue> pvalues, double alpha);

/// Largest fixed point of a -> (alpha/q) #{p <= a} on [0, 1], found by scanning the
/// candidate values alpha k / q directly rather than through the sorted order.
double bh_threshold(std::span<const PairPValue> pvalues, double alpha);

/// Positive sign for rejected pairs with t > 0, negative for t < 0.
/// Throws ConsistencyError if the pair lists differ, InvariantViolation for a rejected t = 0.
DecisionSet declare_signs(DecisionSet decisions, std::span<const PairStatistic> stats);

/// Full procedure: Welch statistics, calibration, step-up, sign declaration.
DecisionSet williams_bh(std::span<const GroupSummary> groups, double alpha, CalibrationPolicy policy);

} // namespace dirfdr

#endif // DIRFDR_BH_DIRECTIONAL_HPP
