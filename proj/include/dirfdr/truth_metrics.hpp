#ifndef DIRFDR_TRUTH_METRICS_HPP
#define DIRFDR_TRUTH_METRICS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dirfdr/bh_directional.hpp"

namespace dirfdr {

/// True group parameters: means, standard deviations and sample sizes.
struct GroundTruth {
    std::vector<double> means;
    std::vector<double> scales;
    std::vector<std::size_t> sizes;

    std::size_t groups() const noexcept { return means.size(); }
    /// Throws std::invalid_argument unless lengths agree, m >= 2, scales > 0 and sizes >= 1.
    void validate() const;
};

enum class PairClass { null, plus, minus };

using Pair = std::pair<std::size_t, std::size_t>;

/// Split of all pairs i < j by the sign of mu_i - mu_j.
struct PairPartition {
    std::size_t m = 0;
    std::vector<Pair> h_zero;
    std::vector<Pair> h_plus;
    std::vector<Pair> h_minus;
    std::vector<PairClass> by_index; // lexicographic pair order

    std::size_t q() const noexcept { return by_index.size(); }
    std::size_t q0() const noexcept { return h_zero.size(); }
    std::size_t q_plus() const noexcept { return h_plus.size(); }
    std::size_t q_minus() const noexcept { return h_minus.size(); }
};

struct ReplicationMetrics {
    std::size_t rejections = 0;        // R
    std::size_t directional_errors = 0; // V
    double dfdp = 0.0;
};

/// Cell-level Monte Carlo estimates with their standard errors.
struct ExperimentSummary {
    std::size_t reps = 0;
    double bound = 0.0;
    double dfdr_hat = 0.0;
    double dfdr_se = 0.0;
    double p_dfdp_le_bound = 0.0;
    double p_se = 0.0;
    double mean_rejections = 0.0;
};

struct DiagnosticsReport {
    double c_lower = 1.0;
    double c_upper = 1.0;
    /// 8 c_U^2 sqrt(log m), the standardized gap a signal pair must reach.
    double signal_threshold = 0.0;
    std::size_t signal_pairs = 0;
    bool signal_condition_met = false;
    /// (alpha/2)(1 + q0/q) for this configuration.
    double dfdr_bound = 0.0;
};

PairPartition classify_pairs(const GroundTruth& truth);

/// Rejected true nulls plus rejected non-nulls whose declared sign is wrong.
/// Throws ConsistencyError for a decision whose pair is not in the partition.
std::size_t count_directional_errors(const DecisionSet& decisions, const PairPartition& partition);

/// V / R, and 0 when R = 0. Throws DomainError when V > R.
double dfdp(std::size_t directional_errors, std::size_t rejections);

ReplicationMetrics replication_metrics(const DecisionSet& decisions, const PairPartition& partition);

/// (alpha/2)(1 + q0/q).
double directional_bound(double alpha, std::size_t q0, std::size_t q);

/// Mean dFDP and the fraction of replications with dFDP <= bound, each with its
/// Monte Carlo standard error. Throws DomainError on empty input or bound outside (0, 1).
ExperimentSummary aggregate_experiment(std::span<const ReplicationMetrics> metrics, double bound);

/// Balance constants and signal-size count for a configuration. Advisory only.
DiagnosticsReport assumption_diagnostics(const GroundTruth& truth, double alpha);

/// 2 (1 - Phi(sqrt(2 log m))), the lower bound the step-up threshold should clear.
double threshold_lower_bound(std::size_t m);

/// alpha_hat >= threshold_lower_bound(m).
bool threshold_bound_indicator(const DecisionSet& decisions, std::size_t m);

} // namespace dirfdr

#endif // DIRFDR_TRUTH_METRICS_HPP
