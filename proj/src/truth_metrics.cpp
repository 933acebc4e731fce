#include "dirfdr/truth_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "dirfdr/errors.hpp"
#include "dirfdr/special_functions.hpp"

namespace dirfdr {

void GroundTruth::validate() const {
    const std::size_t m = means.size();
    if (m < 2) {
        throw std::invalid_argument(fmt::format("ground truth needs at least 2 groups, got {}", m));
    }
    if (scales.size() != m || sizes.size() != m) {
        throw std::invalid_argument(fmt::format("ground truth lengths differ: {} means, {} scales, {} sizes",
                                                m, scales.size(), sizes.size()));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!(scales[i] > 0.0) || !std::isfinite(means[i]) || sizes[i] < 1) {
            throw std::invalid_argument(fmt::format("invalid ground truth for group {}", i));
        }
    }
}

PairPartition classify_pairs(const GroundTruth& truth) {
    truth.validate();
    PairPartition part;
    part.m = truth.groups();
    part.by_index.reserve(pair_count(part.m));
    for (std::size_t i = 0; i < part.m; ++i) {
        for (std::size_t j = i + 1; j < part.m; ++j) {
            const double diff = truth.means[i] - truth.means[j];
            if (diff > 0.0) {
                part.h_plus.emplace_back(i, j);
                part.by_index.push_back(PairClass::plus);
            } else if (diff < 0.0) {
                part.h_minus.emplace_back(i, j);
                part.by_index.push_back(PairClass::minus);
            } else {
                part.h_zero.emplace_back(i, j);
                part.by_index.push_back(PairClass::null);
            }
        }
    }
    return part;
}

std::size_t count_directional_errors(const DecisionSet& decisions, const PairPartition& partition) {
    std::size_t errors = 0;
    for (const auto& d : decisions.decisions) {
        if (!(d.i < d.j && d.j < partition.m)) {
            throw ConsistencyError(fmt::format("pair ({}, {}) is not among the {} groups", d.i, d.j, partition.m));
        }
        if (!d.rejected) continue;
        switch (partition.by_index[pair_index(d.i, d.j, partition.m)]) {
        case PairClass::null:
            ++errors;
            break;
        case PairClass::plus:
            if (d.sign != Sign::positive) ++errors;
            break;
        case PairClass::minus:
            if (d.sign != Sign::negative) ++errors;
            break;
        }
    }
    return errors;
}

double dfdp(std::size_t directional_errors, std::size_t rejections) {
    if (directional_errors > rejections) {
        throw DomainError(fmt::format("{} directional errors exceed {} rejections", directional_errors, rejections));
    }
    if (rejections == 0) return 0.0;
    return static_cast<double>(directional_errors) / static_cast<double>(rejections);
}

ReplicationMetrics replication_metrics(const DecisionSet& decisions, const PairPartition& partition) {
    ReplicationMetrics out;
    out.rejections = decisions.rejections();
    out.directional_errors = count_directional_errors(decisions, partition);
    out.dfdp = dfdp(out.directional_errors, out.rejections);
    return out;
}

double directional_bound(double alpha, std::size_t q0, std::size_t q) {
    return 0.5 * alpha * (1.0 + static_cast<double>(q0) / static_cast<double>(q));
}

ExperimentSummary aggregate_experiment(std::span<const ReplicationMetrics> metrics, double bound) {
    if (metrics.empty()) {
        throw DomainError("cannot aggregate an empty set of replications");
    }
    if (!(bound > 0.0 && bound < 1.0)) {
        throw DomainError(fmt::format("dFDP bound must lie in (0, 1), got {}", bound));
    }
    const auto reps = static_cast<double>(metrics.size());
    double sum = 0.0;
    double below = 0.0;
    double rejections = 0.0;
    for (const auto& r : metrics) {
        sum += r.dfdp;
        rejections += static_cast<double>(r.rejections);
        if (r.dfdp <= bound) below += 1.0;
    }
    ExperimentSummary out;
    out.reps = metrics.size();
    out.bound = bound;
    out.dfdr_hat = sum / reps;
    out.p_dfdp_le_bound = below / reps;
    out.mean_rejections = rejections / reps;
    if (metrics.size() > 1) {
        double ss = 0.0;
        for (const auto& r : metrics) ss += (r.dfdp - out.dfdr_hat) * (r.dfdp - out.dfdr_hat);
        out.dfdr_se = std::sqrt(ss / (reps - 1.0) / reps);
    }
    out.p_se = std::sqrt(out.p_dfdp_le_bound * (1.0 - out.p_dfdp_le_bound) / reps);
    return out;
}

DiagnosticsReport assumption_diagnostics(const GroundTruth& truth, double alpha) {
    truth.validate();
    const std::size_t m = truth.groups();
    const auto [smin, smax] = std::minmax_element(truth.scales.begin(), truth.scales.end());
    const auto [nmin, nmax] = std::minmax_element(truth.sizes.begin(), truth.sizes.end());
    const double var_ratio = (*smax * *smax) / (*smin * *smin);
    const double size_ratio = static_cast<double>(*nmax) / static_cast<double>(*nmin);

    DiagnosticsReport out;
    out.c_upper = std::max(var_ratio, size_ratio);
    out.c_lower = std::min(1.0 / var_ratio, 1.0 / size_ratio);
    out.signal_threshold = 8.0 * out.c_upper * out.c_upper * std::sqrt(std::log(static_cast<double>(m)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double se = std::sqrt(truth.scales[i] * truth.scales[i] / static_cast<double>(truth.sizes[i]) +
                                        truth.scales[j] * truth.scales[j] / static_cast<double>(truth.sizes[j]));
            if (std::fabs(truth.means[i] - truth.means[j]) / se >= out.signal_threshold) ++out.signal_pairs;
        }
    }
    out.signal_condition_met = out.signal_pairs >= 1;
    const auto part = classify_pairs(truth);
    out.dfdr_bound = directional_bound(alpha, part.q0(), part.q());
    return out;
}

double threshold_lower_bound(std::size_t m) {
    return 2.0 * special::normal_sf(std::sqrt(2.0 * std::log(static_cast<double>(m))));
}

bool threshold_bound_indicator(const DecisionSet& decisions, std::size_t m) {
    if (m < 2) {
        throw DomainError(fmt::format("threshold bound needs m >= 2, got {}", m));
    }
    return decisions.threshold_alpha_hat >= threshold_lower_bound(m);
}

} // namespace dirfdr
