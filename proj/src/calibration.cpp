#include "dirfdr/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dirfdr/errors.hpp"
#include "dirfdr/special_functions.hpp"

namespace dirfdr {

namespace {

constexpr double kComplementTolerance = 1e-12;
constexpr double kSmallestP = std::numeric_limits<double>::denorm_min();

} // namespace

ReferenceDistribution ReferenceDistribution::student_t(long df) {
    if (df < 1) {
        throw DomainError(fmt::format("Student t needs at least 1 degree of freedom, got {}", df));
    }
    return ReferenceDistribution(Kind::student_t, static_cast<unsigned long>(df));
}

double ReferenceDistribution::cdf(double x) const {
    if (kind_ == Kind::standard_normal) return special::normal_cdf(x);
    return special::student_t_cdf(x, static_cast<double>(df_));
}

double ReferenceDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(fmt::format("quantile needs 0 < p < 1, got {}", p));
    }
    if (kind_ == Kind::standard_normal) return special::normal_quantile(p);
    return special::student_t_quantile(p, static_cast<double>(df_));
}

std::string_view to_string(CalibrationPolicy policy) noexcept {
    return policy == CalibrationPolicy::normal ? "normal" : "t";
}

double cdf(const ReferenceDistribution& dist, double x) { return dist.cdf(x); }

double quantile(const ReferenceDistribution& dist, double p) { return dist.quantile(p); }

OneSidedPValues one_sided_pvalues(double t, const ReferenceDistribution& dist) {
    return {std::max(dist.cdf(t), kSmallestP), std::max(dist.cdf(-t), kSmallestP)};
}

double two_sided_pvalue(double p_lower, double p_upper) {
    if (!(p_lower >= 0.0 && p_lower <= 1.0 && p_upper >= 0.0 && p_upper <= 1.0) ||
        std::fabs(p_lower + p_upper - 1.0) > kComplementTolerance) {
        throw InconsistencyError(fmt::format(
            "one-sided p-values {} and {} do not sum to one", p_lower, p_upper));
    }
    return std::min(1.0, 2.0 * std::min(p_lower, p_upper));
}

PValueTriple calibrate_pair(const PairStatistic& stat, CalibrationPolicy policy,
                            std::span<const GroupSummary> groups) {
    ReferenceDistribution dist = ReferenceDistribution::normal();
    if (policy == CalibrationPolicy::student_t) {
        if (stat.i >= groups.size() || stat.j >= groups.size()) {
            throw DomainError(fmt::format(
                "Student t calibration of pair ({}, {}) needs its group sizes", stat.i, stat.j));
        }
        const auto n = std::min(groups[stat.i].size, groups[stat.j].size);
        dist = ReferenceDistribution::student_t(static_cast<long>(n) - 1);
    }
    const auto [p_lower, p_upper] = one_sided_pvalues(stat.t, dist);
    return {p_lower, p_upper, two_sided_pvalue(p_lower, p_upper)};
}

} // namespace dirfdr
