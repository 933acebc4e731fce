#ifndef DIRFDR_CALIBRATION_HPP
#define DIRFDR_CALIBRATION_HPP

#include <span>
#include <string_view>

#include "dirfdr/core_stats.hpp"

namespace dirfdr {

/// Symmetric reference CDF used to turn a t-statistic into p-values.
class ReferenceDistribution {
public:
    enum class Kind { standard_normal, student_t };

    static ReferenceDistribution normal() noexcept { return ReferenceDistribution(Kind::standard_normal, 0); }
    /// Throws DomainError when df < 1.
    static ReferenceDistribution student_t(long df);

    Kind kind() const noexcept { return kind_; }
    /// Zero for the normal.
    unsigned long degrees_of_freedom() const noexcept { return df_; }

    double cdf(double x) const;
    /// Throws DomainError unless 0 < p < 1.
    double quantile(double p) const;

private:
    ReferenceDistribution(Kind kind, unsigned long df) noexcept : kind_(kind), df_(df) {}

    Kind kind_;
    unsigned long df_;
};

/// How pair statistics are calibrated: standard normal, or Student t with min(n_i, n_j) - 1 df.
enum class CalibrationPolicy { normal, student_t };

std::string_view to_string(CalibrationPolicy policy) noexcept;

struct OneSidedPValues {
    double p_lower = 0.5; // F(t)
    double p_upper = 0.5; // 1 - F(t)
};

struct PValueTriple {
    double p_lower = 0.5;
    double p_upper = 0.5;
    double p_two_sided = 1.0;
};

double cdf(const ReferenceDistribution& dist, double x);
double quantile(const ReferenceDistribution& dist, double p);

/// (F(t), 1 - F(t)); the upper tail is evaluated as F(-t). Both are clamped
/// below at the smallest positive double so they never reach zero.
OneSidedPValues one_sided_pvalues(double t, const ReferenceDistribution& dist);

/// 2 * min(p_lower, p_upper). Throws InconsistencyError when the inputs do not sum to one.
double two_sided_pvalue(double p_lower, double p_upper);

/// One- and two-sided p-values for a pair. Group summaries are only consulted by the
/// Student t policy, which uses min(n_i, n_j) - 1 degrees of freedom.
PValueTriple calibrate_pair(const PairStatistic& stat, CalibrationPolicy policy,
                            std::span<const GroupSummary> groups = {});

} // namespace dirfdr

#endif // DIRFDR_CALIBRATION_HPP
