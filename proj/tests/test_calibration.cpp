#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "dirfdr/calibration.hpp"
#include "dirfdr/errors.hpp"
#include "dirfdr/special_functions.hpp"

using namespace dirfdr;

namespace {

// 50-digit normal CDF, independent of the library's double-precision route.
double reference_normal_cdf(double x) {
    using boost::multiprecision::cpp_bin_float_50;
    const cpp_bin_float_50 z = -cpp_bin_float_50(x) / boost::multiprecision::sqrt(cpp_bin_float_50(2));
    return static_cast<double>(boost::math::erfc(z) / 2);
}

struct TCase {
    int df;
    double x;
    double cdf;
};

// 40-digit regularized incomplete beta (mpmath), rounded to 20 significant digits.
const std::vector<TCase> kStudentT = {
    {3, -6, 0.0046363574461423337021},     {3, -2.5, 0.043853323504032773625},
    {3, -0.3, 0.3918816460199595173},      {3, 0.7, 0.73283650084761818554},
    {3, 1.5, 0.88470806737758847386},      {3, 4, 0.98599577199492691652},
    {5, -6, 0.00092306914479700721301},    {5, -2.5, 0.027245049671188120558},
    {5, -0.3, 0.38812452113163722932},     {5, 0.7, 0.74242552584259179054},
    {5, 1.5, 0.90304815987876328393},      {5, 4, 0.9948382922595842731},
    {10, -6, 0.000066054430177392802118},  {10, -2.5, 0.015723422118304402125},
    {10, -0.3, 0.38516030378289930229},    {10, 0.7, 0.7500562149135578322},
    {10, 1.5, 0.91774633677727990958},     {10, 4, 0.99874083368763165387},
    {39, -6, 2.5894439127865480334e-7},    {39, -2.5, 0.008366892373598922156},
    {39, -0.3, 0.38288520345734929818},    {39, 0.7, 0.75595892881616905365},
    {39, 1.5, 0.92916647852655166485},     {39, 4, 0.99986307131026304989},
    {100, -6, 1.5862457514014282898e-8},   {100, -2.5, 0.0070228945620385887038},
    {100, -0.3, 0.3823999401501517397},    {100, 0.7, 0.75722369677281331857},
    {100, 1.5, 0.9316174709376555716},     {100, 4, 0.99993923817784961916},
    {399, -6, 2.2154297473526441077e-9},   {399, -2.5, 0.0064099370656398687771},
    {399, -0.3, 0.38216669299218324604},   {399, 0.7, 0.75783238415131339562},
    {399, 1.5, 0.93279738344974222696},    {399, 4, 0.99996225352392920078},
};

std::vector<ReferenceDistribution> sample_distributions() {
    std::vector<ReferenceDistribution> out{ReferenceDistribution::normal()};
    for (long df : {1, 2, 3, 5, 10, 39, 100, 399}) out.push_back(ReferenceDistribution::student_t(df));
    return out;
}

} // namespace

TEST(Cdf, NormalExamples) {
    const auto normal = ReferenceDistribution::normal();
    EXPECT_EQ(cdf(normal, 0.0), 0.5);
    EXPECT_NEAR(cdf(normal, 1.959964), 0.975000000903557596, 1e-15);
}

TEST(Cdf, NormalAgainstHighPrecision) {
    const auto normal = ReferenceDistribution::normal();
    for (int k = 0; k <= 1000; ++k) {
        const double x = -8.0 + 16.0 * k / 1000.0;
        EXPECT_NEAR(cdf(normal, x), reference_normal_cdf(x), 1e-12) << "x = " << x;
    }
}

TEST(Cdf, StudentClosedForms) {
    const auto cauchy = ReferenceDistribution::student_t(1);
    const auto t2 = ReferenceDistribution::student_t(2);
    EXPECT_NEAR(cdf(cauchy, 1.0), 0.75, 1e-15);
    for (int k = 0; k <= 400; ++k) {
        const double x = -20.0 + 40.0 * k / 400.0;
        EXPECT_NEAR(cdf(cauchy, x), 0.5 + std::atan(x) / std::numbers::pi, 1e-10);
        EXPECT_NEAR(cdf(t2, x), 0.5 + x / (2.0 * std::sqrt(2.0 + x * x)), 1e-10);
    }
}

TEST(Cdf, StudentAgainstIncompleteBetaTable) {
    for (const auto& c : kStudentT) {
        EXPECT_NEAR(cdf(ReferenceDistribution::student_t(c.df), c.x), c.cdf, 1e-10)
            << "df = " << c.df << ", x = " << c.x;
    }
}

TEST(Cdf, SymmetryAndMonotonicity) {
    for (const auto& dist : sample_distributions()) {
        double prev = 0.0;
        for (int k = 0; k <= 2000; ++k) {
            const double x = -30.0 + 60.0 * k / 2000.0;
            const double f = cdf(dist, x);
            EXPECT_LE(std::fabs(f + cdf(dist, -x) - 1.0), 1e-12);
            EXPECT_GE(f, prev);
            prev = f;
        }
    }
}

TEST(Cdf, StudentApproachesNormal) {
    const auto normal = ReferenceDistribution::normal();
    for (long df : {30, 39, 60, 99, 199, 399, 1000}) {
        const auto t = ReferenceDistribution::student_t(df);
        for (int k = 0; k <= 160; ++k) {
            const double x = -4.0 + k / 20.0;
            EXPECT_LE(std::fabs(cdf(t, x) - cdf(normal, x)), 0.01);
        }
    }
}

TEST(Quantile, Examples) {
    const auto normal = ReferenceDistribution::normal();
    EXPECT_EQ(quantile(normal, 0.5), 0.0);
    EXPECT_NEAR(quantile(normal, 0.975), 1.959963984540054, 1e-12);
    EXPECT_NEAR(quantile(ReferenceDistribution::student_t(1), 0.75), 1.0, 1e-14);
}

TEST(Quantile, RoundTrip) {
    std::vector<double> ps{1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 0.01, 0.025, 0.1, 0.3, 0.5};
    for (std::size_t k = ps.size() - 1; k-- > 0;) ps.push_back(1.0 - ps[k]);
    for (const auto& dist : sample_distributions()) {
        for (double p : ps) {
            EXPECT_LE(std::fabs(cdf(dist, quantile(dist, p)) - p), 1e-9)
                << "df = " << dist.degrees_of_freedom() << ", p = " << p;
        }
    }
}

TEST(Quantile, DomainErrors) {
    const auto normal = ReferenceDistribution::normal();
    EXPECT_THROW(quantile(normal, 0.0), DomainError);
    EXPECT_THROW(quantile(normal, 1.0), DomainError);
    EXPECT_THROW(quantile(ReferenceDistribution::student_t(4), -0.1), DomainError);
    EXPECT_THROW(ReferenceDistribution::student_t(0), DomainError);
}

TEST(OneSided, Examples) {
    const auto normal = ReferenceDistribution::normal();
    const auto zero = one_sided_pvalues(0.0, normal);
    EXPECT_EQ(zero.p_lower, 0.5);
    EXPECT_EQ(zero.p_upper, 0.5);
    const auto p = one_sided_pvalues(1.959964, normal);
    EXPECT_NEAR(p.p_lower, 0.975000000903557596, 1e-15);
    EXPECT_NEAR(p.p_upper, 0.024999999096442404, 1e-15);
    for (double t : {-7.5, -2.0, -0.1, 0.4, 3.3}) {
        EXPECT_EQ(one_sided_pvalues(t, normal).p_lower, one_sided_pvalues(-t, normal).p_upper);
    }
}

TEST(OneSided, ExtremeStatisticsClampAboveZero) {
    const auto p = one_sided_pvalues(-70.71, ReferenceDistribution::normal());
    EXPECT_GT(p.p_lower, 0.0);
    EXPECT_EQ(p.p_lower, std::numeric_limits<double>::denorm_min());
    EXPECT_EQ(p.p_upper, 1.0);
    EXPECT_GT(two_sided_pvalue(p.p_lower, p.p_upper), 0.0);
}

TEST(TwoSided, Examples) {
    EXPECT_EQ(two_sided_pvalue(0.5, 0.5), 1.0);
    EXPECT_NEAR(two_sided_pvalue(0.975, 0.025), 0.05, 1e-15);
    EXPECT_NEAR(two_sided_pvalue(0.2, 0.8), 0.4, 1e-15);
    EXPECT_THROW(two_sided_pvalue(0.3, 0.3), InconsistencyError);
    EXPECT_THROW(two_sided_pvalue(-0.5, 1.5), InconsistencyError);
}

TEST(CalibratePair, Examples) {
    const std::vector<GroupSummary> groups{{0, 1, 40}, {0, 1, 55}};
    for (auto policy : {CalibrationPolicy::normal, CalibrationPolicy::student_t}) {
        const auto p = calibrate_pair({0, 1, 0.0}, policy, groups);
        EXPECT_EQ(p.p_lower, 0.5);
        EXPECT_EQ(p.p_upper, 0.5);
        EXPECT_EQ(p.p_two_sided, 1.0);
    }
    const auto n = calibrate_pair({0, 1, -2.598076}, CalibrationPolicy::normal);
    EXPECT_NEAR(n.p_lower, 0.0046873871149137963, 1e-15);
    EXPECT_NEAR(n.p_two_sided, 0.0093747742298275926, 1e-15);

    // min(40, 55) - 1 = 39 degrees of freedom
    const auto t = calibrate_pair({0, 1, 2.0}, CalibrationPolicy::student_t, groups);
    EXPECT_NEAR(t.p_two_sided, 0.052499015343854756, 1e-10);
}

TEST(CalibratePair, StudentPolicyNeedsUsableSizes) {
    EXPECT_THROW(calibrate_pair({0, 1, 1.0}, CalibrationPolicy::student_t), DomainError);
    const std::vector<GroupSummary> tiny{{0, 1, 1}, {0, 1, 10}};
    EXPECT_THROW(calibrate_pair({0, 1, 1.0}, CalibrationPolicy::student_t, tiny), DomainError);
}

TEST(CalibratePair, TwoSidedAlwaysAProbability) {
    const std::vector<GroupSummary> groups{{0, 1, 3}, {0, 1, 3}};
    for (int k = -400; k <= 400; ++k) {
        const double t = k / 10.0;
        for (auto policy : {CalibrationPolicy::normal, CalibrationPolicy::student_t}) {
            const auto p = calibrate_pair({0, 1, t}, policy, groups);
            EXPECT_GE(p.p_two_sided, 0.0);
            EXPECT_LE(p.p_two_sided, 1.0);
            EXPECT_LE(std::fabs(p.p_lower + p.p_upper - 1.0), 1e-12);
            if (t == 0.0) EXPECT_EQ(p.p_two_sided, 1.0);
            else EXPECT_LT(p.p_two_sided, 1.0);
        }
    }
}
