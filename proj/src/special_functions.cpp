#include "dirfdr/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dirfdr::special {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811;

// Continued fraction for I_x(a, b), modified Lentz. Converges fast for x < (a+1)/(a+b+2).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIter = 10000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double dm = static_cast<double>(m);
        const double m2 = 2.0 * dm;
        double aa = dm * (b - dm) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

} // namespace

double normal_sf(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    }
    if (p > 0.5) return -normal_quantile(1.0 - p); // 1 - p is exact for p in [0.5, 1)
    if (p == 0.5) return 0.0;

    // Acklam's rational approximation, relative error ~1e-9 before refinement.
    static constexpr std::array<double, 6> a{-3.969683028665376e+01, 2.209460984245205e+02,
                                             -2.759285104469687e+02, 1.383577518672690e+02,
                                             -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr std::array<double, 5> b{-5.447609879822406e+01, 1.615858368580409e+02,
                                             -1.556989798598866e+02, 6.680131188771972e+01,
                                             -1.328068155288572e+01};
    static constexpr std::array<double, 6> c{-7.784894002430293e-03, -3.223964580411365e-01,
                                             -2.400758277161838e+00, -2.549732539343734e+00,
                                             4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr std::array<double, 4> d{7.784695709041462e-03, 3.224671290700398e-01,
                                             2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double kLow = 0.02425;

    double x;
    if (p < kLow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    // Halley refinement against the erfc-based CDF.
    for (int iter = 0; iter < 2; ++iter) {
        const double e = normal_cdf(x) - p;
        const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double incomplete_beta(double a, double b, double x, double y) {
    if (!(a > 0.0 && b > 0.0)) {
        throw std::domain_error("incomplete_beta: shape parameters must be positive");
    }
    if (!(x >= 0.0 && y >= 0.0)) {
        throw std::domain_error("incomplete_beta: x must lie in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (y == 0.0) return 1.0;
    const double log_front = a * std::log(x) + b * std::log(y) - log_beta(a, b);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, y) / b;
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0)) {
        throw std::domain_error("student_t_cdf: degrees of freedom must be positive");
    }
    if (t == 0.0) return 0.5;
    if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
    const double t2 = t * t;
    double tail;
    // P(T > |t|) = I_{df/(df+t^2)}(df/2, 1/2) / 2
    if (t2 < df) {
        const double y = t2 / (df + t2);
        tail = 0.5 * incomplete_beta(0.5 * df, 0.5, 1.0 - y, y);
    } else {
        const double x = df / (df + t2);
        tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x, 1.0 - x);
    }
    return t > 0 ? 1.0 - tail : tail;
}

double student_t_pdf(double t, double df) {
    const double log_norm = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                            0.5 * std::log(df * std::numbers::pi);
    return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(t * t / df));
}

double student_t_quantile(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("student_t_quantile: p must lie in (0, 1)");
    }
    if (!(df > 0.0)) {
        throw std::domain_error("student_t_quantile: degrees of freedom must be positive");
    }
    if (p == 0.5) return 0.0;
    if (p > 0.5) return -student_t_quantile(1.0 - p, df);
    if (df == 1.0) return std::tan(std::numbers::pi * (p - 0.5));
    if (df == 2.0) return (2.0 * p - 1.0) / std::sqrt(2.0 * p * (1.0 - p));

    // Bracket [lo, hi] with cdf(lo) <= p < cdf(hi) = 1/2, then safeguarded Newton.
    double hi = 0.0;
    double lo = std::min(-1.0, normal_quantile(p));
    while (student_t_cdf(lo, df) > p) {
        hi = lo;
        lo *= 2.0;
    }
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = student_t_cdf(x, df) - p;
        if (f == 0.0) return x;
        if (f > 0.0) hi = x; else lo = x;
        const double step = f / student_t_pdf(x, df);
        double next = x - step;
        if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-15 * std::max(1.0, std::fabs(x))) return next;
        x = next;
    }
    return x;
}

} // namespace dirfdr::special
