#ifndef DIRFDR_SPECIAL_FUNCTIONS_HPP
#define DIRFDR_SPECIAL_FUNCTIONS_HPP

namespace dirfdr::special {

/// Standard normal CDF, 0.5 * erfc(-x / sqrt(2)).
double normal_cdf(double x);

/// Standard normal upper tail 1 - Phi(x).
double normal_sf(double x);

/// Inverse of normal_cdf on (0, 1). Rational starting point refined by Halley steps.
double normal_quantile(double p);

/// Regularized incomplete beta I_x(a, b). The caller passes y = 1 - x so that
/// both tails can be evaluated without cancellation.
double incomplete_beta(double a, double b, double x, double y);

/// Student t CDF with df degrees of freedom (df > 0).
double student_t_cdf(double t, double df);

/// Student t density.
double student_t_pdf(double t, double df);

/// Inverse of student_t_cdf on (0, 1).
double student_t_quantile(double p, double df);

} // namespace dirfdr::special

#endif // DIRFDR_SPECIAL_FUNCTIONS_HPP
