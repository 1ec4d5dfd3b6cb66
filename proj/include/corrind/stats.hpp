#pragma once

#include <span>

namespace corrind::stats {

// Regularized incomplete beta function I_x(a, b), evaluated with the
// Lentz continued fraction. Accurate to ~1e-14 for the df ranges that a
// two-sample t-test produces.
double incomplete_beta(double a, double b, double x);

// CDF of Student's t distribution with `df` degrees of freedom.
double student_t_cdf(double t, double df);

struct WelchResult {
    double t = 0.0;        // test statistic
    double df = 0.0;       // Welch-Satterthwaite degrees of freedom
    double p_value = 1.0;  // two-sided
};

// Two-sample Welch t-test (unequal variances). Both samples need at
// least two observations and nonzero combined variance.
WelchResult welch_t_test(std::span<const double> sample_a, std::span<const double> sample_b);

}  // namespace corrind::stats
