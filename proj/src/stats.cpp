#include "corrind/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "corrind/errors.hpp"

namespace corrind::stats {

namespace {

// log of the beta function via lgamma.
double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta (modified Lentz method).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) {
        d = kTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) {
            d = kTiny;
        }
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) {
            c = kTiny;
        }
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) {
            break;
        }
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw ValidationError("incomplete_beta: parameters must be positive, got a=" +
                              std::to_string(a) + " b=" + std::to_string(b));
    }
    if (x <= 0.0) {
        return 0.0;
    }
    if (x >= 1.0) {
        return 1.0;
    }
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    // Use the fraction on the side where it converges fast.
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
    if (!(df > 0.0)) {
        throw ValidationError("student_t_cdf: df must be positive, got " + std::to_string(df));
    }
    if (t == 0.0) {
        return 0.5;
    }
    const double x = df / (df + t * t);
    const double tail = 0.5 * incomplete_beta(0.5 * df, 0.5, x);
    return t > 0.0 ? 1.0 - tail : tail;
}

WelchResult welch_t_test(std::span<const double> sample_a, std::span<const double> sample_b) {
    const std::size_t na = sample_a.size();
    const std::size_t nb = sample_b.size();
    if (na < 2 || nb < 2) {
        throw ValidationError("welch_t_test: both samples need at least 2 observations, got " +
                              std::to_string(na) + " and " + std::to_string(nb));
    }

    auto mean_var = [](std::span<const double> s) {
        double mean = 0.0;
        for (double v : s) {
            mean += v;
        }
        mean /= double(s.size());
        double var = 0.0;
        for (double v : s) {
            var += (v - mean) * (v - mean);
        }
        var /= double(s.size() - 1);
        return std::pair<double, double>{mean, var};
    };

    const auto [mean_a, var_a] = mean_var(sample_a);
    const auto [mean_b, var_b] = mean_var(sample_b);
    const double sa = var_a / double(na);
    const double sb = var_b / double(nb);
    const double se2 = sa + sb;
    if (se2 <= 0.0) {
        throw ValidationError("welch_t_test: both samples have zero variance");
    }

    WelchResult result;
    result.t = (mean_a - mean_b) / std::sqrt(se2);
    result.df = se2 * se2 /
                (sa * sa / double(na - 1) + sb * sb / double(nb - 1));
    const double tail = student_t_cdf(-std::abs(result.t), result.df);
    result.p_value = std::min(1.0, 2.0 * tail);
    return result;
}

}  // namespace corrind::stats
