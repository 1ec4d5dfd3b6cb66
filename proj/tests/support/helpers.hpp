#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "corrind/counter_rng.hpp"
#include "corrind/panel.hpp"
#include "oracle.hpp"

namespace testsupport {

inline oracle::Grid to_grid(const Eigen::MatrixXd& values) {
    oracle::Grid grid(static_cast<std::size_t>(values.rows()),
                      std::vector<double>(static_cast<std::size_t>(values.cols()), 0.0));
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index c = 0; c < values.cols(); ++c) {
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = values(i, c);
        }
    }
    return grid;
}

// Continuous positive values bounded away from zero, so no column is ever
// near-degenerate and relative tolerances stay meaningful.
inline corrind::SeriesPanel random_panel(std::uint64_t seed, int n, int t_max,
                                         double lo = 0.5, double hi = 2.5) {
    Eigen::MatrixXd values(n, t_max);
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < t_max; ++t) {
            values(i, t) = lo + (hi - lo) * corrind::rng::uniform01(
                                                seed, corrind::rng::Stream::noise,
                                                std::uint64_t(i), std::uint64_t(t));
        }
    }
    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        ids.push_back("q" + std::to_string(i));
    }
    return corrind::SeriesPanel(std::move(ids), std::move(values));
}

inline bool close(double a, double b, double rel, double abs_tol = 0.0) {
    const double diff = std::abs(a - b);
    return diff <= abs_tol + rel * std::max(std::abs(a), std::abs(b));
}

// Exact (bitwise, for finite values) equality of two matrices.
inline bool same_values(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

}  // namespace testsupport
