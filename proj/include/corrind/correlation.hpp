#pragma once

#include <Eigen/Core>
#include <cmath>

#include "corrind/errors.hpp"
#include "corrind/window.hpp"

namespace corrind {

// A window column whose variance falls below this fraction of its scale
// reference (mean square + 1) is treated as constant. Every correlation
// involving such a column is 0 by convention, including its diagonal
// entry, so a fully blocked parameter contributes nothing to G_i(t).
inline constexpr double kDegenerateVarianceRel = 1e-15;

template <class Scalar>
bool degenerate_column(Scalar variance, Scalar mean_square) {
    return variance < Scalar(kDegenerateVarianceRel) * (mean_square + Scalar(1));
}

namespace detail {

// Copy the upper triangle onto the lower one so that r(i,j) == r(j,i)
// holds bitwise.
template <class Scalar>
void mirror_upper(Matrix<Scalar>& r) {
    const Index n = r.rows();
    for (Index j = 0; j < n; ++j) {
        for (Index i = j + 1; i < n; ++i) {
            r(i, j) = r(j, i);
        }
    }
}

}  // namespace detail

// Raw product-moment matrix: r_ij = (1/(k-1)) * sum_l x_i(l) * x_j(l),
// no centering and no scaling. Entries are unbounded.
template <class Scalar>
Matrix<Scalar> literal_correlation(const Matrix<Scalar>& window) {
    const Index k = window.rows();
    if (k < 2) {
        throw ValidationError("literal_correlation: window must have at least 2 rows");
    }
    Matrix<Scalar> r(window.cols(), window.cols());
    r.noalias() = window.transpose() * window / Scalar(k - 1);
    detail::mirror_upper(r);
    return r;
}

// Pearson correlation of the window columns: each column is centered on
// its window mean and scaled by its window standard deviation (divisor
// k-1) before the product moments are taken. Degenerate columns get 0
// rows/columns; every other diagonal entry is exactly 1.
template <class Scalar>
Matrix<Scalar> pearson_correlation(const Matrix<Scalar>& window) {
    const Index k = window.rows();
    const Index n = window.cols();
    if (k < 2) {
        throw ValidationError("pearson_correlation: window must have at least 2 rows");
    }

    Matrix<Scalar> centered = window.rowwise() - window.colwise().mean();
    Matrix<Scalar> r(n, n);
    r.noalias() = centered.transpose() * centered;  // centered cross moments C

    Vector<Scalar> inv_norm(n);
    for (Index j = 0; j < n; ++j) {
        const Scalar variance = r(j, j) / Scalar(k - 1);
        const Scalar mean_square = window.col(j).squaredNorm() / Scalar(k);
        inv_norm(j) = degenerate_column(variance, mean_square)
                          ? Scalar(0)
                          : Scalar(1) / std::sqrt(r(j, j));
    }

    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < j; ++i) {
            r(i, j) *= inv_norm(i) * inv_norm(j);
        }
        r(j, j) = inv_norm(j) > Scalar(0) ? Scalar(1) : Scalar(0);
    }
    detail::mirror_upper(r);
    return r;
}

// Windowed correlation matrix for one analysis epoch; symmetric exactly,
// mode recorded alongside the entries.
struct CorrelationMatrix {
    int epoch = 0;
    CorrelationMode mode = CorrelationMode::pearson;
    Eigen::MatrixXd entries;
};

inline CorrelationMatrix correlation_matrix(const WindowMatrix& window, const WindowSpec& spec) {
    CorrelationMatrix result;
    result.epoch = window.epoch;
    result.mode = spec.mode;
    result.entries = spec.mode == CorrelationMode::pearson
                         ? pearson_correlation<double>(window.rows)
                         : literal_correlation<double>(window.rows);
    return result;
}

}  // namespace corrind
