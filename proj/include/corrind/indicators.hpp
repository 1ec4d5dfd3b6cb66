#pragma once

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "corrind/correlation.hpp"
#include "corrind/panel.hpp"
#include "corrind/window.hpp"

namespace corrind {

// Per-parameter integral indicator: G_i = sum_j |r_ij|, diagonal included.
// The inner sum runs over ascending j so the result is reproducible.
template <class Scalar>
Vector<Scalar> indicator_row_sums(const Matrix<Scalar>& r) {
    if (r.rows() != r.cols()) {
        throw DimensionError("indicator_row_sums: matrix is " + std::to_string(r.rows()) +
                             "x" + std::to_string(r.cols()) + ", expected square");
    }
    const Index n = r.rows();
    Vector<Scalar> g(n);
    for (Index i = 0; i < n; ++i) {
        Scalar acc = 0;
        for (Index j = 0; j < n; ++j) {
            acc += std::abs(r(i, j));
        }
        g(i) = acc;
    }
    return g;
}

// batch recomputes every window from scratch; incremental slides the raw
// Gram matrix forward with rank-2 updates, falling back to the batch
// kernel for epochs whose windows are too ill-conditioned for one-pass
// centering. Both paths agree to 1e-9 relative; automatic selects
// incremental.
enum class TracePath { automatic, batch, incremental };

enum class Summation { plain, compensated };

struct TraceOptions {
    TracePath path = TracePath::automatic;
    Summation summation = Summation::plain;
};

// G_i(t) for every valid epoch plus the system indicator g_total.
// indicator_kind names the row-sum-of-absolutes indicator; it is the only
// kind implemented and is recorded so serialized traces stay self-describing.
struct IndicatorTrace {
    std::vector<int> epochs;        // ascending, k+1 .. T_max+1
    Eigen::MatrixXd g;              // one row per epoch, one column per parameter
    double g_total = 0.0;
    CorrelationMode mode = CorrelationMode::pearson;
    static constexpr const char* indicator_kind = "abs_row_sum";
};

// Double sum of the indicator matrix in fixed epoch-major, ascending
// parameter order. Plain accumulation by default; the compensated variant
// uses Neumaier summation in the same order.
double sum_indicators(const Eigen::MatrixXd& g, Summation summation = Summation::plain);

// Evaluates every epoch in k+1 .. T_max+1 in ascending order.
// Throws InsufficientDataError when T_max < k.
IndicatorTrace indicator_trace(const SeriesPanel& panel, const WindowSpec& spec,
                               const TraceOptions& options = {});

}  // namespace corrind
