#include "corrind/indicators.hpp"

#include <cmath>

#include "corrind/sliding_gram.hpp"

namespace corrind {

namespace {

// Neumaier-compensated sum over the same fixed order as the plain loop.
double sum_compensated(const Eigen::MatrixXd& g) {
    double sum = 0.0;
    double comp = 0.0;
    for (Index row = 0; row < g.rows(); ++row) {
        for (Index col = 0; col < g.cols(); ++col) {
            const double x = g(row, col);
            const double t = sum + x;
            if (std::abs(sum) >= std::abs(x)) {
                comp += (sum - t) + x;
            } else {
                comp += (x - t) + sum;
            }
            sum = t;
        }
    }
    return sum + comp;
}

void trace_batch(const SeriesPanel& panel, const WindowSpec& spec, IndicatorTrace& trace) {
    for (std::size_t e = 0; e < trace.epochs.size(); ++e) {
        const WindowMatrix window = build_window(panel, trace.epochs[e], spec);
        const CorrelationMatrix r = correlation_matrix(window, spec);
        trace.g.row(static_cast<Index>(e)) = indicator_row_sums(r.entries).transpose();
    }
}

// The one-pass centering identity C_jj = S_jj - s_j^2/k cancels when a
// window column barely varies: it loses roughly log10(S_jj/C_jj) digits.
// Below this ratio an epoch is recomputed with the two-pass batch kernel,
// which keeps every emitted indicator within the documented 1e-9 agreement
// with a from-scratch evaluation. (At 1e-4, with tens of slides of
// accumulated roundoff, the retained precision is still ~1e-10.)
constexpr double kOnePassConditionRel = 1e-4;

// Indicator row sums straight from the sliding raw Gram matrix S and the
// sliding column sums s, without materializing the correlation matrix:
//   literal:  G_i = (1/(k-1)) * sum_j |S_ij|
//   pearson:  C_ij = S_ij - s_i*s_j/k,  r_ij = C_ij * inv_i * inv_j,
//             G_i = 1 + inv_i * sum_{j != i} |C_ij| * inv_j   (0 if degenerate)
// Each row accumulates over ascending j, so the result does not depend on
// the thread count. Returns false (leaving g unspecified) when some pearson
// column is too ill-conditioned for the one-pass identity.
bool row_sums_from_gram(const Eigen::MatrixXd& gram, const Eigen::VectorXd& sums, int k,
                        CorrelationMode mode, Eigen::VectorXd& g) {
    const Index n = gram.rows();

    if (mode == CorrelationMode::literal) {
        const double scale = 1.0 / double(k - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (Index i = 0; i < n; ++i) {
            double acc = 0.0;
            for (Index j = 0; j < n; ++j) {
                acc += std::abs(gram(j, i));  // S is symmetric; column walk
            }
            g(i) = acc * scale;
        }
        return true;
    }

    Eigen::VectorXd scaled = sums / double(k);
    Eigen::VectorXd inv(n);
    for (Index j = 0; j < n; ++j) {
        const double centered = gram(j, j) - scaled(j) * sums(j);
        if (centered < kOnePassConditionRel * gram(j, j) && gram(j, j) > 0.0) {
            return false;
        }
        const double variance = centered / double(k - 1);
        const double mean_square = gram(j, j) / double(k);
        inv(j) = degenerate_column(variance, mean_square) ? 0.0 : 1.0 / std::sqrt(centered);
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (Index i = 0; i < n; ++i) {
        if (inv(i) == 0.0) {
            g(i) = 0.0;
            continue;
        }
        const double s_i = sums(i);
        double acc = 0.0;
        for (Index j = 0; j < n; ++j) {
            if (j == i) {
                continue;
            }
            acc += std::abs(gram(j, i) - scaled(j) * s_i) * inv(j);
        }
        g(i) = 1.0 + inv(i) * acc;
    }
    return true;
}

void trace_incremental(const SeriesPanel& panel, const WindowSpec& spec,
                       IndicatorTrace& trace) {
    const Eigen::MatrixXd& values = panel.values();
    const Index n = values.rows();
    const int k = spec.k;

    // Raw Gram of the first window, built by the same rank-1 accumulation
    // the sliding updates use.
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd sums = Eigen::VectorXd::Zero(n);
    for (int c = 0; c < k; ++c) {
        gram.noalias() += values.col(c) * values.col(c).transpose();
        sums += values.col(c);
    }

    Eigen::VectorXd g(n);
    for (std::size_t e = 0; e < trace.epochs.size(); ++e) {
        const int epoch = trace.epochs[e];
        if (e > 0) {
            const Eigen::VectorXd out = values.col(epoch - 2 - k);
            const Eigen::VectorXd in = values.col(epoch - 2);
            sliding_gram_update(gram, out, in);
            sums -= out;
            sums += in;
        }
        if (row_sums_from_gram(gram, sums, k, spec.mode, g)) {
            trace.g.row(static_cast<Index>(e)) = g.transpose();
        } else {
            const WindowMatrix window = build_window(panel, epoch, spec);
            const CorrelationMatrix r = correlation_matrix(window, spec);
            trace.g.row(static_cast<Index>(e)) = indicator_row_sums(r.entries).transpose();
        }
    }
}

}  // namespace

double sum_indicators(const Eigen::MatrixXd& g, Summation summation) {
    if (summation == Summation::compensated) {
        return sum_compensated(g);
    }
    double sum = 0.0;
    for (Index row = 0; row < g.rows(); ++row) {
        for (Index col = 0; col < g.cols(); ++col) {
            sum += g(row, col);
        }
    }
    return sum;
}

IndicatorTrace indicator_trace(const SeriesPanel& panel, const WindowSpec& spec,
                               const TraceOptions& options) {
    validate_window_spec(spec, panel);

    IndicatorTrace trace;
    trace.mode = spec.mode;
    const int t0 = first_epoch(spec);
    const int t1 = last_epoch(panel);
    trace.epochs.reserve(static_cast<std::size_t>(t1 - t0 + 1));
    for (int t = t0; t <= t1; ++t) {
        trace.epochs.push_back(t);
    }
    trace.g.resize(static_cast<Index>(trace.epochs.size()), panel.parameter_count());

    if (options.path == TracePath::batch) {
        trace_batch(panel, spec, trace);
    } else {
        trace_incremental(panel, spec, trace);
    }

    trace.g_total = sum_indicators(trace.g, options.summation);
    return trace;
}

}  // namespace corrind
