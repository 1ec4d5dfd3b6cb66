#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "corrind/errors.hpp"

namespace corrind {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Eigen::Index;

// Dense panel of parameter time series: one row per parameter, one column
// per period. Periods carry 1-based labels 1..T_max, so column c holds
// period c+1. Immutable after construction; all values finite.
class SeriesPanel {
public:
    SeriesPanel(std::vector<std::string> parameter_ids, Eigen::MatrixXd values);

    Index parameter_count() const { return values_.rows(); }
    int period_count() const { return static_cast<int>(values_.cols()); }

    const std::vector<std::string>& parameter_ids() const { return parameter_ids_; }
    const Eigen::MatrixXd& values() const { return values_; }

    // Value of parameter row `parameter` at 1-based period `period`.
    double value(Index parameter, int period) const {
        return values_(parameter, period - 1);
    }

    // Row index for a parameter id, or -1 when the panel has no such id.
    Index index_of(std::string_view parameter_id) const;

    // Same series with a different value matrix (shape must be identical).
    SeriesPanel with_values(Eigen::MatrixXd values) const;

private:
    std::vector<std::string> parameter_ids_;
    std::unordered_map<std::string, Index> index_;
    Eigen::MatrixXd values_;
};

}  // namespace corrind
