#pragma once

#include <Eigen/Core>
#include <string>

#include "corrind/errors.hpp"
#include "corrind/panel.hpp"

namespace corrind {

// Rank-2 update moving a Gram matrix of window rows one period forward:
// gram' = gram - row_out*row_out^T + row_in*row_in^T. The update is applied
// as one fused expression, entry ij receiving in_i*in_j - out_i*out_j: the
// products are bitwise symmetric (so a symmetric gram stays symmetric) and
// swapping a row for itself adds an exact zero.
template <class Scalar>
void sliding_gram_update(Matrix<Scalar>& gram,
                         const Vector<Scalar>& row_out,
                         const Vector<Scalar>& row_in) {
    if (gram.rows() != gram.cols() || gram.rows() != row_out.size() ||
        row_out.size() != row_in.size()) {
        throw DimensionError("sliding_gram_update: gram is " + std::to_string(gram.rows()) +
                             "x" + std::to_string(gram.cols()) + ", row_out has " +
                             std::to_string(row_out.size()) + " entries, row_in has " +
                             std::to_string(row_in.size()));
    }
    for (Index j = 0; j < gram.cols(); ++j) {
        gram.col(j) += row_in * row_in(j) - row_out * row_out(j);
    }
}

}  // namespace corrind
