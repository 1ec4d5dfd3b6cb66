#include "corrind/panel.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

namespace corrind {

SeriesPanel::SeriesPanel(std::vector<std::string> parameter_ids, Eigen::MatrixXd values)
    : parameter_ids_(std::move(parameter_ids)), values_(std::move(values)) {
    if (values_.rows() < 1) {
        throw ValidationError("panel: needs at least one parameter row");
    }
    if (values_.cols() < 1) {
        throw ValidationError("panel: needs at least one period");
    }
    if (static_cast<Index>(parameter_ids_.size()) != values_.rows()) {
        throw ValidationError("panel: " + std::to_string(parameter_ids_.size()) +
                              " parameter ids for " + std::to_string(values_.rows()) +
                              " value rows");
    }
    index_.reserve(parameter_ids_.size());
    for (Index i = 0; i < values_.rows(); ++i) {
        const std::string& id = parameter_ids_[static_cast<std::size_t>(i)];
        if (id.empty()) {
            throw ValidationError("panel: parameter id at row " + std::to_string(i) +
                                  " is empty");
        }
        if (!index_.emplace(id, i).second) {
            throw ValidationError("panel: duplicate parameter id '" + id + "'");
        }
    }
    if (!values_.allFinite()) {
        for (Index i = 0; i < values_.rows(); ++i) {
            for (Index c = 0; c < values_.cols(); ++c) {
                if (!std::isfinite(values_(i, c))) {
                    throw ValidationError("panel: non-finite value for parameter '" +
                                          parameter_ids_[static_cast<std::size_t>(i)] +
                                          "' at period " + std::to_string(c + 1));
                }
            }
        }
    }
}

Index SeriesPanel::index_of(std::string_view parameter_id) const {
    const auto it = index_.find(std::string(parameter_id));
    return it == index_.end() ? Index(-1) : it->second;
}

SeriesPanel SeriesPanel::with_values(Eigen::MatrixXd values) const {
    if (values.rows() != values_.rows() || values.cols() != values_.cols()) {
        throw DimensionError("with_values: got " + std::to_string(values.rows()) + "x" +
                             std::to_string(values.cols()) + ", panel is " +
                             std::to_string(values_.rows()) + "x" +
                             std::to_string(values_.cols()));
    }
    return SeriesPanel(parameter_ids_, std::move(values));
}

}  // namespace corrind
