#include "corrind/window.hpp"

namespace corrind {

std::string to_string(CorrelationMode mode) {
    return mode == CorrelationMode::pearson ? "pearson" : "literal";
}

CorrelationMode correlation_mode_from_string(std::string_view name) {
    if (name == "pearson") {
        return CorrelationMode::pearson;
    }
    if (name == "literal") {
        return CorrelationMode::literal;
    }
    throw ParseError("unknown correlation mode '" + std::string(name) +
                     "' (expected pearson or literal)");
}

void validate_window_spec(const WindowSpec& spec, const SeriesPanel& panel) {
    if (spec.k < 2) {
        throw ValidationError("window length k must be at least 2, got " +
                              std::to_string(spec.k));
    }
    if (spec.k > panel.period_count()) {
        throw InsufficientDataError("window length k=" + std::to_string(spec.k) +
                                    " exceeds the panel's " +
                                    std::to_string(panel.period_count()) + " periods");
    }
}

WindowMatrix build_window(const SeriesPanel& panel, int epoch, const WindowSpec& spec) {
    validate_window_spec(spec, panel);
    if (epoch < first_epoch(spec) || epoch > last_epoch(panel)) {
        throw RangeError("epoch " + std::to_string(epoch) + " outside the valid range " +
                         std::to_string(first_epoch(spec)) + ".." +
                         std::to_string(last_epoch(panel)));
    }
    WindowMatrix window;
    window.epoch = epoch;
    window.rows.resize(spec.k, panel.parameter_count());
    // Row l-1 holds period t-l: row 0 is the most recent period t-1.
    for (int l = 1; l <= spec.k; ++l) {
        window.rows.row(l - 1) = panel.values().col(epoch - l - 1).transpose();
    }
    return window;
}

}  // namespace corrind
