#pragma once

#include <Eigen/Core>
#include <string>

#include "corrind/errors.hpp"
#include "corrind/panel.hpp"

namespace corrind {

enum class CorrelationMode { pearson, literal };

std::string to_string(CorrelationMode mode);
CorrelationMode correlation_mode_from_string(std::string_view name);

// k is the trailing window length in periods; pearson standardizes each
// window column before correlating, literal uses the raw product moments.
struct WindowSpec {
    int k = 6;
    CorrelationMode mode = CorrelationMode::pearson;
};

// Trailing window for analysis epoch t: row l-1 holds the panel values at
// period t-l, so row 0 is the most recent period t-1 and the last row is
// period t-k.
struct WindowMatrix {
    int epoch = 0;
    Eigen::MatrixXd rows;  // k x n
};

// Valid analysis epochs are k+1 .. T_max+1: every epoch whose k trailing
// periods all exist in the panel.
inline int first_epoch(const WindowSpec& spec) { return spec.k + 1; }
inline int last_epoch(const SeriesPanel& panel) { return panel.period_count() + 1; }

// Throws ValidationError (k < 2) or InsufficientDataError (k > T_max).
void validate_window_spec(const WindowSpec& spec, const SeriesPanel& panel);

// Throws RangeError when t is outside [k+1, T_max+1].
WindowMatrix build_window(const SeriesPanel& panel, int epoch, const WindowSpec& spec);

}  // namespace corrind
