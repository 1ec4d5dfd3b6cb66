#pragma once

#include <iosfwd>
#include <string>

#include "corrind/indicators.hpp"
#include "corrind/panel.hpp"

namespace corrind {

// Panel CSV: header "period,<id>,<id>,..."; one row per period with the
// period number (integers ascending from 1) followed by parameter values.
// UTF-8, "." decimal separator, scientific notation accepted on input,
// shortest-round-trip decimals on output.
SeriesPanel read_panel_csv(std::istream& in, const std::string& source_name);
SeriesPanel read_panel_csv_file(const std::string& path);

void write_panel_csv(std::ostream& out, const SeriesPanel& panel);
void write_panel_csv_file(const std::string& path, const SeriesPanel& panel);

// Trace CSV: header "epoch,<id>,<id>,..."; one row per epoch with G_i(t).
void write_trace_csv(std::ostream& out, const IndicatorTrace& trace,
                     const std::vector<std::string>& parameter_ids);
void write_trace_csv_file(const std::string& path, const IndicatorTrace& trace,
                          const std::vector<std::string>& parameter_ids);

}  // namespace corrind
