#pragma once

#include <iosfwd>
#include <string>

#include "corrind/report.hpp"

namespace corrind {

// Two-line SVG chart overlaying the per-epoch system series of both
// strategies (epoch on x, sum_i G_i(t) on y), with axes and a legend.
void write_overlay_chart(std::ostream& out, const ScenarioReport& report);
void write_overlay_chart_file(const std::string& path, const ScenarioReport& report);

}  // namespace corrind
