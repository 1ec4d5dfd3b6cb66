#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "corrind/indicators.hpp"
#include "corrind/strategy.hpp"
#include "corrind/window.hpp"

namespace corrind {

// One labeled economic figure carried through from the scenario file
// (these have no defining equations; they are reported, not computed).
struct EconomicDelta {
    std::string label;
    double baseline = 0.0;
    double alt = 0.0;

    double delta() const { return alt - baseline; }
    // Percent change relative to baseline; 0 when baseline is 0.
    double percent() const { return baseline == 0.0 ? 0.0 : 100.0 * (alt - baseline) / baseline; }
};

struct ScenarioReport {
    std::array<std::string, 2> strategy_labels;  // [baseline, alt]
    std::array<double, 2> g_values{};            // [G1, G2]
    double delta_g = 0.0;                        // G2 - G1 exactly
    std::vector<std::string> parameter_ids;
    Eigen::VectorXd per_parameter_delta;         // sum_t (G_i^2(t) - G_i^1(t))
    long long blocked_cells = 0;
    std::vector<EconomicDelta> economic_deltas;
    std::optional<std::array<BudgetReport, 2>> budget_violations;  // [baseline, alt]

    // Per-epoch system series sum_i G_i(t), one per strategy (for plots).
    std::vector<int> epochs;
    std::array<Eigen::VectorXd, 2> epoch_totals;
};

// Runs indicator_trace on the unmodified panel (baseline) and on
// apply_sanctions(panel, alt, schedule) (alt), and fills the report.
ScenarioReport compare_strategies(const SeriesPanel& panel, const Strategy& baseline,
                                  const Strategy& alt, const SanctionSchedule& schedule,
                                  const WindowSpec& spec,
                                  const std::optional<BudgetConstraint>& constraint = {},
                                  const TraceOptions& options = {});

// Serializes the report as a JSON document mirroring the field names above,
// with numbers rendered shortest-round-trip.
void write_report(std::ostream& out, const ScenarioReport& report);
void write_report_file(const std::string& path, const ScenarioReport& report);

}  // namespace corrind
