#include "corrind/report.hpp"

#include <fstream>
#include <json.hpp>

#include "corrind/errors.hpp"

namespace corrind {

ScenarioReport compare_strategies(const SeriesPanel& panel, const Strategy& baseline,
                                  const Strategy& alt, const SanctionSchedule& schedule,
                                  const WindowSpec& spec,
                                  const std::optional<BudgetConstraint>& constraint,
                                  const TraceOptions& options) {
    bind_check(baseline, panel);
    bind_check(alt, panel);

    // Strategy 1 runs on the panel as-is; strategy 2 on the sanctioned one.
    const SeriesPanel sanctioned = apply_sanctions(panel, alt, schedule);
    const IndicatorTrace trace1 = indicator_trace(panel, spec, options);
    const IndicatorTrace trace2 = indicator_trace(sanctioned, spec, options);

    ScenarioReport report;
    report.strategy_labels = {baseline.label, alt.label};
    report.g_values = {trace1.g_total, trace2.g_total};
    report.delta_g = report.g_values[1] - report.g_values[0];
    report.parameter_ids = panel.parameter_ids();
    report.blocked_cells = count_blocked_cells(panel, alt, schedule);
    report.epochs = trace1.epochs;

    const Index n = panel.parameter_count();
    const Index epochs = static_cast<Index>(trace1.epochs.size());
    report.per_parameter_delta.resize(n);
    for (Index i = 0; i < n; ++i) {
        double acc = 0.0;
        for (Index e = 0; e < epochs; ++e) {
            acc += trace2.g(e, i) - trace1.g(e, i);
        }
        report.per_parameter_delta(i) = acc;
    }

    for (int which = 0; which < 2; ++which) {
        const IndicatorTrace& trace = which == 0 ? trace1 : trace2;
        Eigen::VectorXd totals(epochs);
        for (Index e = 0; e < epochs; ++e) {
            double acc = 0.0;
            for (Index i = 0; i < n; ++i) {
                acc += trace.g(e, i);
            }
            totals(e) = acc;
        }
        report.epoch_totals[static_cast<std::size_t>(which)] = std::move(totals);
    }

    if (constraint) {
        report.budget_violations = {check_budget(panel, *constraint),
                                    check_budget(sanctioned, *constraint)};
    }
    return report;
}

namespace {

nlohmann::json budget_to_json(const BudgetReport& budget) {
    nlohmann::json j;
    if (budget.scope == BudgetScope::per_period) {
        j["scope"] = "per_period";
        j["periods"] = budget.periods;
    } else {
        j["scope"] = "cumulative";
        j["exceeded"] = budget.cumulative_exceeded;
    }
    return j;
}

}  // namespace

void write_report(std::ostream& out, const ScenarioReport& report) {
    nlohmann::json j;
    j["strategy_labels"] = report.strategy_labels;
    j["g_values"] = report.g_values;
    j["delta_g"] = report.delta_g;
    j["parameter_ids"] = report.parameter_ids;
    std::vector<double> deltas(report.per_parameter_delta.data(),
                               report.per_parameter_delta.data() +
                                   report.per_parameter_delta.size());
    j["per_parameter_delta"] = deltas;
    j["blocked_cells"] = report.blocked_cells;

    nlohmann::json econ = nlohmann::json::array();
    for (const EconomicDelta& row : report.economic_deltas) {
        econ.push_back({{"label", row.label},
                        {"baseline", row.baseline},
                        {"alt", row.alt},
                        {"delta", row.delta()},
                        {"percent", row.percent()}});
    }
    j["economic_deltas"] = econ;

    if (report.budget_violations) {
        j["budget_violations"] = {{"baseline", budget_to_json((*report.budget_violations)[0])},
                                  {"alt", budget_to_json((*report.budget_violations)[1])}};
    } else {
        j["budget_violations"] = nullptr;
    }

    j["epochs"] = report.epochs;
    for (int which = 0; which < 2; ++which) {
        const Eigen::VectorXd& totals = report.epoch_totals[static_cast<std::size_t>(which)];
        std::vector<double> series(totals.data(), totals.data() + totals.size());
        j["epoch_totals"][which == 0 ? "baseline" : "alt"] = series;
    }

    out << j.dump(2) << '\n';
    if (!out) {
        throw IoError("report: write failed");
    }
}

void write_report_file(const std::string& path, const ScenarioReport& report) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("report: cannot open '" + path + "' for writing");
    }
    write_report(out, report);
}

}  // namespace corrind
