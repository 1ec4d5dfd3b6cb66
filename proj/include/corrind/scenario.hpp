#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corrind/report.hpp"
#include "corrind/strategy.hpp"
#include "corrind/window.hpp"

namespace corrind {

// Strategy entry as written in the scenario file: duties referenced by id,
// activation periods optional (absent = active in every period).
struct ScenarioStrategy {
    std::string label;
    std::vector<std::string> duty_ids;
    std::map<std::string, std::vector<int>> active_periods;
};

// Parsed scenario document. Structural validity (types, from <= to) is
// checked at parse time; referential integrity against a panel is a
// separate bind step.
struct ScenarioFile {
    WindowSpec window;
    std::vector<Duty> duties;
    std::vector<ScenarioStrategy> strategies;  // [0] = baseline, [1] = alt
    std::vector<SanctionBlock> blocks;
    std::optional<BudgetConstraint> budget;
    std::vector<EconomicDelta> economic;  // carried-through labeled figures
};

// Throws ParseError on malformed JSON, wrong types, missing required
// fields, or inverted block intervals (message names the entry index).
ScenarioFile read_scenario(std::istream& in, const std::string& source_name);
ScenarioFile read_scenario_file(const std::string& path);

// Scenario resolved against a panel and ready to run.
struct BoundScenario {
    WindowSpec window;
    Strategy baseline;
    Strategy alt;
    SanctionSchedule schedule;
    std::optional<BudgetConstraint> budget;
    std::vector<EconomicDelta> economic;
};

// Resolves duty references and validates every id against the panel.
// Throws ValidationError/BindingError whose message lists every dangling
// duty or parameter id at once.
BoundScenario bind_scenario(const ScenarioFile& file, const SeriesPanel& panel);

}  // namespace corrind
