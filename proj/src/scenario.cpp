#include "corrind/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <unordered_map>
#include <unordered_set>

namespace corrind {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += items[i];
    }
    return out;
}

const json& require(const json& node, const char* key, const std::string& where) {
    const auto it = node.find(key);
    if (it == node.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return *it;
}

ScenarioFile parse_scenario(const json& doc, const std::string& source_name) {
    ScenarioFile file;
    if (!doc.is_object()) {
        throw ParseError(source_name + ": top level must be an object");
    }

    const json& window = require(doc, "window", source_name);
    file.window.k = static_cast<int>(require(window, "k", source_name + ": window").get<long long>());
    file.window.mode =
        correlation_mode_from_string(require(window, "mode", source_name + ": window").get<std::string>());

    const json& duties = require(doc, "duties", source_name);
    for (std::size_t d = 0; d < duties.size(); ++d) {
        const json& node = duties[d];
        const std::string where = source_name + ": duties[" + std::to_string(d) + "]";
        Duty duty;
        duty.duty_id = require(node, "duty_id", where).get<std::string>();
        duty.position = node.value("position", std::string{});
        duty.description = node.value("description", std::string{});
        duty.mapped_parameters =
            require(node, "mapped_parameters", where).get<std::vector<std::string>>();
        duty.compliance = node.value("compliance", true);
        if (duty.mapped_parameters.empty()) {
            throw ParseError(where + ": mapped_parameters is empty");
        }
        file.duties.push_back(std::move(duty));
    }

    const json& strategies = require(doc, "strategies", source_name);
    if (strategies.empty()) {
        throw ParseError(source_name + ": strategies must name at least one strategy");
    }
    for (std::size_t s = 0; s < strategies.size(); ++s) {
        const json& node = strategies[s];
        const std::string where = source_name + ": strategies[" + std::to_string(s) + "]";
        ScenarioStrategy strategy;
        strategy.label = require(node, "label", where).get<std::string>();
        strategy.duty_ids = require(node, "duty_ids", where).get<std::vector<std::string>>();
        if (node.contains("active_periods")) {
            strategy.active_periods =
                node["active_periods"].get<std::map<std::string, std::vector<int>>>();
        }
        file.strategies.push_back(std::move(strategy));
    }
    if (file.strategies.size() > 2) {
        throw ParseError(source_name + ": at most two strategies (baseline, alt) are supported");
    }

    if (doc.contains("blocks")) {
        const json& blocks = doc["blocks"];
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const json& node = blocks[b];
            const std::string where = source_name + ": blocks[" + std::to_string(b) + "]";
            SanctionBlock block;
            block.duty_id = require(node, "duty_id", where).get<std::string>();
            block.from = static_cast<int>(require(node, "from", where).get<long long>());
            block.to = static_cast<int>(require(node, "to", where).get<long long>());
            if (block.from > block.to) {
                throw ParseError(where + ": from " + std::to_string(block.from) +
                                 " exceeds to " + std::to_string(block.to));
            }
            if (block.from < 1) {
                throw ParseError(where + ": from must be at least 1, got " +
                                 std::to_string(block.from));
            }
            file.blocks.push_back(std::move(block));
        }
    }

    if (doc.contains("budget") && !doc["budget"].is_null()) {
        const json& node = doc["budget"];
        const std::string where = source_name + ": budget";
        BudgetConstraint budget;
        budget.cap = require(node, "cap", where).get<double>();
        if (budget.cap < 0.0) {
            throw ParseError(where + ": cap must be nonnegative");
        }
        const std::string scope = node.value("scope", std::string{"per_period"});
        if (scope == "per_period") {
            budget.scope = BudgetScope::per_period;
        } else if (scope == "cumulative") {
            budget.scope = BudgetScope::cumulative;
        } else {
            throw ParseError(where + ": unknown scope '" + scope +
                             "' (expected per_period or cumulative)");
        }
        file.budget = budget;
    }

    if (doc.contains("economic")) {
        const json& econ = doc["economic"];
        for (std::size_t r = 0; r < econ.size(); ++r) {
            const json& node = econ[r];
            const std::string where = source_name + ": economic[" + std::to_string(r) + "]";
            EconomicDelta row;
            row.label = require(node, "label", where).get<std::string>();
            row.baseline = require(node, "baseline", where).get<double>();
            row.alt = require(node, "alt", where).get<double>();
            file.economic.push_back(std::move(row));
        }
    }
    return file;
}

}  // namespace

ScenarioFile read_scenario(std::istream& in, const std::string& source_name) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& err) {
        throw ParseError(source_name + ": " + err.what());
    }
    try {
        return parse_scenario(doc, source_name);
    } catch (const json::exception& err) {
        throw ParseError(source_name + ": " + err.what());
    }
}

ScenarioFile read_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open scenario file '" + path + "'");
    }
    return read_scenario(in, path);
}

BoundScenario bind_scenario(const ScenarioFile& file, const SeriesPanel& panel) {
    std::unordered_map<std::string, const Duty*> declared;
    for (const Duty& duty : file.duties) {
        if (!declared.emplace(duty.duty_id, &duty).second) {
            throw ValidationError("scenario: duplicate duty id '" + duty.duty_id + "'");
        }
    }

    // Collect every dangling reference before failing, so one run reports
    // the full repair list.
    std::vector<std::string> dangling;
    for (const ScenarioStrategy& strategy : file.strategies) {
        for (const std::string& duty_id : strategy.duty_ids) {
            if (!declared.count(duty_id)) {
                dangling.push_back("strategy '" + strategy.label + "' duty '" + duty_id + "'");
            }
        }
        for (const auto& [duty_id, periods] : strategy.active_periods) {
            if (!declared.count(duty_id)) {
                dangling.push_back("strategy '" + strategy.label + "' active_periods duty '" +
                                   duty_id + "'");
            }
        }
    }
    for (std::size_t b = 0; b < file.blocks.size(); ++b) {
        if (!declared.count(file.blocks[b].duty_id)) {
            dangling.push_back("blocks[" + std::to_string(b) + "] duty '" +
                               file.blocks[b].duty_id + "'");
        }
    }
    for (const Duty& duty : file.duties) {
        for (const std::string& parameter_id : duty.mapped_parameters) {
            if (panel.index_of(parameter_id) < 0) {
                dangling.push_back("duty '" + duty.duty_id + "' parameter '" + parameter_id +
                                   "'");
            }
        }
    }
    if (!dangling.empty()) {
        throw BindingError("scenario: dangling ids: " + join(dangling));
    }

    auto build = [&](const ScenarioStrategy& entry) {
        Strategy strategy;
        strategy.label = entry.label;
        for (const std::string& duty_id : entry.duty_ids) {
            strategy.duties.push_back(*declared.at(duty_id));
        }
        for (const auto& [duty_id, periods] : entry.active_periods) {
            strategy.active[duty_id] = std::set<int>(periods.begin(), periods.end());
        }
        bind_check(strategy, panel);
        return strategy;
    };

    BoundScenario bound;
    bound.window = file.window;
    bound.baseline = build(file.strategies[0]);
    // A single-strategy scenario compares the strategy against its own
    // sanctioned run.
    bound.alt = file.strategies.size() > 1 ? build(file.strategies[1]) : bound.baseline;
    bound.schedule.blocks = file.blocks;
    bound.budget = file.budget;
    bound.economic = file.economic;
    return bound;
}

}  // namespace corrind
