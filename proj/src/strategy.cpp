#include "corrind/strategy.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace corrind {

namespace {

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

const Duty* find_duty(const Strategy& strategy, const std::string& duty_id) {
    for (const Duty& duty : strategy.duties) {
        if (duty.duty_id == duty_id) {
            return &duty;
        }
    }
    return nullptr;
}

}  // namespace

bool Strategy::duty_active(const Duty& duty, int period) const {
    const auto it = active.find(duty.duty_id);
    if (it == active.end()) {
        return true;  // no activation set: performed every period
    }
    return it->second.count(period) > 0;
}

void bind_check(const Strategy& strategy, const SeriesPanel& panel) {
    std::unordered_set<std::string> seen;
    std::vector<std::string> unknown;
    for (const Duty& duty : strategy.duties) {
        if (!seen.insert(duty.duty_id).second) {
            throw ValidationError("strategy '" + strategy.label + "': duplicate duty id '" +
                                  duty.duty_id + "'");
        }
        if (duty.mapped_parameters.empty()) {
            throw ValidationError("strategy '" + strategy.label + "': duty '" + duty.duty_id +
                                  "' maps no parameters");
        }
        for (const std::string& parameter_id : duty.mapped_parameters) {
            if (panel.index_of(parameter_id) < 0) {
                unknown.push_back(duty.duty_id + " -> " + parameter_id);
            }
        }
    }
    if (!unknown.empty()) {
        throw BindingError("strategy '" + strategy.label +
                           "': unknown panel parameters: " + join(unknown));
    }
    for (const auto& [duty_id, periods] : strategy.active) {
        if (find_duty(strategy, duty_id) == nullptr) {
            throw ValidationError("strategy '" + strategy.label +
                                  "': activation periods for unknown duty '" + duty_id + "'");
        }
        for (int period : periods) {
            if (period < 1 || period > panel.period_count()) {
                throw BindingError("strategy '" + strategy.label + "': duty '" + duty_id +
                                   "' active at period " + std::to_string(period) +
                                   ", panel has 1.." +
                                   std::to_string(panel.period_count()));
            }
        }
    }
}

double strategy_cost(const Strategy& strategy, const SeriesPanel& panel, int period) {
    if (period < 1 || period > panel.period_count()) {
        throw RangeError("strategy_cost: period " + std::to_string(period) +
                         " outside 1.." + std::to_string(panel.period_count()));
    }
    bind_check(strategy, panel);
    double total = 0.0;
    for (const Duty& duty : strategy.duties) {
        if (!duty.compliance || !strategy.duty_active(duty, period)) {
            continue;
        }
        for (const std::string& parameter_id : duty.mapped_parameters) {
            total += panel.value(panel.index_of(parameter_id), period);
        }
    }
    return total;
}

double aggregate_strategy_cost(const Strategy& strategy, const SeriesPanel& panel) {
    bind_check(strategy, panel);
    double total = 0.0;
    for (int t = 1; t <= panel.period_count(); ++t) {
        double at_t = 0.0;
        for (const Duty& duty : strategy.duties) {
            if (!duty.compliance || !strategy.duty_active(duty, t)) {
                continue;
            }
            for (const std::string& parameter_id : duty.mapped_parameters) {
                at_t += panel.value(panel.index_of(parameter_id), t);
            }
        }
        total += at_t;
    }
    return total;
}

SeriesPanel apply_sanctions(const SeriesPanel& panel, const Strategy& strategy,
                            const SanctionSchedule& schedule) {
    bind_check(strategy, panel);
    Eigen::MatrixXd values = panel.values();
    for (std::size_t b = 0; b < schedule.blocks.size(); ++b) {
        const SanctionBlock& block = schedule.blocks[b];
        const Duty* duty = find_duty(strategy, block.duty_id);
        if (duty == nullptr) {
            throw ScheduleError("blocks[" + std::to_string(b) + "]: duty '" + block.duty_id +
                                "' not in strategy '" + strategy.label + "'");
        }
        if (block.from > block.to) {
            throw ScheduleError("blocks[" + std::to_string(b) + "]: interval " +
                                std::to_string(block.from) + ".." + std::to_string(block.to) +
                                " is inverted");
        }
        // Intervals may extend past the panel; only the overlap is zeroed.
        const int from = std::max(block.from, 1);
        const int to = std::min(block.to, panel.period_count());
        for (const std::string& parameter_id : duty->mapped_parameters) {
            const Index row = panel.index_of(parameter_id);
            for (int t = from; t <= to; ++t) {
                values(row, t - 1) = 0.0;
            }
        }
    }
    return panel.with_values(std::move(values));
}

long long count_blocked_cells(const SeriesPanel& panel, const Strategy& strategy,
                              const SanctionSchedule& schedule) {
    bind_check(strategy, panel);
    std::unordered_set<long long> cells;
    for (std::size_t b = 0; b < schedule.blocks.size(); ++b) {
        const SanctionBlock& block = schedule.blocks[b];
        const Duty* duty = find_duty(strategy, block.duty_id);
        if (duty == nullptr) {
            throw ScheduleError("blocks[" + std::to_string(b) + "]: duty '" + block.duty_id +
                                "' not in strategy '" + strategy.label + "'");
        }
        const int from = std::max(block.from, 1);
        const int to = std::min(block.to, panel.period_count());
        for (const std::string& parameter_id : duty->mapped_parameters) {
            const long long row = panel.index_of(parameter_id);
            for (int t = from; t <= to; ++t) {
                cells.insert(row * (panel.period_count() + 1LL) + t);
            }
        }
    }
    return static_cast<long long>(cells.size());
}

BudgetReport check_budget(const SeriesPanel& panel, const BudgetConstraint& constraint) {
    if (constraint.cap < 0.0) {
        throw ValidationError("budget cap must be nonnegative, got " +
                              std::to_string(constraint.cap));
    }
    BudgetReport report;
    report.scope = constraint.scope;
    if (constraint.scope == BudgetScope::per_period) {
        for (int t = 1; t <= panel.period_count(); ++t) {
            double total = 0.0;
            for (Index i = 0; i < panel.parameter_count(); ++i) {
                total += panel.value(i, t);
            }
            if (total > constraint.cap) {
                report.periods.push_back(t);
            }
        }
    } else {
        double total = 0.0;
        for (int t = 1; t <= panel.period_count(); ++t) {
            for (Index i = 0; i < panel.parameter_count(); ++i) {
                total += panel.value(i, t);
            }
        }
        report.cumulative_exceeded = total > constraint.cap;
    }
    return report;
}

}  // namespace corrind
