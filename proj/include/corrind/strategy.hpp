#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "corrind/panel.hpp"

namespace corrind {

// A functional responsibility from a job description, mapped to the cost
// parameters it drives.
struct Duty {
    std::string duty_id;
    std::string position;
    std::string description;
    std::vector<std::string> mapped_parameters;  // nonempty, panel ids at bind time
    bool compliance = true;                      // 1-yes / 0-no
};

// A labeled set of duties with activation periods. A duty absent from
// `active` is performed in every period.
struct Strategy {
    std::string label;
    std::vector<Duty> duties;
    std::map<std::string, std::set<int>> active;  // duty_id -> periods

    bool duty_active(const Duty& duty, int period) const;
};

// One blocking entry: duty `duty_id` is blocked over [from, to] inclusive.
struct SanctionBlock {
    std::string duty_id;
    int from = 1;
    int to = 1;
};

struct SanctionSchedule {
    std::vector<SanctionBlock> blocks;
};

enum class BudgetScope { per_period, cumulative };

struct BudgetConstraint {
    double cap = 0.0;  // >= 0
    BudgetScope scope = BudgetScope::per_period;
};

// Violations of C(X) <= C: per_period scope fills `periods` with every
// violating t; cumulative scope sets `cumulative_exceeded`.
struct BudgetReport {
    BudgetScope scope = BudgetScope::per_period;
    std::vector<int> periods;
    bool cumulative_exceeded = false;

    bool any() const { return cumulative_exceeded || !periods.empty(); }
};

// Validates a strategy against a panel: duty ids unique, mapped parameter
// sets nonempty and resolvable, active periods within 1..t_max. Throws
// BindingError listing every unknown parameter id, ValidationError for
// structural faults.
void bind_check(const Strategy& strategy, const SeriesPanel& panel);

// V(t): sum over duties active at t with compliance set, of the period-t
// values of their mapped parameters. A parameter mapped by several active
// duties counts once per duty.
double strategy_cost(const Strategy& strategy, const SeriesPanel& panel, int period);

// V = sum of strategy_cost over t = 1..t_max.
double aggregate_strategy_cost(const Strategy& strategy, const SeriesPanel& panel);

// Returns a new panel with every (parameter mapped by a blocked duty,
// period in the block's interval intersected with 1..t_max) cell set to 0;
// all other cells bit-identical. Throws ScheduleError for unknown duty ids
// or inverted intervals.
SeriesPanel apply_sanctions(const SeriesPanel& panel, const Strategy& strategy,
                            const SanctionSchedule& schedule);

// Number of distinct (parameter, period) cells the schedule zeroes
// (setwise union over blocks, intervals clamped to the panel).
long long count_blocked_cells(const SeriesPanel& panel, const Strategy& strategy,
                              const SanctionSchedule& schedule);

BudgetReport check_budget(const SeriesPanel& panel, const BudgetConstraint& constraint);

}  // namespace corrind
