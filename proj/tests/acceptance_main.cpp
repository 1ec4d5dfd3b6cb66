// Acceptance gate: every criterion prints exactly one [PASS]/[FAIL] line.
// Run by ctest; exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "corrind/correlation.hpp"
#include "corrind/csv.hpp"
#include "corrind/counter_rng.hpp"
#include "corrind/indicators.hpp"
#include "corrind/report.hpp"
#include "corrind/stats.hpp"
#include "corrind/strategy.hpp"
#include "corrind/synth.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

#ifndef _WIN32
#include <sys/resource.h>
#include <sys/wait.h>
#endif

using namespace corrind;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = CORRIND_FIXTURE_DIR;
bool g_any_failed = false;

void report(const std::string& name, bool passed, const std::string& detail) {
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) {
        std::cout << " — " << detail;
    }
    std::cout << '\n';
    if (!passed) {
        g_any_failed = true;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool rel_close(double a, double b, double rel, double* worst = nullptr) {
    const double diff = std::abs(a - b);
    const double scale = std::max(std::abs(a), std::abs(b));
    const double err = scale > 0.0 ? diff / scale : diff;
    if (worst != nullptr && err > *worst) {
        *worst = err;
    }
    return diff <= rel * scale || diff == 0.0;
}

// ---------------------------------------------------------------------------
// 1. Oracle equivalence on randomized panels, both modes.

void criterion_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::uint64_t run = 0; run < 50; ++run) {
        const auto words = rng::draw_block(900 + run, rng::Stream::event_pick, run, 0);
        const int n = 1 + int(words[0] % 10);        // <= 10 parameters
        const int t_max = 5 + int(words[1] % 26);    // <= 30 periods
        const int k = 2 + int((words[0] >> 32) % 5); // window 2..6
        if (k > t_max) {
            continue;
        }
        const SeriesPanel panel = testsupport::random_panel(1000 + run, n, t_max);
        const oracle::Grid grid = testsupport::to_grid(panel.values());
        for (bool pearson : {true, false}) {
            const WindowSpec spec{.k = k, .mode = pearson ? CorrelationMode::pearson
                                                          : CorrelationMode::literal};
            const IndicatorTrace trace = indicator_trace(panel, spec);
            const oracle::Trace expected = oracle::trace(grid, k, pearson);
            if (trace.epochs != expected.epochs) {
                report("oracle equivalence", false, "epoch grids differ");
                return;
            }
            for (std::size_t e = 0; e < expected.epochs.size(); ++e) {
                for (int i = 0; i < n; ++i) {
                    if (!rel_close(trace.g(Index(e), i), expected.g[e][std::size_t(i)], 1e-9,
                                   &worst)) {
                        report("oracle equivalence", false,
                               "G mismatch at run " + std::to_string(run));
                        return;
                    }
                }
            }
            if (!rel_close(trace.g_total, expected.g_total, 1e-9, &worst)) {
                report("oracle equivalence", false, "g_total mismatch");
                return;
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << "50 randomized panels, both modes, max rel err " << worst << ", "
           << elapsed << "s";
    report("oracle equivalence", elapsed < 10.0, detail.str());
}

// ---------------------------------------------------------------------------
// 2. Incremental path equals the batch path on the 100x52 fixture.

void criterion_incremental_equals_batch() {
    const SeriesPanel panel = read_panel_csv_file(kFixtures + "/panel_100x52.csv");
    double worst = 0.0;
    for (auto mode : {CorrelationMode::pearson, CorrelationMode::literal}) {
        const WindowSpec spec{.k = 6, .mode = mode};
        const IndicatorTrace batch =
            indicator_trace(panel, spec, TraceOptions{.path = TracePath::batch});
        const IndicatorTrace inc =
            indicator_trace(panel, spec, TraceOptions{.path = TracePath::incremental});
        for (Index e = 0; e < batch.g.rows(); ++e) {
            for (Index i = 0; i < batch.g.cols(); ++i) {
                if (!rel_close(batch.g(e, i), inc.g(e, i), 1e-9, &worst)) {
                    report("incremental matches batch", false,
                           "entry mismatch in " + to_string(mode));
                    return;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "100x52 panel, k=6, both modes, max rel err " << worst;
    report("incremental matches batch", true, detail.str());
}

// ---------------------------------------------------------------------------
// 3. Pearson invariants: symmetry, bounds, rescaling, permutation.

void criterion_pearson_invariants() {
    for (std::uint64_t run = 0; run < 10; ++run) {
        const SeriesPanel panel = testsupport::random_panel(2000 + run, 6, 18);
        const WindowSpec spec{.k = 6};

        for (int epoch = first_epoch(spec); epoch <= last_epoch(panel); ++epoch) {
            const Eigen::MatrixXd r =
                pearson_correlation<double>(build_window(panel, epoch, spec).rows);
            for (Index i = 0; i < r.rows(); ++i) {
                for (Index j = 0; j < r.cols(); ++j) {
                    if (r(i, j) != r(j, i)) {
                        report("pearson invariants", false, "symmetry broken");
                        return;
                    }
                    if (std::abs(r(i, j)) > 1.0 + 1e-12) {
                        report("pearson invariants", false, "|r| above 1");
                        return;
                    }
                }
            }
        }

        const IndicatorTrace base = indicator_trace(panel, spec);

        // Positive per-parameter rescaling must not move G_i(t).
        Eigen::MatrixXd scaled = panel.values();
        for (Index i = 0; i < scaled.rows(); ++i) {
            const double factor =
                0.01 + 500.0 * rng::uniform01(3000 + run, rng::Stream::loading,
                                              std::uint64_t(i), 0);
            scaled.row(i) *= factor;
        }
        const IndicatorTrace rescaled = indicator_trace(panel.with_values(scaled), spec);
        for (Index e = 0; e < base.g.rows(); ++e) {
            for (Index i = 0; i < base.g.cols(); ++i) {
                if (!rel_close(base.g(e, i), rescaled.g(e, i), 1e-9)) {
                    report("pearson invariants", false, "rescaling moved G");
                    return;
                }
            }
        }

        // Parameter permutation permutes G_i(t) and preserves the total.
        std::vector<Index> perm(6);
        std::iota(perm.begin(), perm.end(), Index(0));
        for (std::size_t i = perm.size(); i > 1; --i) {
            const auto words = rng::draw_block(4000 + run, rng::Stream::factor, i, 0);
            std::swap(perm[i - 1], perm[words[0] % i]);
        }
        Eigen::MatrixXd permuted(6, 18);
        std::vector<std::string> ids(6);
        for (Index i = 0; i < 6; ++i) {
            permuted.row(perm[std::size_t(i)]) = panel.values().row(i);
            ids[std::size_t(perm[std::size_t(i)])] =
                panel.parameter_ids()[std::size_t(i)];
        }
        const IndicatorTrace shuffled = indicator_trace(SeriesPanel(ids, permuted), spec);
        for (Index e = 0; e < base.g.rows(); ++e) {
            for (Index i = 0; i < 6; ++i) {
                if (!rel_close(base.g(e, i), shuffled.g(e, perm[std::size_t(i)]), 1e-9)) {
                    report("pearson invariants", false, "permutation broke G");
                    return;
                }
            }
        }
        if (!rel_close(base.g_total, shuffled.g_total, 1e-9)) {
            report("pearson invariants", false, "permutation moved g_total");
            return;
        }
    }
    report("pearson invariants", true,
           "symmetry, |r| bound, rescaling, permutation over 10 panels");
}

// ---------------------------------------------------------------------------
// 4. Sanction semantics on randomized scenarios.

void criterion_sanction_semantics() {
    for (std::uint64_t run = 0; run < 20; ++run) {
        const auto words = rng::draw_block(5000 + run, rng::Stream::event_pick, run, 1);
        const int n = 4 + int(words[0] % 5);
        const int t_max = 16 + int(words[1] % 9);
        const int k = 6;
        const SeriesPanel panel = testsupport::random_panel(6000 + run, n, t_max);

        Strategy strategy;
        strategy.label = "alt";
        std::vector<std::vector<std::size_t>> duty_params;
        for (int d = 0; d < 3; ++d) {
            Duty duty;
            duty.duty_id = "duty" + std::to_string(d);
            std::vector<std::size_t> rows;
            for (int i = 0; i < n; ++i) {
                if (rng::uniform01(7000 + run, rng::Stream::loading, std::uint64_t(d),
                                   std::uint64_t(i)) < 0.4) {
                    rows.push_back(std::size_t(i));
                }
            }
            if (rows.empty()) {
                rows.push_back(std::size_t(d % n));
            }
            for (std::size_t row : rows) {
                duty.mapped_parameters.push_back(panel.parameter_ids()[row]);
            }
            duty_params.push_back(rows);
            strategy.duties.push_back(duty);
        }

        SanctionSchedule schedule;
        std::vector<oracle::BlockEntry> entries;
        for (int b = 0; b < 3; ++b) {
            const auto w = rng::draw_block(8000 + run, rng::Stream::factor,
                                           std::uint64_t(b), 2);
            const int duty_index = int(w[0] % 3);
            const int from = 1 + int(w[1] % std::uint64_t(t_max));
            const int to = from + int((w[0] >> 32) % 12);  // may exceed t_max
            schedule.blocks.push_back(
                {.duty_id = "duty" + std::to_string(duty_index), .from = from, .to = to});
            entries.push_back(
                {.parameters = duty_params[std::size_t(duty_index)], .from = from, .to = to});
        }

        const SeriesPanel once = apply_sanctions(panel, strategy, schedule);
        const SeriesPanel twice = apply_sanctions(once, strategy, schedule);
        if (!testsupport::same_values(once.values(), twice.values())) {
            report("sanction semantics", false, "not idempotent");
            return;
        }

        const auto cells = oracle::blocked_cells(entries, t_max);
        if (count_blocked_cells(panel, strategy, schedule) !=
            static_cast<long long>(cells.size())) {
            report("sanction semantics", false, "blocked-cell count off");
            return;
        }
        auto blocked = [&cells](Index i, int t) {
            for (const auto& cell : cells) {
                if (cell.first == std::size_t(i) && cell.second == t) {
                    return true;
                }
            }
            return false;
        };
        for (Index i = 0; i < n; ++i) {
            for (int t = 1; t <= t_max; ++t) {
                const double expected = blocked(i, t) ? 0.0 : panel.value(i, t);
                if (once.value(i, t) != expected) {
                    report("sanction semantics", false, "masking locality broken");
                    return;
                }
            }
        }

        // Null comparison: an empty schedule changes nothing, exactly.
        const ScenarioReport null_report = compare_strategies(
            panel, strategy, strategy, SanctionSchedule{}, WindowSpec{.k = k});
        if (null_report.delta_g != 0.0) {
            report("sanction semantics", false, "empty schedule moved delta_g");
            return;
        }

        // A parameter blocked across a whole window is silent at that epoch.
        SanctionSchedule full_window;
        full_window.blocks.push_back({.duty_id = "duty0", .from = 1, .to = k});
        const SeriesPanel silenced = apply_sanctions(panel, strategy, full_window);
        const IndicatorTrace trace = indicator_trace(silenced, WindowSpec{.k = k});
        for (std::size_t row : duty_params[0]) {
            if (trace.g(0, Index(row)) != 0.0) {
                report("sanction semantics", false, "blocked parameter not silenced");
                return;
            }
        }
    }
    report("sanction semantics", true,
           "locality, idempotence, union counts, null delta, silencing over 20 scenarios");
}

// ---------------------------------------------------------------------------
// 5. Scheduled comparison on a 200x52 panel.

void criterion_schedule_scenario() {
    SynthConfig config;
    config.n = 200;
    config.t_max = 52;
    config.m = 4;
    config.loading_scale = 1.0;
    config.noise_scale = 0.3;
    config.seed = 20240818;
    config.events.push_back({.period = 34, .fraction = 0.5, .multiplier = 3.0});
    const SeriesPanel panel = generate_panel(config);

    Strategy baseline;
    baseline.label = "V_1 baseline";
    Strategy alt;
    alt.label = "V_2 sanctions";
    std::vector<oracle::BlockEntry> entries;
    const int intervals[3][2] = {{1, 19}, {38, 42}, {50, 54}};
    for (int d = 0; d < 3; ++d) {
        Duty duty;
        duty.duty_id = "duty" + std::to_string(d);
        std::vector<std::size_t> rows;
        for (int j = 0; j < 4; ++j) {
            const std::size_t row = std::size_t(4 * d + j);
            duty.mapped_parameters.push_back(panel.parameter_ids()[row]);
            rows.push_back(row);
        }
        baseline.duties.push_back(duty);
        alt.duties.push_back(duty);
        entries.push_back({.parameters = rows, .from = intervals[d][0], .to = intervals[d][1]});
    }
    SanctionSchedule schedule;
    for (int d = 0; d < 3; ++d) {
        schedule.blocks.push_back({.duty_id = "duty" + std::to_string(d),
                                   .from = intervals[d][0],
                                   .to = intervals[d][1]});
    }

    const WindowSpec spec{.k = 6};
    const ScenarioReport result =
        compare_strategies(panel, baseline, alt, schedule, spec);

    const IndicatorTrace trace1 = indicator_trace(panel, spec);
    const IndicatorTrace trace2 =
        indicator_trace(apply_sanctions(panel, alt, schedule), spec);
    const bool delta_nonzero = result.delta_g != 0.0;
    const bool delta_exact = result.delta_g == trace2.g_total - trace1.g_total &&
                             result.delta_g == result.g_values[1] - result.g_values[0];
    const long long expected_cells =
        static_cast<long long>(oracle::blocked_cells(entries, 52).size());
    const bool cells_match = result.blocked_cells == expected_cells;

    std::ostringstream detail;
    detail << "delta_g=" << result.delta_g << ", blocked_cells=" << result.blocked_cells
           << " (expected " << expected_cells << ")";
    report("scheduled comparison at 200x52", delta_nonzero && delta_exact && cells_match,
           detail.str());
}

// ---------------------------------------------------------------------------
// 6 & 7. CLI-level performance and determinism.

std::string cli_binary() {
    const char* bin = std::getenv("CORRIND_BIN");
    return bin == nullptr ? std::string{} : std::string{bin};
}

int run_cli(const std::string& args, const std::string& env = "") {
    const std::string command = env + (env.empty() ? "" : " ") + "'" + cli_binary() + "' " +
                                args + " >/dev/null 2>/dev/null";
    const int status = std::system(command.c_str());
#ifndef _WIN32
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    return status;
#endif
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void criterion_performance() {
    if (cli_binary().empty()) {
        report("performance envelope", false, "CORRIND_BIN not set");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "corrind_acceptance_perf";
    fs::remove_all(dir);
    fs::create_directories(dir);

    bool ok = true;
    std::ostringstream detail;
    double peak_gb_2000 = 0.0;
    for (const int n : {2000, 5000}) {
        const fs::path config = dir / ("gen" + std::to_string(n) + ".json");
        std::ofstream(config) << "{\"n\": " << n
                              << ", \"t_max\": 52, \"m\": 8, \"loading_scale\": 1.0, "
                                 "\"noise_scale\": 0.5, \"seed\": 7}";
        const fs::path panel = dir / ("panel" + std::to_string(n) + ".csv");
        const fs::path trace = dir / ("trace" + std::to_string(n) + ".csv");
        if (run_cli("gen --config '" + config.string() + "' --out '" + panel.string() +
                    "'") != 0) {
            report("performance envelope", false, "gen failed at n=" + std::to_string(n));
            return;
        }
        const auto start = std::chrono::steady_clock::now();
        const int code = run_cli("analyze --panel '" + panel.string() +
                                 "' --k 6 --mode pearson --out '" + trace.string() + "'");
        const double elapsed = seconds_since(start);
        if (code != 0) {
            report("performance envelope", false, "analyze failed at n=" + std::to_string(n));
            return;
        }
        const double budget = n == 2000 ? 10.0 : 60.0;
        ok = ok && elapsed < budget;
        detail << "n=" << n << ": " << elapsed << "s (< " << budget << "s)";
#ifndef _WIN32
        if (n == 2000) {
            struct rusage usage {};
            getrusage(RUSAGE_CHILDREN, &usage);
            peak_gb_2000 = double(usage.ru_maxrss) / (1024.0 * 1024.0);  // KiB -> GiB
            ok = ok && peak_gb_2000 < 2.0;
            detail << ", peak rss " << peak_gb_2000 << " GiB (< 2)";
        }
#endif
        detail << (n == 2000 ? "; " : "");
    }
    report("performance envelope", ok, detail.str());
    fs::remove_all(dir);
}

void criterion_determinism() {
    if (cli_binary().empty()) {
        report("byte determinism", false, "CORRIND_BIN not set");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "corrind_acceptance_det";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path config = dir / "gen.json";
    std::ofstream(config) << R"({"n": 64, "t_max": 52, "m": 4, "noise_scale": 0.4,
        "events": [{"period": 34, "fraction": 0.5, "multiplier": 2.0}], "seed": 99})";
    const fs::path panel_a = dir / "a.csv";
    const fs::path panel_b = dir / "b.csv";
    bool ok = run_cli("gen --config '" + config.string() + "' --out '" + panel_a.string() +
                      "'") == 0 &&
              run_cli("gen --config '" + config.string() + "' --out '" + panel_b.string() +
                      "'") == 0;
    const bool gen_identical = ok && slurp(panel_a) == slurp(panel_b);

    const fs::path trace_a = dir / "ta.csv";
    const fs::path trace_b = dir / "tb.csv";
    ok = ok &&
         run_cli("analyze --panel '" + panel_a.string() + "' --k 6 --mode pearson --out '" +
                     trace_a.string() + "'",
                 "OMP_NUM_THREADS=2") == 0 &&
         run_cli("analyze --panel '" + panel_a.string() + "' --k 6 --mode pearson --out '" +
                     trace_b.string() + "'",
                 "OMP_NUM_THREADS=2") == 0;
    const bool analyze_identical = ok && slurp(trace_a) == slurp(trace_b);

    report("byte determinism", gen_identical && analyze_identical,
           std::string("gen ") + (gen_identical ? "identical" : "differs") + ", analyze " +
               (analyze_identical ? "identical" : "differs"));
    fs::remove_all(dir);
}

// ---------------------------------------------------------------------------
// 8. Event detectability across 100 seeded runs.

void criterion_event_detectability() {
    int detected = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SynthConfig config;
        config.n = 200;
        config.t_max = 52;
        config.m = 4;
        config.loading_scale = 1.0;
        config.noise_scale = 0.3;
        config.seed = seed;
        config.events.push_back({.period = 34, .fraction = 0.5, .multiplier = 8.0});
        const SeriesPanel panel = generate_panel(config);

        // Literal-mode indicators respond to the raw magnitude jump, so the
        // epoch series shifts level at the boundary and stays shifted.
        const IndicatorTrace trace = indicator_trace(
            panel, WindowSpec{.k = 6, .mode = CorrelationMode::literal});
        std::vector<double> before;
        std::vector<double> after;
        for (std::size_t e = 0; e < trace.epochs.size(); ++e) {
            double total = 0.0;
            for (Index i = 0; i < trace.g.cols(); ++i) {
                total += trace.g(Index(e), i);
            }
            (trace.epochs[e] <= 34 ? before : after).push_back(total);
        }
        const stats::WelchResult result = stats::welch_t_test(before, after);
        if (result.p_value < 0.05) {
            ++detected;
        }
    }
    std::ostringstream detail;
    detail << detected << "/100 runs detected at the 0.05 level (need >= 95)";
    report("event detectability", detected >= 95, detail.str());
}

}  // namespace

int main() {
    criterion_oracle_equivalence();
    criterion_incremental_equals_batch();
    criterion_pearson_invariants();
    criterion_sanction_semantics();
    criterion_schedule_scenario();
    criterion_performance();
    criterion_determinism();
    criterion_event_detectability();
    if (g_any_failed) {
        std::cout << "acceptance: FAILED\n";
        return 1;
    }
    std::cout << "acceptance: all criteria passed\n";
    return 0;
}
