#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>

#include "corrind/csv.hpp"
#include "corrind/format.hpp"
#include "corrind/indicators.hpp"
#include "corrind/report.hpp"
#include "corrind/scenario.hpp"
#include "corrind/svg.hpp"
#include "corrind/synth.hpp"

#ifdef _WIN32
#include <io.h>
#define CORRIND_ISATTY _isatty
#define CORRIND_FILENO _fileno
#else
#include <unistd.h>
#define CORRIND_ISATTY isatty
#define CORRIND_FILENO fileno
#endif

namespace {

using namespace corrind;

// Exit codes: 0 success, 2 input/parse, 3 semantic/validation, 4 output I/O.
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitIo = 4;

bool use_color() {
    return CORRIND_ISATTY(CORRIND_FILENO(stderr)) != 0 &&
           std::getenv("NO_COLOR") == nullptr;
}

void print_error(const std::string& message) {
    if (use_color()) {
        std::cerr << "\x1b[31merror:\x1b[0m " << message << '\n';
    } else {
        std::cerr << "error: " << message << '\n';
    }
}

SynthConfig read_synth_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
        SynthConfig config;
        if (!doc.contains("n")) {
            throw ParseError(path + ": missing field 'n'");
        }
        if (!doc.contains("t_max")) {
            throw ParseError(path + ": missing field 't_max'");
        }
        config.n = static_cast<int>(doc["n"].get<long long>());
        config.t_max = static_cast<int>(doc["t_max"].get<long long>());
        config.m = static_cast<int>(doc.value("m", 1LL));
        config.loading_scale = doc.value("loading_scale", 1.0);
        config.noise_scale = doc.value("noise_scale", 1.0);
        config.seed = doc.value("seed", std::uint64_t{0});
        if (doc.contains("events")) {
            for (std::size_t e = 0; e < doc["events"].size(); ++e) {
                const nlohmann::json& node = doc["events"][e];
                ShockEvent event;
                if (!node.contains("period")) {
                    throw ParseError(path + ": events[" + std::to_string(e) +
                                     "] missing field 'period'");
                }
                event.period = static_cast<int>(node["period"].get<long long>());
                event.fraction = node.value("fraction", 1.0);
                event.multiplier = node.value("multiplier", 1.0);
                config.events.push_back(event);
            }
        }
        return config;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(path + ": " + err.what());
    }
}

int cmd_gen(const std::string& config_path, const std::string& out_path, bool seed_given,
            std::uint64_t seed) {
    SynthConfig config = read_synth_config(config_path);
    if (seed_given) {
        config.seed = seed;
    }
    const SeriesPanel panel = generate_panel(config);
    write_panel_csv_file(out_path, panel);
    std::cout << "n=" << config.n << " t_max=" << config.t_max << " seed=" << config.seed
              << '\n';
    return 0;
}

int cmd_analyze(const std::string& panel_path, int k, const std::string& mode,
                const std::string& out_path) {
    const SeriesPanel panel = read_panel_csv_file(panel_path);
    WindowSpec spec;
    spec.k = k;
    spec.mode = correlation_mode_from_string(mode);
    const IndicatorTrace trace = indicator_trace(panel, spec);
    write_trace_csv_file(out_path, trace, panel.parameter_ids());
    std::cout << "g_total=" << format_double(trace.g_total) << '\n';
    return 0;
}

int cmd_compare(const std::string& panel_path, const std::string& scenario_path,
                const std::string& out_path, const std::string& plot_dir) {
    const SeriesPanel panel = read_panel_csv_file(panel_path);
    const ScenarioFile file = read_scenario_file(scenario_path);
    BoundScenario scenario = bind_scenario(file, panel);

    ScenarioReport report = compare_strategies(panel, scenario.baseline, scenario.alt,
                                               scenario.schedule, scenario.window,
                                               scenario.budget);
    report.economic_deltas = scenario.economic;
    write_report_file(out_path, report);

    if (!plot_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(plot_dir, ec);
        if (ec) {
            throw IoError("plots: cannot create directory '" + plot_dir + "': " + ec.message());
        }
        const std::filesystem::path dir(plot_dir);
        for (int which = 0; which < 2; ++which) {
            const std::string name = which == 0 ? "baseline.csv" : "alt.csv";
            std::ofstream out(dir / name);
            if (!out) {
                throw IoError("plots: cannot open '" + (dir / name).string() +
                              "' for writing");
            }
            out << "epoch,total\n";
            const Eigen::VectorXd& totals = report.epoch_totals[static_cast<std::size_t>(which)];
            for (std::size_t e = 0; e < report.epochs.size(); ++e) {
                out << report.epochs[e] << ',' << format_double(totals(static_cast<Index>(e)))
                    << '\n';
            }
            if (!out) {
                throw IoError("plots: write failed for '" + (dir / name).string() + "'");
            }
        }
        write_overlay_chart_file((dir / "overlay.svg").string(), report);
    }

    std::cout << "g_baseline=" << format_double(report.g_values[0]) << '\n';
    std::cout << "g_sanctioned=" << format_double(report.g_values[1]) << '\n';
    std::cout << "delta_g=" << format_double(report.delta_g) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral correlation indicators for enterprise panel series"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic panel CSV");
    gen->add_option("--config", config_path, "Generator config (JSON)")->required();
    gen->add_option("--out", out_path, "Output panel CSV path")->required();
    CLI::Option* seed_opt = gen->add_option("--seed", seed, "Override the config seed");

    std::string panel_path;
    std::string mode = "pearson";
    int k = 6;
    std::string trace_path;
    CLI::App* analyze = app.add_subcommand("analyze", "Compute the indicator trace of a panel");
    analyze->add_option("--panel", panel_path, "Panel CSV path")->required();
    analyze->add_option("--k", k, "Window length in periods")->required();
    analyze->add_option("--mode", mode, "Correlation mode: pearson or literal")->required();
    analyze->add_option("--out", trace_path, "Output trace CSV path")->required();

    std::string scenario_path;
    std::string report_path;
    std::string plot_dir;
    CLI::App* compare = app.add_subcommand("compare", "Compare strategies under sanctions");
    compare->add_option("--panel", panel_path, "Panel CSV path")->required();
    compare->add_option("--scenario", scenario_path, "Scenario file (JSON)")->required();
    compare->add_option("--out", report_path, "Output report path (JSON)")->required();
    compare->add_option("--plots", plot_dir, "Directory for plot data and SVG chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        app.exit(e);
        return kExitParse;
    }

    try {
        if (gen->parsed()) {
            return cmd_gen(config_path, out_path, seed_opt->count() > 0, seed);
        }
        if (analyze->parsed()) {
            return cmd_analyze(panel_path, k, mode, trace_path);
        }
        return cmd_compare(panel_path, scenario_path, report_path, plot_dir);
    } catch (const ParseError& err) {
        print_error(err.what());
        return kExitParse;
    } catch (const ValidationError& err) {
        print_error(err.what());
        return kExitParse;
    } catch (const IoError& err) {
        print_error(err.what());
        return kExitIo;
    } catch (const Error& err) {
        // Binding, schedule, range, dimension, insufficient-data faults are
        // semantic: the inputs parsed but do not fit together.
        print_error(err.what());
        return kExitSemantic;
    } catch (const std::exception& err) {
        print_error(err.what());
        return 1;
    }
}
