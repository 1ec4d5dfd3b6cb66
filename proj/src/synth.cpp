#include "corrind/synth.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "corrind/counter_rng.hpp"
#include "corrind/errors.hpp"

namespace corrind {

void validate(const SynthConfig& config) {
    if (config.n < 1) {
        throw ValidationError("synth config: n must be at least 1, got " +
                              std::to_string(config.n));
    }
    if (config.t_max < 1) {
        throw ValidationError("synth config: t_max must be at least 1, got " +
                              std::to_string(config.t_max));
    }
    if (config.m < 1 || config.m > config.n) {
        throw ValidationError("synth config: m must be in 1..n, got m=" +
                              std::to_string(config.m) + " with n=" +
                              std::to_string(config.n));
    }
    if (!(config.loading_scale > 0.0)) {
        throw ValidationError("synth config: loading_scale must be positive");
    }
    if (!(config.noise_scale > 0.0)) {
        throw ValidationError("synth config: noise_scale must be positive");
    }
    for (std::size_t e = 0; e < config.events.size(); ++e) {
        const ShockEvent& event = config.events[e];
        if (event.period < 1 || event.period > config.t_max) {
            throw ValidationError("synth config: events[" + std::to_string(e) +
                                  "].period must be in 1..t_max, got " +
                                  std::to_string(event.period));
        }
        if (event.fraction < 0.0 || event.fraction > 1.0) {
            throw ValidationError("synth config: events[" + std::to_string(e) +
                                  "].fraction must be in [0, 1], got " +
                                  std::to_string(event.fraction));
        }
    }
}

SeriesPanel generate_panel(const SynthConfig& config) {
    validate(config);
    using rng::Stream;

    const int n = config.n;
    const int t_max = config.t_max;
    const int m = config.m;

    Eigen::MatrixXd values(n, t_max);
    // Every cell is an explicit sum over ascending f, each term drawn by
    // coordinate, so evaluation order and parallelism cannot change bits.
    for (int i = 0; i < n; ++i) {
        for (int t = 1; t <= t_max; ++t) {
            double cell = 0.0;
            for (int f = 0; f < m; ++f) {
                const double loading =
                    config.loading_scale *
                    rng::normal01(config.seed, Stream::loading, std::uint64_t(i),
                                  std::uint64_t(f));
                const double factor =
                    config.loading_scale *
                    rng::normal01(config.seed, Stream::factor, std::uint64_t(f),
                                  std::uint64_t(t));
                cell += loading * factor;
            }
            cell += config.noise_scale *
                    rng::normal01(config.seed, Stream::noise, std::uint64_t(i),
                                  std::uint64_t(t));
            values(i, t - 1) = cell;
        }
    }

    // Each event multiplies its affected rows from the event period onward.
    for (std::size_t e = 0; e < config.events.size(); ++e) {
        const ShockEvent& event = config.events[e];
        for (int i = 0; i < n; ++i) {
            const double pick = rng::uniform01(config.seed, Stream::event_pick,
                                               std::uint64_t(e), std::uint64_t(i));
            if (pick < event.fraction) {
                for (int t = event.period; t <= t_max; ++t) {
                    values(i, t - 1) *= event.multiplier;
                }
            }
        }
    }

    std::vector<std::string> ids;
    ids.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        std::string id = std::to_string(i);
        ids.push_back("p" + std::string(4 - std::min<std::size_t>(4, id.size()), '0') + id);
    }
    return SeriesPanel(std::move(ids), std::move(values));
}

}  // namespace corrind
