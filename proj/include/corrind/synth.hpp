#pragma once

#include <cstdint>
#include <vector>

#include "corrind/panel.hpp"

namespace corrind {

// A step shock: from `period` onward, each affected parameter row is
// multiplied by `multiplier`. Rows are picked per-event with probability
// `fraction` from the event's own counter stream.
struct ShockEvent {
    int period = 1;
    double fraction = 0.0;
    double multiplier = 1.0;
};

struct SynthConfig {
    int n = 0;                      // parameter count
    int t_max = 0;                  // periods
    int m = 1;                      // latent factor count
    double loading_scale = 1.0;
    double noise_scale = 1.0;
    std::vector<ShockEvent> events;
    std::uint64_t seed = 0;
};

// Throws ValidationError naming the failing field.
void validate(const SynthConfig& config);

// Factor model: values(i,t) = sum_f loading(i,f)*factor(f,t) + noise(i,t),
// then events applied in order. Every draw is a pure function of
// (seed, stream, coordinates), so the panel is bit-identical regardless of
// evaluation order or thread count. Parameter ids are "p0001", "p0002", ...
SeriesPanel generate_panel(const SynthConfig& config);

}  // namespace corrind
