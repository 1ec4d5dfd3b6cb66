#include "corrind/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "corrind/errors.hpp"

namespace corrind {

namespace {

// Fixed-precision coordinate for SVG (layout only, not data fidelity).
std::string coord(double v) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << v;
    return s.str();
}

std::string label_number(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

}  // namespace

void write_overlay_chart(std::ostream& out, const ScenarioReport& report) {
    constexpr double width = 860.0;
    constexpr double height = 440.0;
    constexpr double left = 70.0;
    constexpr double right = 20.0;
    constexpr double top = 40.0;
    constexpr double bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const std::size_t count = report.epochs.size();
    if (count == 0) {
        throw ValidationError("chart: report has no epochs");
    }

    double lo = report.epoch_totals[0].minCoeff();
    double hi = report.epoch_totals[0].maxCoeff();
    lo = std::min(lo, report.epoch_totals[1].minCoeff());
    hi = std::max(hi, report.epoch_totals[1].maxCoeff());
    if (hi == lo) {
        hi = lo + 1.0;  // flat series: give the band some height
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    const int e0 = report.epochs.front();
    const int e1 = report.epochs.back();
    const double x_span = e1 > e0 ? double(e1 - e0) : 1.0;

    auto x_of = [&](int epoch) { return left + plot_w * double(epoch - e0) / x_span; };
    auto y_of = [&](double v) { return top + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
        << "System indicator by epoch</text>\n";

    // Axes.
    out << "  <line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << (top + plot_h) << "\" stroke=\"#333\"/>\n";
    out << "  <line x1=\"" << left << "\" y1=\"" << (top + plot_h) << "\" x2=\""
        << (left + plot_w) << "\" y2=\"" << (top + plot_h) << "\" stroke=\"#333\"/>\n";

    // Y ticks.
    for (int tick = 0; tick <= 4; ++tick) {
        const double v = lo + (hi - lo) * tick / 4.0;
        const double y = y_of(v);
        out << "  <line x1=\"" << (left - 4) << "\" y1=\"" << coord(y) << "\" x2=\""
            << (left + plot_w) << "\" y2=\"" << coord(y)
            << "\" stroke=\"#ddd\" stroke-dasharray=\"3,3\"/>\n";
        out << "  <text x=\"" << (left - 8) << "\" y=\"" << coord(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << label_number(v) << "</text>\n";
    }
    // X ticks: first, middle, last epoch.
    for (int epoch : {e0, (e0 + e1) / 2, e1}) {
        const double x = x_of(epoch);
        out << "  <text x=\"" << coord(x) << "\" y=\"" << (top + plot_h + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << epoch
            << "</text>\n";
    }
    out << "  <text x=\"" << (left + plot_w / 2) << "\" y=\"" << (height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">epoch</text>\n";

    const char* colors[2] = {"#1f77b4", "#d62728"};
    for (int which = 0; which < 2; ++which) {
        const Eigen::VectorXd& totals = report.epoch_totals[static_cast<std::size_t>(which)];
        out << "  <polyline fill=\"none\" stroke=\"" << colors[which]
            << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t e = 0; e < count; ++e) {
            if (e > 0) {
                out << ' ';
            }
            out << coord(x_of(report.epochs[e])) << ','
                << coord(y_of(totals(static_cast<Index>(e))));
        }
        out << "\"/>\n";
        // Legend swatch + label.
        const double ly = top + 14 + 18 * which;
        out << "  <line x1=\"" << (left + plot_w - 170) << "\" y1=\"" << ly << "\" x2=\""
            << (left + plot_w - 140) << "\" y2=\"" << ly << "\" stroke=\"" << colors[which]
            << "\" stroke-width=\"2\"/>\n";
        out << "  <text x=\"" << (left + plot_w - 134) << "\" y=\"" << (ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">"
            << report.strategy_labels[static_cast<std::size_t>(which)] << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) {
        throw IoError("chart: write failed");
    }
}

void write_overlay_chart_file(const std::string& path, const ScenarioReport& report) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("chart: cannot open '" + path + "' for writing");
    }
    write_overlay_chart(out, report);
}

}  // namespace corrind
