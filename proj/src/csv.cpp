#include "corrind/csv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "corrind/format.hpp"

namespace corrind {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

SeriesPanel read_panel_csv(std::istream& in, const std::string& source_name) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(source_name + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    const std::vector<std::string> header = split_line(line);
    if (header.empty() || header[0] != "period") {
        throw ParseError(source_name + ": header must start with 'period'");
    }
    if (header.size() < 2) {
        throw ParseError(source_name + ": header names no parameters");
    }
    std::vector<std::string> ids(header.begin() + 1, header.end());
    const std::size_t n = ids.size();

    std::vector<std::vector<double>> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;  // tolerate a trailing blank line
        }
        const std::vector<std::string> fields = split_line(line);
        const std::string context = source_name + ":" + std::to_string(line_no);
        if (fields.size() != n + 1) {
            throw ParseError(context + ": expected " + std::to_string(n + 1) +
                             " fields, got " + std::to_string(fields.size()));
        }
        const long long period = parse_int(fields[0], context + " period column");
        if (period != static_cast<long long>(rows.size()) + 1) {
            throw ParseError(context + ": period " + std::to_string(period) +
                             " out of order, expected " + std::to_string(rows.size() + 1));
        }
        std::vector<double> row(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double value = parse_double(fields[j + 1], context + " column '" + ids[j] + "'");
            if (!std::isfinite(value)) {
                throw ParseError(context + ": column '" + ids[j] + "' is not finite");
            }
            row[j] = value;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(source_name + ": no data rows");
    }

    Eigen::MatrixXd values(static_cast<Index>(n), static_cast<Index>(rows.size()));
    for (std::size_t t = 0; t < rows.size(); ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            values(static_cast<Index>(j), static_cast<Index>(t)) = rows[t][j];
        }
    }
    try {
        return SeriesPanel(std::move(ids), std::move(values));
    } catch (const ValidationError& err) {
        throw ParseError(source_name + ": " + err.what());
    }
}

SeriesPanel read_panel_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open panel file '" + path + "'");
    }
    return read_panel_csv(in, path);
}

void write_panel_csv(std::ostream& out, const SeriesPanel& panel) {
    out << "period";
    for (const std::string& id : panel.parameter_ids()) {
        out << ',' << id;
    }
    out << '\n';
    for (int t = 1; t <= panel.period_count(); ++t) {
        out << t;
        for (Index i = 0; i < panel.parameter_count(); ++i) {
            out << ',' << format_double(panel.value(i, t));
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("panel: write failed");
    }
}

void write_panel_csv_file(const std::string& path, const SeriesPanel& panel) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("panel: cannot open '" + path + "' for writing");
    }
    write_panel_csv(out, panel);
}

void write_trace_csv(std::ostream& out, const IndicatorTrace& trace,
                     const std::vector<std::string>& parameter_ids) {
    if (static_cast<Index>(parameter_ids.size()) != trace.g.cols()) {
        throw DimensionError("trace: " + std::to_string(parameter_ids.size()) +
                             " parameter ids for " + std::to_string(trace.g.cols()) +
                             " indicator columns");
    }
    out << "epoch";
    for (const std::string& id : parameter_ids) {
        out << ',' << id;
    }
    out << '\n';
    for (std::size_t e = 0; e < trace.epochs.size(); ++e) {
        out << trace.epochs[e];
        for (Index i = 0; i < trace.g.cols(); ++i) {
            out << ',' << format_double(trace.g(static_cast<Index>(e), i));
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("trace: write failed");
    }
}

void write_trace_csv_file(const std::string& path, const IndicatorTrace& trace,
                          const std::vector<std::string>& parameter_ids) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("trace: cannot open '" + path + "' for writing");
    }
    write_trace_csv(out, trace, parameter_ids);
}

}  // namespace corrind
