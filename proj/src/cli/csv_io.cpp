#include "fluxbcs/cli/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

#include "fluxbcs/error.hpp"

namespace fluxbcs::cli {

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_cell(std::string_view cell, const std::string& source, std::size_t line_no, const char* column) {
    cell = trim(cell);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw ParseError(fmt::format("{}:{}: column {}: '{}' is not a finite number", source, line_no,
                                     column, cell));
    }
    return v;
}

}  // namespace

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

std::vector<fit::ResonancePoint> read_resonance_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError(source + ": empty file, expected header mu_ext,f_ghz[,sigma_ghz]");
    }
    ++line_no;
    auto header = split(line);
    for (auto& h : header) h = trim(h);
    const bool with_sigma = header.size() == 3 && header[2] == "sigma_ghz";
    if (!(header.size() == 2 || with_sigma) || header[0] != "mu_ext" || header[1] != "f_ghz") {
        throw ParseError(fmt::format("{}:1: header must be mu_ext,f_ghz[,sigma_ghz], got '{}'", source,
                                     trim(line)));
    }

    std::vector<fit::ResonancePoint> data;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw ParseError(fmt::format("{}:{}: expected {} columns, got {}", source, line_no,
                                         header.size(), cells.size()));
        }
        fit::ResonancePoint pt;
        pt.mu_ext = parse_cell(cells[0], source, line_no, "mu_ext");
        const double f = parse_cell(cells[1], source, line_no, "f_ghz");
        if (f < 0.0) {
            throw ParseError(fmt::format("{}:{}: f_ghz must be non-negative", source, line_no));
        }
        pt.f = phys::gigahertz(f);
        if (with_sigma) {
            const double s = parse_cell(cells[2], source, line_no, "sigma_ghz");
            if (!(s > 0.0)) {
                throw ParseError(fmt::format("{}:{}: sigma_ghz must be positive", source, line_no));
            }
            pt.sigma = phys::gigahertz(s);
        }
        data.push_back(pt);
    }
    return data;
}

std::vector<fit::ResonancePoint> read_resonance_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open data file " + path);
    }
    return read_resonance_csv(in, path);
}

void write_resonance_csv(std::ostream& out, const std::vector<fit::ResonancePoint>& data) {
    const bool with_sigma = !data.empty() && data.front().sigma.has_value();
    out << (with_sigma ? "mu_ext,f_ghz,sigma_ghz\n" : "mu_ext,f_ghz\n");
    for (const auto& pt : data) {
        out << format_number(pt.mu_ext) << ',' << format_number(phys::in_ghz(pt.f));
        if (with_sigma) {
            out << ',' << format_number(pt.sigma ? phys::in_ghz(*pt.sigma) : 0.0);
        }
        out << '\n';
    }
}

void write_curves_csv(std::ostream& out, const std::vector<CurveSeries>& curves) {
    if (curves.empty()) {
        return;
    }
    const auto& base = curves.front();
    for (const auto& c : curves) {
        if (c.size() != base.size()) {
            throw DomainError("curves must share the same x samples");
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].x != base[i].x) {
                throw DomainError("curves must share the same x samples");
            }
        }
    }
    out << base.x_label();
    for (const auto& c : curves) out << ',' << c.y_label();
    out << '\n';
    for (std::size_t i = 0; i < base.size(); ++i) {
        out << format_number(base[i].x);
        for (const auto& c : curves) out << ',' << format_number(c[i].y);
        out << '\n';
    }
}

}  // namespace fluxbcs::cli
