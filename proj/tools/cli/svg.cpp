#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qwalk::cli::svg {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log = false;

    double transform(double v) const { return log ? std::log10(v) : v; }
    // fraction of the axis length
    double frac(double v) const {
        const double a = transform(lo), b = transform(hi);
        return b > a ? (transform(v) - a) / (b - a) : 0.5;
    }
};

Axis fit_axis(const std::vector<Line>& lines, bool use_x, bool log) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& l : lines) {
        for (double v : use_x ? l.x : l.y) {
            if (!std::isfinite(v) || (log && v <= 0.0)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (!std::isfinite(lo)) lo = log ? 1.0 : 0.0, hi = log ? 10.0 : 1.0;
    if (lo == hi) {
        lo = log ? lo / 2 : lo - 0.5;
        hi = log ? hi * 2 : hi + 0.5;
    }
    return {lo, hi, log};
}

void frame(std::ostringstream& os, const std::string& title, const std::string& xl, const std::string& yl) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
       << "</text>\n"
       << "<text x=\"" << kLeft + (kWidth - kLeft - kRight) / 2 << "\" y=\"" << kHeight - 12
       << "\" text-anchor=\"middle\">" << escape(xl) << "</text>\n"
       << "<text transform=\"translate(18," << kTop + (kHeight - kTop - kBottom) / 2
       << ") rotate(-90)\" text-anchor=\"middle\">" << escape(yl) << "</text>\n";
}

void ticks(std::ostringstream& os, const Axis& ax, bool horizontal) {
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    for (int k = 0; k <= 4; ++k) {
        const double f = k / 4.0;
        const double tv = ax.log ? std::pow(10.0, ax.transform(ax.lo) + f * (ax.transform(ax.hi) - ax.transform(ax.lo)))
                                 : ax.lo + f * (ax.hi - ax.lo);
        if (horizontal) {
            const double x = kLeft + f * pw;
            os << "<line x1=\"" << x << "\" y1=\"" << kTop + ph << "\" x2=\"" << x << "\" y2=\"" << kTop + ph + 5
               << "\" stroke=\"black\"/>\n<text x=\"" << x << "\" y=\"" << kTop + ph + 18
               << "\" text-anchor=\"middle\">" << num(tv) << "</text>\n";
        } else {
            const double y = kTop + ph - f * ph;
            os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft << "\" y2=\"" << y
               << "\" stroke=\"black\"/>\n<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
               << "\" text-anchor=\"end\">" << num(tv) << "</text>\n";
        }
    }
}

}  // namespace

std::string render(const LinePlot& plot) {
    std::ostringstream os;
    frame(os, plot.title, plot.x_label, plot.y_label);
    const Axis ax = fit_axis(plot.lines, true, plot.log_x);
    const Axis ay = fit_axis(plot.lines, false, plot.log_y);
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    ticks(os, ax, true);
    ticks(os, ay, false);

    int legend_row = 0;
    for (const auto& line : plot.lines) {
        os << "<polyline fill=\"none\" stroke=\"" << line.color << "\" stroke-width=\"1.5\""
           << (line.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
        for (std::size_t i = 0; i < line.x.size() && i < line.y.size(); ++i) {
            if (!std::isfinite(line.y[i]) || (plot.log_y && line.y[i] <= 0.0) || (plot.log_x && line.x[i] <= 0.0))
                continue;
            os << num(kLeft + ax.frac(line.x[i]) * pw) << ',' << num(kTop + ph - ay.frac(line.y[i]) * ph) << ' ';
        }
        os << "\"/>\n";
        if (!line.label.empty()) {
            const double y = kTop + 14 + 16 * legend_row++;
            os << "<line x1=\"" << kLeft + pw - 150 << "\" y1=\"" << y - 4 << "\" x2=\"" << kLeft + pw - 125
               << "\" y2=\"" << y - 4 << "\" stroke=\"" << line.color << "\" stroke-width=\"2\"/>\n"
               << "<text x=\"" << kLeft + pw - 120 << "\" y=\"" << y << "\">" << escape(line.label) << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string render(const Heatmap& map) {
    std::ostringstream os;
    frame(os, map.title, map.x_label, map.y_label);
    const double pw = kWidth - kLeft - kRight - 60, ph = kHeight - kTop - kBottom;
    const std::size_t rows = map.values.size();
    const std::size_t cols = rows ? map.values.front().size() : 0;
    const double cw = cols ? pw / cols : 0.0, rh = rows ? ph / rows : 0.0;
    auto colour = [&](double z) {
        double f = map.z_max > map.z_min ? (z - map.z_min) / (map.z_max - map.z_min) : 0.5;
        f = std::clamp(std::isfinite(f) ? f : 0.0, 0.0, 1.0);
        // dark blue -> yellow
        const int r = static_cast<int>(30 + 225 * f), g = static_cast<int>(30 + 200 * f),
                  b = static_cast<int>(120 * (1.0 - f));
        char buf[8];
        std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
        return std::string(buf);
    };
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            // row 0 at the bottom
            os << "<rect x=\"" << num(kLeft + j * cw) << "\" y=\"" << num(kTop + ph - (i + 1) * rh) << "\" width=\""
               << num(cw + 0.5) << "\" height=\"" << num(rh + 0.5) << "\" fill=\"" << colour(map.values[i][j])
               << "\"/>\n";
        }
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    auto edge = [](const std::vector<double>& v) {
        return v.empty() ? Axis{} : Axis{v.front(), v.back(), false};
    };
    const Axis ax = edge(map.x_values), ay = edge(map.y_values);
    for (int k = 0; k <= 4; ++k) {
        const double f = k / 4.0;
        os << "<text x=\"" << num(kLeft + f * pw) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">"
           << num(ax.lo + f * (ax.hi - ax.lo)) << "</text>\n"
           << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(kTop + ph - f * ph + 4) << "\" text-anchor=\"end\">"
           << num(ay.lo + f * (ay.hi - ay.lo)) << "</text>\n";
    }
    // colour bar
    const double bx = kLeft + pw + 20;
    for (int k = 0; k < 50; ++k) {
        const double f = k / 49.0;
        os << "<rect x=\"" << bx << "\" y=\"" << num(kTop + ph - (k + 1) * ph / 50) << "\" width=\"15\" height=\""
           << num(ph / 50 + 0.5) << "\" fill=\"" << colour(map.z_min + f * (map.z_max - map.z_min)) << "\"/>\n";
    }
    os << "<text x=\"" << bx + 18 << "\" y=\"" << kTop + 10 << "\">" << num(map.z_max) << "</text>\n"
       << "<text x=\"" << bx + 18 << "\" y=\"" << kTop + ph << "\">" << num(map.z_min) << "</text>\n"
       << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& svg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write plot to '" + path + "'");
    out << svg;
}

}  // namespace qwalk::cli::svg
