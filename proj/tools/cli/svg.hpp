#pragma once

#include <string>
#include <vector>

namespace qwalk::cli::svg {

struct Line {
    std::vector<double> x;
    std::vector<double> y;
    std::string label;
    std::string color = "#1f77b4";
    bool dashed = false;
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Line> lines;
};

// values[i][j] at (x_values[j], y_values[i]); colour scale over [z_min, z_max].
struct Heatmap {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<std::vector<double>> values;
    double z_min = 0.0;
    double z_max = 1.0;
};

std::string render(const LinePlot& plot);
std::string render(const Heatmap& map);

// Throws std::runtime_error if the file cannot be written.
void write_file(const std::string& path, const std::string& svg);

}  // namespace qwalk::cli::svg
