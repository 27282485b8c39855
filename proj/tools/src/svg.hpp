#pragma once

#include <string>
#include <utility>
#include <vector>

namespace convdom::cli {

/// Minimal static SVG line plot: one or more polylines in data coordinates,
/// framed by axes with tick labels.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_curve(std::vector<std::pair<double, double>> points, const std::string& color);
    void write(const std::string& path) const;

private:
    std::string title_, x_label_, y_label_;
    std::vector<std::pair<std::vector<std::pair<double, double>>, std::string>> curves_;
};

} // namespace convdom::cli
