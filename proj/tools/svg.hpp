#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ratrange::svg {

struct Polyline {
    std::vector<std::pair<double, double>> pts;  // data coordinates
    std::string color = "#000000";
    double width = 1.0;
};

struct Marker {
    double x, y;
    std::string color = "#000000";
    double radius = 2.0;
};

// Static SVG with y flipped so that data-im grows upwards.
std::string render(const std::vector<Polyline>& lines, const std::vector<Marker>& marks,
                   double re_lo, double re_hi, double im_lo, double im_hi,
                   int width_px = 800);

}  // namespace ratrange::svg
