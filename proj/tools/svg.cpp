#include "svg.hpp"

#include <cstdio>

namespace ratrange::svg {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render(const std::vector<Polyline>& lines, const std::vector<Marker>& marks,
                   double re_lo, double re_hi, double im_lo, double im_hi,
                   int width_px) {
    const double w = re_hi - re_lo, h = im_hi - im_lo;
    const int height_px = int(width_px * (h / w) + 0.5);
    const double sx = width_px / w, sy = height_px / h;
    auto X = [&](double x) { return (x - re_lo) * sx; };
    auto Y = [&](double y) { return (im_hi - y) * sy; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width_px) + "\" height=\"" + std::to_string(height_px) +
           "\" viewBox=\"0 0 " + std::to_string(width_px) + " " +
           std::to_string(height_px) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    if (re_lo < 0.0 && re_hi > 0.0)
        out += "<line x1=\"" + fmt(X(0)) + "\" y1=\"0\" x2=\"" + fmt(X(0)) +
               "\" y2=\"" + std::to_string(height_px) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    if (im_lo < 0.0 && im_hi > 0.0)
        out += "<line x1=\"0\" y1=\"" + fmt(Y(0)) + "\" x2=\"" +
               std::to_string(width_px) + "\" y2=\"" + fmt(Y(0)) +
               "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (const auto& line : lines) {
        if (line.pts.size() < 2) continue;
        out += "<polyline fill=\"none\" stroke=\"" + line.color +
               "\" stroke-width=\"" + fmt(line.width) + "\" points=\"";
        for (const auto& [x, y] : line.pts) out += fmt(X(x)) + "," + fmt(Y(y)) + " ";
        out += "\"/>\n";
    }
    for (const auto& m : marks)
        out += "<circle cx=\"" + fmt(X(m.x)) + "\" cy=\"" + fmt(Y(m.y)) + "\" r=\"" +
               fmt(m.radius) + "\" fill=\"" + m.color + "\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace ratrange::svg
