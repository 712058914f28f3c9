#include "hn/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace hn {

namespace {

std::string num12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    // "-0" and "-0.0" normalize to "0" so mirrored inputs stay identical.
    std::string s(buf);
    if (s == "-0" || s == "-0.0") s = "0";
    return s;
}

const char* kFills[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756",
                        "#72b7b2", "#b279a2", "#9d755d", "#bab0ac"};

}  // namespace

std::string emit_svg(const std::vector<RatPolytope>& pieces, int ax, int ay) {
    std::vector<Polygon> hulls;
    double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
    bool first = true;
    for (const RatPolytope& P : pieces) {
        Polygon h = project2d(P, ax, ay);
        for (const P2& p : h) {
            double x = rat_to_double(p.x), y = rat_to_double(p.y);
            if (first) {
                xlo = xhi = x;
                ylo = yhi = y;
                first = false;
            } else {
                xlo = std::min(xlo, x);
                xhi = std::max(xhi, x);
                ylo = std::min(ylo, y);
                yhi = std::max(yhi, y);
            }
        }
        hulls.push_back(std::move(h));
    }
    double pad = std::max(xhi - xlo, yhi - ylo) * 0.05;
    if (pad <= 0) pad = 0.5;
    xlo -= pad;
    xhi += pad;
    ylo -= pad;
    yhi += pad;

    // Flip y by hand so the document stays plain polygons in math orientation.
    auto sx = [&](double x) { return num12(x); };
    auto sy = [&](double y) { return num12(yhi + ylo - y); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"";
    out += num12(xlo) + " " + num12(ylo) + " " + num12(xhi - xlo) + " " + num12(yhi - ylo) +
           "\">\n";
    double stroke = (xhi - xlo) / 320.0;
    for (std::size_t i = 0; i < hulls.size(); ++i) {
        const Polygon& h = hulls[i];
        const char* fill = kFills[i % (sizeof kFills / sizeof kFills[0])];
        if (h.empty()) continue;
        if (h.size() == 1) {
            out += "  <circle cx=\"" + sx(rat_to_double(h[0].x)) + "\" cy=\"" +
                   sy(rat_to_double(h[0].y)) + "\" r=\"" + num12(stroke * 2) + "\" fill=\"" +
                   fill + "\"/>\n";
        } else if (h.size() == 2) {
            out += "  <line x1=\"" + sx(rat_to_double(h[0].x)) + "\" y1=\"" +
                   sy(rat_to_double(h[0].y)) + "\" x2=\"" + sx(rat_to_double(h[1].x)) +
                   "\" y2=\"" + sy(rat_to_double(h[1].y)) + "\" stroke=\"" + fill +
                   "\" stroke-width=\"" + num12(stroke) + "\"/>\n";
        } else {
            out += "  <polygon points=\"";
            for (std::size_t j = 0; j < h.size(); ++j) {
                if (j) out += " ";
                out += sx(rat_to_double(h[j].x)) + "," + sy(rat_to_double(h[j].y));
            }
            out += "\" fill=\"" + std::string(fill) + "\" fill-opacity=\"0.45\" stroke=\"" +
                   fill + "\" stroke-width=\"" + num12(stroke) + "\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hn
