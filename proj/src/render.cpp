#include "ggb/render.hpp"

#include <algorithm>

namespace ggb {

namespace {

struct Box {
    int width;  // cells along x
    int height; // cells along y
};

Box bounding_box(const Staircase& s) {
    int maxx = 0, maxy = 0;
    for (const auto& [cx, cy] : s.corners) {
        maxx = std::max(maxx, cx);
        maxy = std::max(maxy, cy);
    }
    return Box{maxx + 2, maxy + 2};
}

} // namespace

std::string render_staircase_ascii(const MonomialIdeal& J) {
    const Staircase s = staircase(J);
    const Box box = bounding_box(s);
    std::string out;
    out.reserve(static_cast<std::size_t>((box.width + 1) * box.height));
    for (int y = box.height - 1; y >= 0; --y) {
        for (int x = 0; x < box.width; ++x)
            out += J.contains(Monomial({x, y})) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string render_staircase_svg(const MonomialIdeal& J) {
    const Staircase s = staircase(J);
    const Box box = bounding_box(s);
    constexpr int cell = 28;
    constexpr int margin = 8;
    const int width = box.width * cell + 2 * margin;
    const int height = box.height * cell + 2 * margin;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    for (int y = box.height - 1; y >= 0; --y) {
        for (int x = 0; x < box.width; ++x) {
            const bool inside = J.contains(Monomial({x, y}));
            const int px = margin + x * cell;
            const int py = margin + (box.height - 1 - y) * cell;
            svg += "  <rect x=\"" + std::to_string(px) + "\" y=\"" +
                   std::to_string(py) + "\" width=\"" + std::to_string(cell) +
                   "\" height=\"" + std::to_string(cell) + "\" fill=\"" +
                   (inside ? "#8fb8de" : "#ffffff") +
                   "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        }
    }
    // Corner labels, in corner order (x-exponent descending).
    for (const auto& [cx, cy] : s.corners) {
        const int px = margin + cx * cell + cell / 2;
        const int py = margin + (box.height - 1 - cy) * cell + cell / 2 + 4;
        svg += "  <text x=\"" + std::to_string(px) + "\" y=\"" +
               std::to_string(py) +
               "\" font-size=\"9\" font-family=\"monospace\" "
               "text-anchor=\"middle\">" +
               Monomial({cx, cy}).to_string() + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace ggb
