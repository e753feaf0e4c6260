#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgevcli {

enum class SeriesKind { Line, Points, Bars };

struct Series {
    std::string label;
    std::string color = "#1f6feb";
    SeriesKind kind = SeriesKind::Line;
    std::vector<double> x;
    std::vector<double> y;
};

struct Panel {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<Series> series;
};

// Self-contained SVG: vertically stacked panels, linear axes, five ticks per
// axis. No external renderer or stylesheet.
void write_svg(const std::vector<Panel>& panels, std::ostream& out, int width = 760,
               int panel_height = 300);

}  // namespace pgevcli
