#include "pgevcli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pgevcli {
namespace {

struct Range {
    double lo = 0.0;
    double hi = 1.0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

Range axis_range(const std::vector<Series>& series, bool x_axis) {
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& s : series)
        for (double v : (x_axis ? s.x : s.y)) {
            if (!std::isfinite(v)) continue;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!(lo <= hi)) return {0.0, 1.0};
    if (lo == hi) return {lo - 0.5, hi + 0.5};
    const double pad = 0.05 * (hi - lo);
    // bars sit on the axis; keep zero in view for them
    bool bars = false;
    for (const auto& s : series) bars = bars || s.kind == SeriesKind::Bars;
    if (!x_axis && bars) lo = std::min(lo, 0.0);
    return {lo - pad, hi + pad};
}

}  // namespace

void write_svg(const std::vector<Panel>& panels, std::ostream& out, int width,
               int panel_height) {
    if (panels.empty()) throw std::invalid_argument("write_svg: no panels");
    const int total_height = panel_height * static_cast<int>(panels.size());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << total_height << "\" viewBox=\"0 0 " << width << " " << total_height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double ml = 64, mr = 16, mt = 34, mb = 42;
    for (std::size_t pi = 0; pi < panels.size(); ++pi) {
        const auto& panel = panels[pi];
        const double top = static_cast<double>(panel_height) * static_cast<double>(pi);
        const double x0 = ml, x1 = width - mr;
        const double y0 = top + mt, y1 = top + panel_height - mb;
        const Range rx = axis_range(panel.series, true);
        const Range ry = axis_range(panel.series, false);
        const auto px = [&](double v) {
            return x0 + (v - rx.lo) / (rx.hi - rx.lo) * (x1 - x0);
        };
        const auto py = [&](double v) {
            return y1 - (v - ry.lo) / (ry.hi - ry.lo) * (y1 - y0);
        };

        out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << top + 18
            << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
            << escape(panel.title) << "</text>\n";

        // frame and ticks
        out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << x1 - x0
            << "\" height=\"" << y1 - y0 << "\" fill=\"none\" stroke=\"#444\"/>\n";
        for (int k = 0; k <= 4; ++k) {
            const double fx = rx.lo + (rx.hi - rx.lo) * k / 4.0;
            const double fy = ry.lo + (ry.hi - ry.lo) * k / 4.0;
            out << "<line x1=\"" << px(fx) << "\" y1=\"" << y1 << "\" x2=\"" << px(fx)
                << "\" y2=\"" << y1 + 4 << "\" stroke=\"#444\"/>\n";
            out << "<text x=\"" << px(fx) << "\" y=\"" << y1 + 17
                << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">"
                << num(fx) << "</text>\n";
            out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << py(fy) << "\" x2=\"" << x0
                << "\" y2=\"" << py(fy) << "\" stroke=\"#444\"/>\n";
            out << "<text x=\"" << x0 - 7 << "\" y=\"" << py(fy) + 3
                << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" << num(fy)
                << "</text>\n";
        }
        out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << y1 + 33
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << escape(panel.xlabel) << "</text>\n";
        out << "<text font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\""
            << " transform=\"translate(14 " << (y0 + y1) / 2 << ") rotate(-90)\">"
            << escape(panel.ylabel) << "</text>\n";

        // clip series to the frame
        out << "<clipPath id=\"clip" << pi << "\"><rect x=\"" << x0 << "\" y=\"" << y0
            << "\" width=\"" << x1 - x0 << "\" height=\"" << y1 - y0 << "\"/></clipPath>\n";
        out << "<g clip-path=\"url(#clip" << pi << ")\">\n";
        for (const auto& s : panel.series) {
            if (s.x.size() != s.y.size())
                throw std::invalid_argument("write_svg: series size mismatch");
            if (s.kind == SeriesKind::Line) {
                out << "<polyline fill=\"none\" stroke=\"" << s.color
                    << "\" stroke-width=\"1.4\" points=\"";
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                    out << num(px(s.x[i])) << "," << num(py(s.y[i])) << " ";
                }
                out << "\"/>\n";
            } else if (s.kind == SeriesKind::Points) {
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                    out << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i]))
                        << "\" r=\"2.4\" fill=\"" << s.color << "\"/>\n";
                }
            } else {
                // bars centered on x, width from the median spacing
                double w = 1.0;
                if (s.x.size() > 1) w = (s.x.back() - s.x.front()) / double(s.x.size() - 1);
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
                    const double left = px(s.x[i] - w / 2), right = px(s.x[i] + w / 2);
                    const double ytop = py(s.y[i]), ybase = py(std::max(0.0, ry.lo));
                    out << "<rect x=\"" << num(left) << "\" y=\"" << num(std::min(ytop, ybase))
                        << "\" width=\"" << num(right - left) << "\" height=\""
                        << num(std::abs(ybase - ytop)) << "\" fill=\"" << s.color
                        << "\" fill-opacity=\"0.45\"/>\n";
                }
            }
        }
        out << "</g>\n";

        // legend, top right inside the frame
        double ly = y0 + 14;
        for (const auto& s : panel.series) {
            if (s.label.empty()) continue;
            out << "<line x1=\"" << x1 - 150 << "\" y1=\"" << ly - 4 << "\" x2=\"" << x1 - 130
                << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
                << "\" stroke-width=\"3\"/>\n";
            out << "<text x=\"" << x1 - 124 << "\" y=\"" << ly
                << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.label)
                << "</text>\n";
            ly += 15;
        }
    }
    out << "</svg>\n";
}

}  // namespace pgevcli
