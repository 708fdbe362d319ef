#include "neurocode/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace neurocode {

namespace {

constexpr const char* kInk = "#1f6fb5";       // interval strokes, triangle edges
constexpr const char* kTriangleFill = "#c3d8ec";
constexpr const char* kSegment = "#d97706";   // the half-open segment atom
constexpr const char* kOriginDot = "#c0392b"; // the origin atom
constexpr const char* kGuide = "#d9d9d9";
constexpr const char* kFrame = "#999999";

std::string f2(double v) {
    if (std::abs(v) < 0.005) v = 0.0;  // avoid the "-0.00" artifact
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void line(std::string& out, double x1, double y1, double x2, double y2, const char* stroke,
          double width, const char* dash = nullptr) {
    out += "  <line x1=\"" + f2(x1) + "\" y1=\"" + f2(y1) + "\" x2=\"" + f2(x2) + "\" y2=\"" +
           f2(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + f2(width) + "\"";
    if (dash) out += std::string(" stroke-dasharray=\"") + dash + "\"";
    out += "/>\n";
}

void disc(std::string& out, double cx, double cy, double r, const char* color, bool filled) {
    out += "  <circle cx=\"" + f2(cx) + "\" cy=\"" + f2(cy) + "\" r=\"" + f2(r) + "\"";
    if (filled)
        out += std::string(" fill=\"") + color + "\"";
    else
        out += std::string(" fill=\"#ffffff\" stroke=\"") + color + "\" stroke-width=\"2\"";
    out += "/>\n";
}

void arrow(std::string& out, double tip_x, double y, int direction, const char* color) {
    const double base = tip_x - 9 * direction;
    out += "  <polygon points=\"" + f2(tip_x) + "," + f2(y) + " " + f2(base) + "," + f2(y - 5) +
           " " + f2(base) + "," + f2(y + 5) + "\" fill=\"" + color + "\"/>\n";
}

void label(std::string& out, double x, double y, const std::string& text, bool centered) {
    out += "  <text x=\"" + f2(x) + "\" y=\"" + f2(y) +
           "\" font-family=\"monospace\" font-size=\"13\"";
    if (centered) out += " text-anchor=\"middle\"";
    out += ">" + text + "</text>\n";
}

std::string svg_open(double width, double height) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" "
           "width=\"" +
           f2(width) + "\" height=\"" + f2(height) + "\" viewBox=\"0 0 " + f2(width) + " " +
           f2(height) + "\">\n  <rect width=\"" + f2(width) + "\" height=\"" + f2(height) +
           "\" fill=\"#ffffff\"/>\n";
}

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

}  // namespace

std::string render_svg_1d(const Realization1D& r, const RenderSpec& spec) {
    if (r.n < 1 || static_cast<int>(r.intervals.size()) != r.n)
        raise(Errc::bad_parameter, "realization shape is inconsistent");

    const double width = std::max(spec.width, 160);
    const double margin = std::max(spec.margin, 24);
    const double height = spec.height > 0 ? spec.height : 2 * margin + 44.0 * r.n;

    double lo = 0, hi = 1;
    bool seen = false;
    for (const IntervalSet& s : r.intervals) {
        if (s.is_empty()) continue;
        for (const std::optional<Rational>& end : {s.lo(), s.hi()}) {
            if (!end) continue;
            const double v = to_double(*end);
            lo = seen ? std::min(lo, v) : v;
            hi = seen ? std::max(hi, v) : v;
            seen = true;
        }
    }
    if (lo == hi) {
        lo -= 1;
        hi += 1;
    }
    const auto x_of = [&](double v) { return margin + (v - lo) / (hi - lo) * (width - 2 * margin); };

    std::string out = svg_open(width, height);
    const double track = (height - 2 * margin) / r.n;
    for (int j = 1; j <= r.n; ++j) {
        const double y = margin + track * (j - 0.5);
        line(out, margin, y, width - margin, y, kGuide, 1);
        label(out, 6, y + 4, "I" + std::to_string(j), false);

        const IntervalSet& s = r.intervals[static_cast<size_t>(j - 1)];
        if (s.is_empty()) continue;

        const double x1 = s.lo() ? x_of(to_double(*s.lo())) : margin - 16;
        const double x2 = s.hi() ? x_of(to_double(*s.hi())) : width - margin + 16;
        if (x1 != x2) line(out, x1, y, x2, y, kInk, 4);
        if (s.lo())
            disc(out, x1, y, 5, kInk, s.lo_closed());
        else
            arrow(out, x1, y, -1, kInk);
        if (s.hi())
            disc(out, x2, y, 5, kInk, s.hi_closed());
        else
            arrow(out, x2, y, +1, kInk);
    }
    out += "</svg>\n";
    return out;
}

std::string render_svg_2d(const ConstructedRealization& r, const RenderSpec& spec) {
    if (r.ambient_dim > 2 || r.k > 3)
        raise(Errc::dimension_too_high,
              "can only draw constructions with at most three atoms (plane or lower)");
    if (r.n < 0 || static_cast<int>(r.atoms_per_neuron.size()) != r.n)
        raise(Errc::bad_parameter, "realization shape is inconsistent");

    const double width = std::max(spec.width, 160);
    const double margin = std::max(spec.margin, 24);
    const int panels = std::max(r.n, 1);
    const double gap = 16;
    const double side = (width - 2 * margin - gap * (panels - 1)) / panels;
    const double height = spec.height > 0 ? spec.height : 2 * margin + side + 18;

    std::string out = svg_open(width, height);
    const char* frame_dash = r.stimulus == Stimulus::whole_space ? "6,4" : nullptr;

    for (int p = 0; p < panels; ++p) {
        const double ox = margin + p * (side + gap);
        out += "  <rect x=\"" + f2(ox) + "\" y=\"" + f2(margin) + "\" width=\"" + f2(side) +
               "\" height=\"" + f2(side) + "\" fill=\"none\" stroke=\"" + kFrame + "\"";
        if (frame_dash) out += std::string(" stroke-dasharray=\"") + frame_dash + "\"";
        out += "/>\n";
        if (r.n == 0) break;  // a code without neurons: the stimulus frame alone

        const double unit = side * 0.72;
        const double gx = ox + side * 0.14;
        const double gy = margin + side * 0.86;
        const auto px = [&](double a) { return gx + a * unit; };
        const auto py = [&](double b) { return gy - b * unit; };

        const std::vector<int>& atoms = r.atoms_per_neuron[static_cast<size_t>(p)];
        for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
            switch (*it) {
                case 3:
                    out += "  <path d=\"M " + f2(px(0)) + " " + f2(py(0)) + " L " + f2(px(1)) +
                           " " + f2(py(0)) + " L " + f2(px(0)) + " " + f2(py(1)) +
                           " Z\" fill=\"" + kTriangleFill + "\"/>\n";
                    line(out, px(0), py(0), px(1), py(0), kInk, 2, "5,4");  // removed facet
                    line(out, px(1), py(0), px(0), py(1), kInk, 2);
                    line(out, px(0), py(0), px(0), py(1), kInk, 2);
                    disc(out, px(0), py(0), 4.5, kInk, false);
                    disc(out, px(1), py(0), 4.5, kInk, false);
                    disc(out, px(0), py(1), 4.5, kInk, true);
                    break;
                case 2:
                    line(out, px(0), py(0), px(1), py(0), kSegment, 3);
                    disc(out, px(0), py(0), 4.5, kSegment, false);  // origin excluded
                    disc(out, px(1), py(0), 4.5, kSegment, true);
                    break;
                case 1:
                    disc(out, px(0), py(0), 4, kOriginDot, true);
                    break;
                default:
                    break;
            }
        }
        label(out, ox + side / 2, margin + side + 14, "U" + std::to_string(p + 1), true);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace neurocode
