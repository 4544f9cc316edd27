#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "pblab/error.hpp"
#include "pblab/sweep.hpp"

namespace pblab {

namespace {

constexpr double width = 720.0;
constexpr double panel_height = 300.0;
constexpr double margin_left = 70.0;
constexpr double margin_right = 20.0;
constexpr double margin_top = 30.0;
constexpr double margin_bottom = 45.0;

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

double log_clamped(double v) { return std::log10(std::max(v, plot_floor)); }

struct Frame {
    double x0, y0, w, h;
    double xmin, xmax, ymin, ymax;
    double px(double x) const { return x0 + (x - xmin) / (xmax - xmin) * w; }
    double py(double y) const { return y0 + h - (y - ymin) / (ymax - ymin) * h; }
};

void axes(std::ostringstream& svg, const Frame& f, const std::string& xlabel,
          const std::string& ylabel, bool log_y) {
    svg << "<rect x=\"" << num(f.x0) << "\" y=\"" << num(f.y0) << "\" width=\"" << num(f.w)
        << "\" height=\"" << num(f.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double x = f.xmin + (f.xmax - f.xmin) * k / 4.0;
        svg << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.y0 + f.h + 16)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
    const int lo = static_cast<int>(std::ceil(f.ymin));
    const int hi = static_cast<int>(std::floor(f.ymax));
    const int stride = std::max(1, (hi - lo) / 6);
    for (int e = lo; e <= hi; e += log_y ? stride : 1) {
        const double y = e;
        svg << "<line x1=\"" << num(f.x0) << "\" x2=\"" << num(f.x0 + f.w) << "\" y1=\""
            << num(f.py(y)) << "\" y2=\"" << num(f.py(y))
            << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        svg << "<text x=\"" << num(f.x0 - 6) << "\" y=\"" << num(f.py(y) + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">"
            << (log_y ? "1e" + std::to_string(e) : std::to_string(e)) << "</text>\n";
    }
    svg << "<text x=\"" << num(f.x0 + f.w / 2) << "\" y=\"" << num(f.y0 + f.h + 34)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n";
    svg << "<text transform=\"translate(" << num(f.x0 - 52) << "," << num(f.y0 + f.h / 2)
        << ") rotate(-90)\" font-size=\"12\" text-anchor=\"middle\">" << escape(ylabel)
        << "</text>\n";
}

void curve(std::ostringstream& svg, const Frame& f, const std::vector<double>& xs,
           const std::vector<double>& ys, const char* colour) {
    std::string path;
    bool pen_down = false;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (!std::isfinite(ys[k])) {
            pen_down = false;
            continue;
        }
        const double y = std::clamp(ys[k], f.ymin, f.ymax);
        path += (pen_down ? " L" : " M") + num(f.px(xs[k])) + "," + num(f.py(y));
        pen_down = true;
    }
    if (path.empty()) return;
    svg << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << colour
        << "\" stroke-width=\"1.2\"/>\n";
}

void markers(std::ostringstream& svg, const Frame& f, const std::vector<Resonance>& lines) {
    for (const auto& line : lines) {
        if (line.frequency < f.xmin || line.frequency > f.xmax) continue;
        const double x = f.px(line.frequency);
        svg << "<line x1=\"" << num(x) << "\" x2=\"" << num(x) << "\" y1=\"" << num(f.y0)
            << "\" y2=\"" << num(f.y0 + f.h)
            << "\" stroke=\"gray\" stroke-dasharray=\"4,3\" stroke-width=\"0.8\"><title>"
            << escape(line.label) << "</title></line>\n";
    }
}

void legend(std::ostringstream& svg, const Frame& f, const std::vector<std::string>& names) {
    for (std::size_t k = 0; k < names.size(); ++k) {
        const double x = f.x0 + 10 + 60.0 * k;
        svg << "<text x=\"" << num(x) << "\" y=\"" << num(f.y0 - 8) << "\" font-size=\"12\" fill=\""
            << palette[k % 5] << "\">" << escape(names[k]) << "</text>\n";
    }
}

std::pair<double, double> log_range(const std::vector<std::vector<double>>& series) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : series)
        for (double v : s)
            if (std::isfinite(v)) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
    if (!std::isfinite(lo)) return {-1.0, 1.0};
    lo = std::floor(lo);
    hi = std::ceil(hi);
    if (hi <= lo) hi = lo + 1.0;
    return {lo, hi};
}

std::string render_1d(const std::vector<SweepRow>& rows, const PlotSpec& spec) {
    std::vector<double> xs;
    std::vector<std::vector<double>> g(3), p(4);
    for (const auto& r : rows) {
        xs.push_back(r.axis1);
        const double gs[3] = {r.g2, r.g3, r.g4};
        for (int k = 0; k < 3; ++k) g[k].push_back(std::isnan(gs[k]) ? gs[k] : log_clamped(gs[k]));
        for (int k = 0; k < 4; ++k)
            p[k].push_back(std::isnan(r.p[k + 1]) ? r.p[k + 1] : log_clamped(r.p[k + 1]));
    }
    double xmin = xs.front(), xmax = xs.back();
    if (xmax <= xmin) xmax = xmin + 1.0;

    const double height = 2 * (panel_height + margin_top + margin_bottom);
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double pw = width - margin_left - margin_right;
    const auto [g_lo, g_hi] = log_range(g);
    const Frame top{margin_left, margin_top, pw, panel_height, xmin, xmax, g_lo, g_hi};
    axes(svg, top, spec.x_label, "g(n)(0)", true);
    markers(svg, top, spec.markers);
    for (int k = 0; k < 3; ++k) curve(svg, top, xs, g[k], palette[k]);
    legend(svg, top, {"g2", "g3", "g4"});

    const auto [p_lo, p_hi] = log_range(p);
    const Frame bottom{margin_left, 2 * margin_top + margin_bottom + panel_height, pw,
                       panel_height, xmin, xmax, p_lo, p_hi};
    axes(svg, bottom, spec.x_label, "P(n)", true);
    markers(svg, bottom, spec.markers);
    for (int k = 0; k < 4; ++k) curve(svg, bottom, xs, p[k], palette[k]);
    legend(svg, bottom, {"P1", "P2", "P3", "P4"});
    svg << "</svg>\n";
    return svg.str();
}

// Blue to white to red around log10 g2 = 0.
std::string heat_colour(double v, double vmax) {
    if (!std::isfinite(v)) return "#000000";
    const double t = std::clamp(v / vmax, -1.0, 1.0);
    int r = 255, gch = 255, b = 255;
    if (t < 0) {
        r = gch = static_cast<int>(std::lround(255 * (1 + t)));
    } else {
        gch = b = static_cast<int>(std::lround(255 * (1 - t)));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, gch, b);
    return buf;
}

std::string render_2d(const std::vector<SweepRow>& rows, const PlotSpec& spec) {
    std::map<double, int> xi, yi;
    for (const auto& r : rows) {
        xi.emplace(r.axis1, 0);
        yi.emplace(r.axis2, 0);
    }
    int k = 0;
    for (auto& [_, idx] : xi) idx = k++;
    k = 0;
    for (auto& [_, idx] : yi) idx = k++;
    const int nx = static_cast<int>(xi.size());
    const int ny = static_cast<int>(yi.size());

    double vmax = 1.0;
    for (const auto& r : rows)
        if (std::isfinite(r.g2)) vmax = std::max(vmax, std::abs(log_clamped(r.g2)));

    const double pw = width - margin_left - margin_right - 60;
    const double ph = 420.0;
    const double height = ph + margin_top + margin_bottom;
    const double xmin = xi.begin()->first, xmax = std::max(xi.rbegin()->first, xmin + 1e-12);
    const double ymin = yi.begin()->first, ymax = std::max(yi.rbegin()->first, ymin + 1e-12);
    const Frame f{margin_left, margin_top, pw, ph, xmin, xmax, ymin, ymax};
    const double cw = pw / nx, ch = ph / ny;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(margin_left) << "\" y=\"18\" font-size=\"12\">log10 g2</text>\n";
    for (const auto& r : rows) {
        const int ix = xi.at(r.axis1), iy = yi.at(r.axis2);
        const double v = std::isnan(r.g2) ? r.g2 : log_clamped(r.g2);
        svg << "<rect x=\"" << num(margin_left + ix * cw) << "\" y=\""
            << num(margin_top + ph - (iy + 1) * ch) << "\" width=\"" << num(cw + 0.05)
            << "\" height=\"" << num(ch + 0.05) << "\" fill=\"" << heat_colour(v, vmax)
            << "\"/>\n";
    }
    svg << "<rect x=\"" << num(f.x0) << "\" y=\"" << num(f.y0) << "\" width=\"" << num(f.w)
        << "\" height=\"" << num(f.h) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double x = xmin + (xmax - xmin) * t / 4.0;
        const double y = ymin + (ymax - ymin) * t / 4.0;
        svg << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.y0 + f.h + 16)
            << "\" font-size=\"11\" text-anchor=\"middle\">" << num(x) << "</text>\n";
        svg << "<text x=\"" << num(f.x0 - 6) << "\" y=\"" << num(f.py(y) + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << num(y) << "</text>\n";
    }
    svg << "<text x=\"" << num(f.x0 + f.w / 2) << "\" y=\"" << num(f.y0 + f.h + 34)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
    svg << "<text transform=\"translate(" << num(f.x0 - 52) << "," << num(f.y0 + f.h / 2)
        << ") rotate(-90)\" font-size=\"12\" text-anchor=\"middle\">" << escape(spec.y_label)
        << "</text>\n";
    // Colour bar.
    const double bx = f.x0 + f.w + 20;
    for (int s = 0; s < 50; ++s) {
        const double v = vmax * (1.0 - 2.0 * s / 49.0);
        svg << "<rect x=\"" << num(bx) << "\" y=\"" << num(f.y0 + s * ph / 50) << "\" width=\"14\" height=\""
            << num(ph / 50 + 0.05) << "\" fill=\"" << heat_colour(v, vmax) << "\"/>\n";
    }
    svg << "<text x=\"" << num(bx + 18) << "\" y=\"" << num(f.y0 + 10) << "\" font-size=\"10\">"
        << num(vmax) << "</text>\n";
    svg << "<text x=\"" << num(bx + 18) << "\" y=\"" << num(f.y0 + ph) << "\" font-size=\"10\">"
        << num(-vmax) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

std::string render_svg(const std::vector<SweepRow>& rows, const PlotSpec& spec) {
    if (rows.empty()) throw InvalidArgument("cannot render an empty sweep");
    return spec.two_d ? render_2d(rows, spec) : render_1d(rows, spec);
}

}  // namespace pblab
