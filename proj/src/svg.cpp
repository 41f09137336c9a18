#include "cfcolor/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace cfcolor {

namespace {

constexpr const char* kPalette[12] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78"};

const char* fill_for(int color) { return kPalette[(color - 1) % 12]; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string header(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) +
           " " + num(h) + "\">\n";
}

std::string legend(const Coloring* coloring, double x, double y) {
    if (!coloring) return "";
    std::set<int> used(coloring->begin(), coloring->end());
    std::string out;
    int row = 0;
    for (int c : used) {
        const double yy = y + 18.0 * row++;
        out += "<rect x=\"" + num(x) + "\" y=\"" + num(yy) +
               "\" width=\"12\" height=\"12\" fill=\"" + fill_for(c) + "\"/>\n";
        out += "<text x=\"" + num(x + 18) + "\" y=\"" + num(yy + 10) +
               "\" font-size=\"12\">color " + std::to_string(c) + "</text>\n";
    }
    return out;
}

std::string circle(double cx, double cy, double r, const std::string& fill,
                   double opacity) {
    return "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
           num(r) + "\" fill=\"" + fill + "\" fill-opacity=\"" + num(opacity) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

std::string line(double x1, double y1, double x2, double y2) {
    return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
           num(x2) + "\" y2=\"" + num(y2) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

struct Frame {
    double min_x, min_y, scale, pad;
    double X(double x) const { return pad + (x - min_x) * scale; }
    double Y(double y) const { return pad + (y - min_y) * scale; }
};

Frame fit(double min_x, double max_x, double min_y, double max_y,
          double target = 360.0, double pad = 40.0) {
    const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
    return {min_x, min_y, target / span, pad};
}

}  // namespace

std::string svg_points(const PointSet& p, const Coloring* coloring) {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    for (int i = 0; i < p.size(); ++i) {
        min_x = std::min(min_x, double(p[i].x));
        max_x = std::max(max_x, double(p[i].x));
        min_y = std::min(min_y, double(p[i].y));
        max_y = std::max(max_y, double(p[i].y));
    }
    const Frame f = fit(min_x, max_x, min_y, max_y);
    std::string out = header(560, 460);
    for (int i = 0; i < p.size(); ++i) {
        const char* fill = coloring ? fill_for((*coloring)[i]) : "#333333";
        out += circle(f.X(double(p[i].x)), f.Y(double(p[i].y)), 5, fill, 1.0);
        out += "<text x=\"" + num(f.X(double(p[i].x)) + 7) + "\" y=\"" +
               num(f.Y(double(p[i].y)) - 7) + "\" font-size=\"11\">" +
               std::to_string(i) + "</text>\n";
    }
    out += legend(coloring, 460, 30);
    out += "</svg>\n";
    return out;
}

std::string svg_discs(const DiscFamily& d, const Coloring* coloring) {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    for (int i = 0; i < d.size(); ++i) {
        const double r = std::sqrt(double(d[i].r2));
        min_x = std::min(min_x, d[i].cx - r);
        max_x = std::max(max_x, d[i].cx + r);
        min_y = std::min(min_y, d[i].cy - r);
        max_y = std::max(max_y, d[i].cy + r);
    }
    const Frame f = fit(min_x, max_x, min_y, max_y);
    std::string out = header(560, 460);
    for (int i = 0; i < d.size(); ++i) {
        const char* fill = coloring ? fill_for((*coloring)[i]) : "#999999";
        out += circle(f.X(double(d[i].cx)), f.Y(double(d[i].cy)),
                      std::sqrt(double(d[i].r2)) * f.scale, fill, 0.35);
        out += "<text x=\"" + num(f.X(double(d[i].cx))) + "\" y=\"" +
               num(f.Y(double(d[i].cy))) + "\" font-size=\"11\">" +
               std::to_string(i) + "</text>\n";
    }
    out += legend(coloring, 460, 30);
    out += "</svg>\n";
    return out;
}

std::string svg_graph(const PlanarGraph& g, const Coloring* coloring) {
    const int n = g.vertex_count();
    const double R = 170.0, cx = 220.0, cy = 220.0;
    std::vector<std::pair<double, double>> pos(n);
    for (int v = 0; v < n; ++v) {
        const double a = 2.0 * M_PI * v / std::max(n, 1) - M_PI / 2.0;
        pos[v] = {cx + R * std::cos(a), cy + R * std::sin(a)};
    }
    std::string out = header(560, 460);
    for (auto [a, b] : g.edge_list())
        out += line(pos[a].first, pos[a].second, pos[b].first, pos[b].second);
    for (int v = 0; v < n; ++v) {
        const char* fill = coloring ? fill_for((*coloring)[v]) : "#333333";
        out += circle(pos[v].first, pos[v].second, 9, fill, 1.0);
        out += "<text x=\"" + num(pos[v].first - 3) + "\" y=\"" +
               num(pos[v].second + 4) + "\" font-size=\"10\" fill=\"white\">" +
               std::to_string(v) + "</text>\n";
    }
    out += legend(coloring, 460, 30);
    out += "</svg>\n";
    return out;
}

std::string svg_line(int n, const Coloring* coloring) {
    std::string out = header(std::max(60.0 * n + 80.0, 200.0), 160);
    out += line(40, 80, 40 + 60.0 * std::max(n - 1, 0) + 0.0, 80);
    for (int v = 0; v < n; ++v) {
        const char* fill = coloring ? fill_for((*coloring)[v]) : "#333333";
        out += circle(40 + 60.0 * v, 80, 7, fill, 1.0);
        out += "<text x=\"" + num(40 + 60.0 * v - 3) + "\" y=\"" + num(110.0) +
               "\" font-size=\"11\">" + std::to_string(v) + "</text>\n";
    }
    out += legend(coloring, 40, 20);
    out += "</svg>\n";
    return out;
}

}  // namespace cfcolor
