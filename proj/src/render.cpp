#include "sl3web/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace sl3web {

namespace {

struct pt {
    double x = 0, y = 0;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

// full waypoint list of an edge in math coordinates, with a guaranteed central
// point to anchor the arrowhead at (index returned)
std::pair<std::vector<pt>, size_t> edge_polyline(const web& w, int e) {
    const geometry& g = *w.geom;
    std::vector<pt> pts;
    auto push = [&](const std::pair<rat64, rat64>& p) { pts.push_back({p.first.approx(), p.second.approx()}); };
    push(g.vertex_pos[w.edges[e].from]);
    for (const auto& p : g.edge_points[e]) push(p);
    push(g.vertex_pos[w.edges[e].to]);
    if (pts.size() % 2 == 0) {
        size_t mid = pts.size() / 2;
        pts.insert(pts.begin() + mid, {(pts[mid - 1].x + pts[mid].x) / 2, (pts[mid - 1].y + pts[mid].y) / 2});
    }
    return {pts, pts.size() / 2};
}

pt direction_at(const std::vector<pt>& pts, size_t mid) {
    pt a = pts[mid > 0 ? mid - 1 : mid], b = pts[mid + 1 < pts.size() ? mid + 1 : mid];
    double dx = b.x - a.x, dy = b.y - a.y;
    double len = std::sqrt(dx * dx + dy * dy);
    if (len < 1e-12) return {1, 0};
    return {dx / len, dy / len};
}

std::vector<std::pair<double, int>> gap_label_spots(const web& w) {
    std::vector<std::pair<double, int>> spots;  // (x, depth)
    const int m = w.boundary_count();
    if (m < 2) return spots;
    depth_map dm = compute_depths(w);
    for (int i = 0; i <= m; ++i) {
        double x = w.geom->vertex_pos[std::min(i, m - 1)].first.approx();
        if (i == 0) x -= 0.5;
        else if (i == m) x += 0.5;
        else x = (w.geom->vertex_pos[i - 1].first.approx() + w.geom->vertex_pos[i].first.approx()) / 2;
        spots.push_back({x, dm.gap_depths[i]});
    }
    return spots;
}

std::string render_svg(const web& w, const render_spec& spec) {
    const geometry& g = *w.geom;
    const int m = w.boundary_count();
    const double unit = 60.0 * spec.scale.approx();

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    auto see = [&](double x, double y) {
        if (first) { xmin = xmax = x; ymin = ymax = y; first = false; return; }
        xmin = std::min(xmin, x); xmax = std::max(xmax, x);
        ymin = std::min(ymin, y); ymax = std::max(ymax, y);
    };
    for (const auto& p : g.vertex_pos) see(p.first.approx(), p.second.approx());
    for (const auto& line : g.edge_points)
        for (const auto& p : line) see(p.first.approx(), p.second.approx());
    const double margin = 0.9;
    auto X = [&](double x) { return (x - xmin + margin) * unit; };
    auto Y = [&](double y) { return (ymax + margin - y) * unit; };  // flip: math y up, svg y down
    const double width = (xmax - xmin + 2 * margin) * unit;
    const double height = (ymax - ymin + 2 * margin) * unit;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";

    if (m >= 2)
        out << "  <line class=\"wall\" x1=\"" << num(X(g.vertex_pos[0].first.approx())) << "\" y1=\"" << num(Y(0))
            << "\" x2=\"" << num(X(g.vertex_pos[m - 1].first.approx())) << "\" y2=\"" << num(Y(0))
            << "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

    for (int e = 0; e < w.edge_count(); ++e) {
        auto [pts, mid] = edge_polyline(w, e);
        out << "  <polyline class=\"edge\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\" points=\"";
        for (size_t k = 0; k < pts.size(); ++k)
            out << (k ? " " : "") << num(X(pts[k].x)) << "," << num(Y(pts[k].y));
        out << "\"/>\n";
        pt dir = direction_at(pts, mid);
        double ax = pts[mid].x, ay = pts[mid].y;
        double al = 0.14, aw = 0.07;  // arrowhead in math units
        pt tip{ax + dir.x * al / 2, ay + dir.y * al / 2};
        pt left{ax - dir.x * al / 2 - dir.y * aw, ay - dir.y * al / 2 + dir.x * aw};
        pt right{ax - dir.x * al / 2 + dir.y * aw, ay - dir.y * al / 2 - dir.x * aw};
        out << "  <polygon class=\"arrow\" fill=\"#000\" points=\"" << num(X(tip.x)) << "," << num(Y(tip.y)) << " "
            << num(X(left.x)) << "," << num(Y(left.y)) << " " << num(X(right.x)) << "," << num(Y(right.y))
            << "\"/>\n";
    }

    for (int i = 0; i < m; ++i) {
        double x = g.vertex_pos[i].first.approx(), y = g.vertex_pos[i].second.approx();
        out << "  <circle class=\"boundary-mark\" cx=\"" << num(X(x)) << "\" cy=\"" << num(Y(y))
            << "\" r=\"3.5\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
        std::string label = std::to_string(i + 1);
        if (spec.label_signs) label += w.signs[i] == sign::plus ? "+" : "-";
        out << "  <text class=\"boundary-label\" x=\"" << num(X(x)) << "\" y=\"" << num(Y(y) + 18)
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << label << "</text>\n";
    }
    for (int v = m; v < w.vertex_count(); ++v) {
        double x = g.vertex_pos[v].first.approx(), y = g.vertex_pos[v].second.approx();
        out << "  <circle class=\"internal-dot\" cx=\"" << num(X(x)) << "\" cy=\"" << num(Y(y))
            << "\" r=\"4\" fill=\"#000\"/>\n";
    }

    if (spec.label_depths)
        for (auto [x, d] : gap_label_spots(w))
            out << "  <text class=\"depth-label\" x=\"" << num(X(x)) << "\" y=\"" << num(Y(0.35))
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#555\" text-anchor=\"middle\">" << d
                << "</text>\n";

    out << "</svg>\n";
    return out.str();
}

std::string render_tikz(const web& w, const render_spec& spec) {
    const geometry& g = *w.geom;
    const int m = w.boundary_count();

    std::ostringstream out;
    out << "\\begin{tikzpicture}[scale=" << num(spec.scale.approx()) << ", >=stealth]\n";
    if (m >= 2)
        out << "  \\draw[dashed, gray] (" << num(g.vertex_pos[0].first.approx()) << ",0) -- ("
            << num(g.vertex_pos[m - 1].first.approx()) << ",0);\n";

    auto coord = [&](pt p) { return "(" + num(p.x) + "," + num(p.y) + ")"; };
    for (int e = 0; e < w.edge_count(); ++e) {
        auto [pts, mid] = edge_polyline(w, e);
        out << "  \\draw[->] ";
        for (size_t k = 0; k <= mid; ++k) out << (k ? " -- " : "") << coord(pts[k]);
        out << ";\n  \\draw ";
        for (size_t k = mid; k < pts.size(); ++k) out << (k > mid ? " -- " : "") << coord(pts[k]);
        out << ";\n";
    }
    for (int i = 0; i < m; ++i) {
        pt p{g.vertex_pos[i].first.approx(), g.vertex_pos[i].second.approx()};
        std::string label = std::to_string(i + 1);
        if (spec.label_signs) label += std::string("^{") + (w.signs[i] == sign::plus ? "+" : "-") + "}";
        out << "  \\filldraw " << coord(p) << " circle (1.5pt) node[below=2pt] {$" << label << "$};\n";
    }
    for (int v = m; v < w.vertex_count(); ++v) {
        pt p{g.vertex_pos[v].first.approx(), g.vertex_pos[v].second.approx()};
        out << "  \\filldraw " << coord(p) << " circle (2pt);\n";
    }
    if (spec.label_depths)
        for (auto [x, d] : gap_label_spots(w))
            out << "  \\node at (" << num(x) << ",0.35) {\\small " << d << "};\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace

std::string render_web(const web& w, const render_spec& spec) {
    if (!w.geom)
        fail(errc::missing_geometry,
             "web carries no geometry; rebuild it from its tableau before rendering");
    if (!(rat64(0) < spec.scale)) fail(errc::internal_invariant, "render scale must be positive");
    return spec.format == render_spec::output::svg ? render_svg(w, spec) : render_tikz(w, spec);
}

}  // namespace sl3web
