#include "galcryst/emit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace galcryst {

Json graph_to_json(const CrystalGraph& g)
{
    Json vertices = Json::array();
    for (const auto& v : g.vertices())
        vertices.push_back(format_gallery(v));
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"i", e.i}});
    return Json{{"rank", g.rank()}, {"vertices", vertices}, {"edges", edges}};
}

std::string graph_to_dot(const CrystalGraph& g)
{
    std::string out = "digraph crystal {\n";
    for (std::size_t k = 0; k < g.size(); ++k)
        out += "  v" + std::to_string(k) + " [label=\"" + format_gallery(g.vertices()[k]) + "\"];\n";
    for (const auto& e : g.edges())
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\""
               + std::to_string(e.i) + "\"];\n";
    out += "}\n";
    return out;
}

std::string graph_to_text(const CrystalGraph& g)
{
    std::string out;
    for (std::size_t k = 0; k < g.size(); ++k)
        out += std::to_string(k) + " " + format_gallery(g.vertices()[k]) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.from) + " -" + std::to_string(e.i) + "-> " + std::to_string(e.to)
               + "\n";
    return out;
}

Json label_to_json(const MVLabel& z)
{
    return Json{{"lambda", z.lambda().fundamental()},
                {"tableau", format_gallery(z.tableau())},
                {"mu", z.mu().counts()}};
}

Json crossings_to_json(const CrossingSets& sets)
{
    Json out = Json::array();
    for (std::size_t j = 0; j < sets.size(); ++j) {
        Json roots = Json::array();
        for (const auto& r : sets[j])
            roots.push_back(Json{{"a", r.a}, {"b", r.b}, {"m", r.level}});
        out.push_back(Json{{"segment", j}, {"roots", roots}});
    }
    return out;
}

Json decomposition_to_json(const Decomposition& d)
{
    Json entries = Json::array();
    for (const auto& e : d.entries) {
        Json reps = Json::array();
        for (const auto& g : e.representatives)
            reps.push_back(format_gallery(g));
        entries.push_back(Json{{"lambda", e.lambda.fundamental()},
                               {"multiplicity", e.multiplicity},
                               {"dimension", weyl_dimension(e.lambda)},
                               {"representatives", reps}});
    }
    return Json{{"rank", d.rank},
                {"shape", d.shape},
                {"galleries", d.total_vertices},
                {"components", d.component_count},
                {"entries", entries}};
}

Json path_to_json(const Gallery& g)
{
    Json verts = Json::array();
    for (const auto& p : path_vertices(g))
        verts.push_back(p.coords);
    return Json{{"rank", g.rank()}, {"gallery", format_gallery(g)}, {"vertices", verts}};
}

namespace {

struct Point {
    double x;
    double y;
};

Point project(const std::vector<int>& c)
{
    static const double s = std::sqrt(3.0) / 2.0;
    static const std::array<Point, 3> dir{{{0.5, s}, {-1.0, 0.0}, {0.5, -s}}};
    Point p{0.0, 0.0};
    for (std::size_t k = 0; k < 3; ++k) {
        p.x += c[k] * dir[k].x;
        p.y += c[k] * dir[k].y;
    }
    return p;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string path_to_svg(const Gallery& g)
{
    if (g.rank() != 3)
        throw Error(ErrorCode::SvgRankUnsupported, "SVG output is only available for rank 3");
    std::vector<Point> pts;
    for (const auto& v : path_vertices(g))
        pts.push_back(project(v.coords));

    double reach = 2.0;
    for (const auto& p : pts)
        reach = std::max(reach, std::hypot(p.x, p.y) + 1.0);
    // chamber between omega_1 (60 deg) and omega_2 (120 deg)
    const Point w1 = project({1, 0, 0});
    const Point w2 = project({1, 1, 0});
    const double scale = reach * 1.2;

    const double unit = 40.0;  // pixels per lattice unit
    const double half = reach * unit * 1.25;
    auto sx = [&](double x) { return num(x * unit); };
    auto sy = [&](double y) { return num(-y * unit); };  // SVG y grows downward

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(-half) + " " + num(-half)
           + " " + num(2 * half) + " " + num(2 * half) + "\">\n";
    out += "  <polygon points=\"0.0000,0.0000 " + sx(w1.x * scale) + "," + sy(w1.y * scale) + " "
           + sx(w2.x * scale) + "," + sy(w2.y * scale) + "\" fill=\"#e6e6e6\" stroke=\"none\"/>\n";
    const std::array<const char*, 3> names{"e1", "e2", "e3"};
    for (int k = 0; k < 3; ++k) {
        std::vector<int> c(3, 0);
        c[static_cast<std::size_t>(k)] = 1;
        const Point d = project(c);
        out += "  <line x1=\"0.0000\" y1=\"0.0000\" x2=\"" + sx(d.x) + "\" y2=\"" + sy(d.y)
               + "\" stroke=\"#888888\" stroke-dasharray=\"2,2\"/>\n";
        out += "  <text x=\"" + sx(d.x * 1.15) + "\" y=\"" + sy(d.y * 1.15)
               + "\" font-size=\"10\">" + names[static_cast<std::size_t>(k)] + "</text>\n";
    }
    out += "  <polyline fill=\"none\" stroke=\"#1f4fbf\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k > 0)
            out += ' ';
        out += sx(pts[k].x) + "," + sy(pts[k].y);
    }
    out += "\"/>\n</svg>\n";
    return out;
}

}  // namespace galcryst
