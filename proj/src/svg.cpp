#include "vtp/svg.hpp"

#include "vtp/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace vtp {

namespace {

const char *kPalette[] = {"#e6b45a", "#6aa7d8", "#9ccf7a", "#d9828a", "#b49ad6",
                          "#7fcfc4", "#e0d070", "#c0a080", "#90a0b0", "#f0a0d0"};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

struct Canvas {
    double scale, cx, cy;
    Eigen::Vector2d map(const Eigen::Vector2d &p) const { return {cx + scale * p.x(), cy - scale * p.y()}; }
};

// Path command from a to b passing through m: a circular arc, or a line when flat.
std::string arc_to(const Eigen::Vector2d &a, const Eigen::Vector2d &m, const Eigen::Vector2d &b)
{
    auto cross = [](Eigen::Vector2d u, Eigen::Vector2d v) { return u.x() * v.y() - u.y() * v.x(); };
    double den = 2 * cross(m - a, b - a);
    double chord = (b - a).norm();
    if (std::abs(den) < 1e-9 * std::max(1.0, chord * chord)) return "L " + fmt(b.x()) + " " + fmt(b.y()) + " ";
    Eigen::Vector2d ma = m - a, ba = b - a;
    Eigen::Vector2d c = a + Eigen::Vector2d(ba.y() * ma.squaredNorm() - ma.y() * ba.squaredNorm(),
                                            ma.x() * ba.squaredNorm() - ba.x() * ma.squaredNorm()) / den;
    double r = (a - c).norm();
    if (r > 1e6) return "L " + fmt(b.x()) + " " + fmt(b.y()) + " ";
    bool large = (cross(b - a, m - a) > 0) == (cross(b - a, c - a) > 0);
    bool sweep = cross(m - a, b - m) > 0;
    return "A " + fmt(r) + " " + fmt(r) + " 0 " + (large ? "1" : "0") + " " + (sweep ? "1" : "0") + " " +
           fmt(b.x()) + " " + fmt(b.y()) + " ";
}

} // namespace

std::string render_svg(const GraphBall &b, const SvgOptions &opt)
{
    if (!b.has_coords) throw UserError("rendering needs a ball built with coordinates");
    int d = b.degree();
    auto visible = [&](const Point &p) {
        return b.geometry != Geometry::Spherical || p.sphere.z() <= opt.sphere_cap;
    };
    double extent = 1.0;
    if (b.geometry != Geometry::Hyperbolic) {
        extent = 1e-9;
        for (const auto &v : b.vertices)
            if (visible(v.point)) extent = std::max(extent, project(v.point, b.geometry).cwiseAbs().maxCoeff());
    }
    double half = opt.size / 2.0;
    Canvas cv{0.95 * half / extent, half, half};
    auto px = [&](const Point &p) { return cv.map(project(p, b.geometry)); };
    auto mid = [&](int v, int q) { return edge_point(b, v, q, b.length / 2); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.size) + "\" height=\"" +
           std::to_string(opt.size) + "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " +
           std::to_string(opt.size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (b.geometry == Geometry::Hyperbolic)
        out += "<circle cx=\"" + fmt(half) + "\" cy=\"" + fmt(half) + "\" r=\"" + fmt(cv.scale) +
               "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    out += "<g stroke=\"none\">\n";
    for (const auto &face : b.closed_faces()) {
        bool ok = true;
        for (const auto &c : face) ok = ok && visible(b.vertices[c.v].point);
        if (!ok) continue;
        int color = b.face_label(face[0].v, face[0].q);
        auto start = px(b.vertices[face[0].v].point);
        std::string path = "M " + fmt(start.x()) + " " + fmt(start.y()) + " ";
        for (const auto &c : face) {
            int s = wrap(c.q + 1, d);
            int w = b.vertices[c.v].nbr[s];
            path += arc_to(px(b.vertices[c.v].point), px(mid(c.v, s)), px(b.vertices[w].point));
        }
        out += "<path d=\"" + path + "Z\" fill=\"" + kPalette[color % 10] + "\"/>\n";
    }
    out += "</g>\n<g fill=\"none\" stroke=\"#222222\" stroke-width=\"1\">\n";
    for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v)
        for (int q = 0; q < d; ++q) {
            int w = b.vertices[v].nbr[q];
            if (w < v) continue;
            if (!visible(b.vertices[v].point) || !visible(b.vertices[w].point)) continue;
            auto a = px(b.vertices[v].point);
            out += "<path d=\"M " + fmt(a.x()) + " " + fmt(a.y()) + " " +
                   arc_to(a, px(mid(v, q)), px(b.vertices[w].point)) + "\"/>\n";
        }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace vtp
