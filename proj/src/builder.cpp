#include "vtp/builder.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace vtp {

int GraphBall::edge_label(int v, int q) const { return pair.xi[vertices[v].frame[wrap(q, degree())].pos]; }

int GraphBall::face_label(int v, int q) const
{
    const Slot &s = vertices[v].frame[wrap(q, degree())];
    return face_after(pair, s.pos, s.orient);
}

int GraphBall::face_position(int v, int q) const
{
    const Slot &s = vertices[v].frame[wrap(q, degree())];
    return s.orient > 0 ? s.pos : wrap(s.pos - 1, degree());
}

int GraphBall::face_size(int v, int q) const { return tv[face_position(v, q)]; }

bool GraphBall::complete(int v) const
{
    const auto &n = vertices[v].nbr;
    return std::find(n.begin(), n.end(), -1) == n.end();
}

int GraphBall::edge_count() const
{
    int n = 0;
    for (const auto &v : vertices)
        for (int x : v.nbr)
            if (x >= 0) ++n;
    return n / 2;
}

std::vector<std::vector<Corner>> GraphBall::closed_faces() const
{
    int d = degree();
    std::vector<std::vector<char>> seen(vertices.size(), std::vector<char>(d, 0));
    std::vector<std::vector<Corner>> out;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
        for (int q = 0; q < d; ++q) {
            if (seen[v][q]) continue;
            std::vector<Corner> face;
            Corner c{v, q};
            bool ok = true;
            do {
                face.push_back(c);
                int s = wrap(c.q + 1, d);
                int w = vertices[c.v].nbr[s];
                if (w < 0) {
                    ok = false;
                    break;
                }
                c = {w, vertices[c.v].back[s]};
            } while (!(c == Corner{v, q}) && face.size() <= 4 * vertices.size() + 4);
            if (!ok || !(c == Corner{v, q})) continue;
            for (auto x : face) seen[x.v][x.q] = 1;
            out.push_back(std::move(face));
        }
    return out;
}

std::vector<int> GraphBall::distances() const
{
    std::vector<int> dist(vertices.size(), -1);
    std::deque<int> q{0};
    dist[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : vertices[v].nbr)
            if (w >= 0 && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

double slot_angle(const GraphBall &b, int v, int q);

namespace {

struct OpenEnd {
    int v = -1;
    int slot = -1;
    int edges = 0;
};

// Follows the face at corner (v, c) away from slot c+1 until an open slot.
OpenEnd walk_back(const GraphBall &b, int v, int c, int limit)
{
    int d = b.degree();
    OpenEnd e{v, wrap(c, d), 0};
    while (b.vertices[e.v].nbr[e.slot] >= 0) {
        int w = b.vertices[e.v].nbr[e.slot];
        int s = b.vertices[e.v].back[e.slot];
        e = {w, wrap(s - 1, d), e.edges + 1};
        if (e.edges > limit) return {-1, -1, e.edges};
    }
    return e;
}

// Follows the face at corner (v, c) away from slot c until an open slot.
OpenEnd walk_forward(const GraphBall &b, int v, int c, int limit)
{
    int d = b.degree();
    OpenEnd e{v, wrap(c + 1, d), 0};
    while (b.vertices[e.v].nbr[e.slot] >= 0) {
        int w = b.vertices[e.v].nbr[e.slot];
        int s = b.vertices[e.v].back[e.slot];
        e = {w, wrap(s + 1, d), e.edges + 1};
        if (e.edges > limit) return {-1, -1, e.edges};
    }
    return e;
}

int flag_class(const GraphBall &b, int v, int q)
{
    const Slot &s = b.vertices[v].frame[wrap(q, b.degree())];
    return b.classes.cls(s.pos, s.orient);
}

Mobius<double> neighbor_frame(const GraphBall &b, int v, int s, const BallVertex &w, int back)
{
    double alpha_w = 0;
    for (int j = 0; j < back; ++j) {
        const Slot &sl = w.frame[j];
        alpha_w += b.angles[sl.orient > 0 ? sl.pos : wrap(sl.pos - 1, b.degree())];
    }
    return b.vertices[v].mobius * rotation(slot_angle(b, v, s)) * translation(b.length, b.geometry) *
           rotation(std::numbers::pi - alpha_w);
}

void connect(GraphBall &b, int v, int s, int u, int t)
{
    if (b.inv[flag_class(b, v, s)] != flag_class(b, u, t))
        throw InvariantError("closing edge does not match the edge neighborhood");
    b.vertices[v].nbr[s] = u;
    b.vertices[v].back[s] = t;
    b.vertices[u].nbr[t] = v;
    b.vertices[u].back[t] = s;
}

// Closing edge for slot s of v, if one of the two faces beside it is one edge short.
OpenEnd closing_end(const GraphBall &b, int v, int s)
{
    int d = b.degree();
    OpenEnd found;
    int l1 = b.face_size(v, s - 1);
    if (l1 != kInfinite) {
        OpenEnd e = walk_back(b, v, s - 1, l1);
        if (e.v >= 0 && e.edges > l1 - 1) throw InvariantError("face border longer than its size");
        if (e.v >= 0 && e.edges == l1 - 1 && !(e.v == v && e.slot == s)) found = e;
    }
    int l2 = b.face_size(v, s);
    if (l2 != kInfinite) {
        OpenEnd e = walk_forward(b, v, s, l2);
        if (e.v >= 0 && e.edges > l2 - 1) throw InvariantError("face border longer than its size");
        if (e.v >= 0 && e.edges == l2 - 1 && !(e.v == v && e.slot == s)) {
            if (found.v >= 0 && (found.v != e.v || found.slot != e.slot))
                throw InvariantError("the two faces at an edge close on different vertices");
            found = e;
        }
    }
    (void)d;
    return found;
}

} // namespace

double slot_angle(const GraphBall &b, int v, int q)
{
    double a = 0;
    for (int j = 0; j < q; ++j) a += b.angles[b.face_position(v, j)];
    return a;
}

Point edge_point(const GraphBall &b, int v, int q, double t)
{
    if (!b.has_coords) throw UserError("ball has no coordinates");
    return point_of(b.vertices[v].mobius * rotation(slot_angle(b, v, q)) * translation(t, b.geometry),
                    b.geometry);
}

GraphBall start_ball(const LabelingScheme &s, const TypeVector &tv, bool coords)
{
    auto a = build_automaton(s);
    auto an = analyze(s.pair, a.inv);
    if (!an.faces.valid) throw UserError("faces of one color have different borders");
    auto val = validate_type_vector(an.ptv, tv);
    if (!val.ok) throw UserError("type vector rejected: " + val.reason);
    GraphBall b;
    b.pair = s.pair;
    b.classes = a.classes;
    b.inv.resize(a.size());
    for (int x = 0; x < a.size(); ++x) {
        if (a.inv[x].size() != 1) throw InvariantError("inversion is not a function");
        b.inv[x] = a.inv[x][0];
    }
    b.tv = tv;
    b.geometry = classify_geometry(tv);
    if (coords) {
        auto sol = solve_edge_length(tv);
        b.has_coords = true;
        b.length = sol.length;
        b.angles = sol.angles;
    }
    int d = s.degree();
    BallVertex root;
    for (int q = 0; q < d; ++q) root.frame.push_back({q, 1});
    root.nbr.assign(d, -1);
    root.back.assign(d, -1);
    if (coords) root.point = point_of(root.mobius, b.geometry);
    b.vertices.push_back(std::move(root));
    return b;
}

int glue(GraphBall &b, int v, int s)
{
    int d = b.degree();
    if (v < 0 || v >= static_cast<int>(b.vertices.size())) throw UserError("no such vertex");
    s = wrap(s, d);
    if (b.vertices[v].nbr[s] >= 0) throw UserError("slot is already glued");
    OpenEnd e = closing_end(b, v, s);
    if (e.v >= 0) {
        connect(b, v, s, e.v, e.slot);
        return e.v;
    }
    int y = b.inv[flag_class(b, v, s)];
    {
        std::set<std::vector<int>> windows;
        for (int p = 0; p < d; ++p)
            for (int dir : {1, -1})
                if (b.classes.cls(p, dir) == y) windows.insert(flag_reading(b.pair, p, dir));
        b.max_gluing_options = std::max<int>(b.max_gluing_options, static_cast<int>(windows.size()));
    }
    BallVertex w;
    w.frame = frame_at(b.pair, b.classes.rep_pos[y], b.classes.rep_dir[y]);
    w.nbr.assign(d, -1);
    w.back.assign(d, -1);
    w.dist = b.vertices[v].dist + 1;
    if (b.has_coords) {
        w.mobius = neighbor_frame(b, v, s, w, 0);
        w.point = point_of(w.mobius, b.geometry);
    }
    int id = static_cast<int>(b.vertices.size());
    b.vertices.push_back(std::move(w));
    b.vertices[v].nbr[s] = id;
    b.vertices[v].back[s] = 0;
    b.vertices[id].nbr[0] = v;
    b.vertices[id].back[0] = s;
    return id;
}

int close_faces(GraphBall &b)
{
    int d = b.degree(), added = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v)
            for (int s = 0; s < d; ++s) {
                if (b.vertices[v].nbr[s] >= 0) continue;
                OpenEnd e = closing_end(b, v, s);
                if (e.v < 0) continue;
                connect(b, v, s, e.v, e.slot);
                ++added;
                changed = true;
            }
    }
    return added;
}

GraphBall build_ball(const LabelingScheme &s, const TypeVector &tv, int r, const BuildOptions &opt)
{
    if (r < 1) throw UserError("radius must be at least 1");
    GraphBall b = start_ball(s, tv, opt.coords);
    b.radius = r;
    bool finite = b.geometry == Geometry::Spherical;
    if (finite && std::count(tv.begin(), tv.end(), kInfinite))
        throw UserError("infinite faces have no realization on the sphere");
    int d = b.degree();
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
        if (!finite && b.vertices[v].dist >= r) break;
        // start after a glued slot so faces grow from existing borders
        int start = 0;
        for (int q = 0; q < d; ++q)
            if (b.vertices[v].nbr[q] >= 0) {
                start = q + 1;
                break;
            }
        for (int k = 0; k < d; ++k) {
            int q = wrap(start + k, d);
            if (b.vertices[v].nbr[q] < 0) glue(b, static_cast<int>(v), q);
        }
        if (static_cast<int>(b.vertices.size()) > opt.max_vertices)
            throw UserError("ball exceeds the vertex limit; lower the radius");
    }
    close_faces(b);
    b.closed = true;
    for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v)
        if (!b.complete(v)) b.closed = false;
    if (b.closed) {
        auto dist = b.distances();
        b.radius = *std::max_element(dist.begin(), dist.end());
    }
    return b;
}

std::vector<std::string> verify(const GraphBall &b)
{
    std::vector<std::string> out;
    int d = b.degree();
    auto dist = b.distances();
    for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v) {
        const auto &x = b.vertices[v];
        for (int q = 0; q < d; ++q) {
            int w = x.nbr[q];
            if (w < 0) continue;
            if (b.vertices[w].nbr[x.back[q]] != v || b.vertices[w].back[x.back[q]] != q)
                out.push_back("edge " + std::to_string(v) + ":" + std::to_string(q) + " is one-sided");
            else if (b.edge_label(v, q) != b.edge_label(w, x.back[q]))
                out.push_back("edge " + std::to_string(v) + ":" + std::to_string(q) + " has two colors");
        }
        if (!pair_isomorphic(arrange(b.pair, x.frame), b.pair))
            out.push_back("vertex " + std::to_string(v) + " has a foreign star");
        if (dist[v] >= 0 && dist[v] < b.radius && !b.complete(v))
            out.push_back("interior vertex " + std::to_string(v) + " is incomplete");
    }
    for (const auto &f : b.closed_faces()) {
        int label = b.face_label(f[0].v, f[0].q);
        for (const auto &c : f)
            if (b.face_label(c.v, c.q) != label) {
                out.push_back("face with mixed colors");
                break;
            }
        if (static_cast<int>(f.size()) != b.face_size(f[0].v, f[0].q))
            out.push_back("face of length " + std::to_string(f.size()) + " where " +
                          std::to_string(b.face_size(f[0].v, f[0].q)) + " is expected");
    }
    if (b.geometry == Geometry::Spherical && b.closed) {
        int chi = static_cast<int>(b.vertices.size()) - b.edge_count() +
                  static_cast<int>(b.closed_faces().size());
        if (chi != 2) out.push_back("closed ball has Euler characteristic " + std::to_string(chi));
    }
    return out;
}

double max_edge_length_error(const GraphBall &b)
{
    if (!b.has_coords) return 0;
    double worst = 0;
    for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v)
        for (int w : b.vertices[v].nbr)
            if (w > v)
                worst = std::max(worst, std::abs(distance(b.vertices[v].point, b.vertices[w].point,
                                                          b.geometry) - b.length));
    return worst;
}

double max_angle_error(const GraphBall &b)
{
    if (!b.has_coords) return 0;
    double worst = 0;
    int d = b.degree();
    for (int v = 0; v < static_cast<int>(b.vertices.size()); ++v) {
        if (!b.complete(v)) continue;
        // direction of each neighbor seen in the vertex's own frame
        Mobius<double> inv_m = b.vertices[v].mobius.inverse();
        for (int q = 0; q < d; ++q) {
            Mobius<double> m = inv_m * b.vertices[b.vertices[v].nbr[q]].mobius;
            std::complex<double> z = origin_image(m);
            double got = std::arg(z);
            double want = slot_angle(b, v, q);
            double diff = std::remainder(got - want, 2 * std::numbers::pi);
            worst = std::max(worst, std::abs(diff));
        }
    }
    return worst;
}

LabelingScheme recover_scheme(const GraphBall &b)
{
    if (b.radius < 2 && !b.closed) throw UserError("recovering a scheme needs a ball of radius 2");
    int d = b.degree();
    auto star = [&](int v, int from) {
        VectorPair p;
        for (int q = 0; q < d; ++q) {
            p.xi.push_back(b.edge_label(v, from + q));
            p.phi.push_back(b.face_label(v, from + q));
        }
        return p;
    };
    LabelingScheme s;
    s.pair = star(0, 0);
    std::set<int> done;
    for (int q = 0; q < d; ++q) {
        int c = b.edge_label(0, q);
        if (!done.insert(c).second) continue;
        int w = b.vertices[0].nbr[q];
        if (w < 0 || !b.complete(w)) throw UserError("ball is too small to read every neighborhood");
        s.neighborhoods.push_back({c, star(0, q), star(w, b.vertices[0].back[q])});
    }
    std::sort(s.neighborhoods.begin(), s.neighborhoods.end(),
              [](const auto &x, const auto &y) { return x.color < y.color; });
    return s;
}

std::string to_string(Growth g)
{
    switch (g) {
    case Growth::Linear: return "linear";
    case Growth::Quadratic: return "quadratic";
    case Growth::Exponential: return "exponential";
    }
    return "";
}

namespace {
// Least squares line through (x, y): {intercept, slope}.
std::pair<double, double> fit_line(const std::vector<double> &x, const std::vector<double> &y)
{
    double n = static_cast<double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {(sy - slope * sx) / n, slope};
}
} // namespace

Growth growth_class(const LabelingScheme &s, const TypeVector &tv, int sample_radius)
{
    Geometry g = classify_geometry(tv);
    if (g == Geometry::Spherical) throw UserError("finite graph");
    if (connectivity_class(s.pair) == Connectivity::ThreeConnected)
        return g == Geometry::Euclidean ? Growth::Quadratic : Growth::Exponential;
    if (sample_radius < 3) throw UserError("growth sampling needs a radius of at least 3");
    GraphBall b = build_ball(s, tv, sample_radius);
    auto dist = b.distances();
    std::vector<double> rs, sizes, logs;
    for (int r = 1; r <= sample_radius; ++r) {
        double n = static_cast<double>(
            std::count_if(dist.begin(), dist.end(), [&](int x) { return x >= 0 && x <= r; }));
        rs.push_back(r);
        sizes.push_back(n);
        logs.push_back(std::log(n));
    }
    // both residuals are relative errors of the ball sizes
    auto [a, k] = fit_line(rs, sizes);
    auto [la, lk] = fit_line(rs, logs);
    double lin = 0, ex = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        double e = (sizes[i] - (a + k * rs[i])) / sizes[i];
        lin += e * e;
        double f = logs[i] - (la + lk * rs[i]);
        ex += f * f;
    }
    return ex < lin ? Growth::Exponential : Growth::Linear;
}

} // namespace vtp
