#include "vtp/cayley.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace vtp {

std::string to_string(Stabilizer::Kind k)
{
    switch (k) {
    case Stabilizer::Kind::Trivial: return "trivial";
    case Stabilizer::Kind::Cyclic: return "cyclic";
    case Stabilizer::Kind::Dihedral: return "dihedral";
    }
    return "";
}

namespace {

std::vector<int> functional_inv(const LabelingScheme &s, const FlagClasses &fc)
{
    auto rel = inversion(s, fc);
    std::vector<int> inv(fc.count);
    for (int x = 0; x < fc.count; ++x) {
        if (rel[x].size() != 1) throw UserError("scheme does not define a single inversion");
        inv[x] = rel[x][0];
    }
    return inv;
}

// A star symmetry extends to the graph when it commutes with crossing edges.
bool extends(const VectorPair &p, const FlagClasses &fc, const std::vector<int> &inv, const Arrangement &a)
{
    std::vector<int> img(fc.count, -1);
    for (int q = 0; q < p.degree(); ++q)
        for (int b : {1, -1}) {
            int from = fc.cls(q, b), to = fc.cls(a[q].pos, b * a[q].orient);
            if (img[from] >= 0 && img[from] != to) return false;
            img[from] = to;
        }
    for (int x = 0; x < fc.count; ++x)
        if (img[inv[x]] != inv[img[x]]) return false;
    return true;
}

} // namespace

Stabilizer stabilizer(const LabelingScheme &s)
{
    const VectorPair &p = s.pair;
    int d = p.degree();
    auto fc = flag_classes(p);
    auto inv = functional_inv(s, fc);
    Stabilizer st;
    st.rotation_order = 0;
    for (int r = 0; r < d; ++r) {
        Arrangement rot(d), ref(d);
        for (int q = 0; q < d; ++q) {
            rot[q] = {wrap(q + r, d), 1};
            ref[q] = {wrap(r - q, d), -1};
        }
        if (arrange(p, rot) == p && extends(p, fc, inv, rot)) ++st.rotation_order;
        if (arrange(p, ref) == p && extends(p, fc, inv, ref)) st.has_reflection = true;
    }
    st.kind = st.has_reflection ? Stabilizer::Kind::Dihedral
                                : (st.rotation_order > 1 ? Stabilizer::Kind::Cyclic : Stabilizer::Kind::Trivial);
    return st;
}

namespace {

LabelingScheme rebuild(const LabelingScheme &s, const VectorPair &from, const VectorPair &to, int period)
{
    LabelingScheme out;
    out.pair = to;
    for (const auto &nb : s.neighborhoods) {
        auto [p1, o1] = match_extremity(from, nb.first);
        auto [p2, o2] = match_extremity(from, nb.second);
        if (p1 < 0 || p2 < 0) throw UserError("neighborhood does not match the pair");
        out.neighborhoods.push_back(make_neighborhood(to, p1 % period, o1, p2 % period, o2));
    }
    return out;
}

} // namespace

LabelingScheme multiply(const LabelingScheme &s, int k, int max_degree)
{
    if (k < 2) throw UserError("multiplicity must be at least 2");
    int d = s.degree();
    if (k * d > max_degree) throw UserError("multiplied degree exceeds " + std::to_string(max_degree));
    VectorPair p;
    for (int i = 0; i < k * d; ++i) {
        p.xi.push_back(s.pair.xi[i % d]);
        p.phi.push_back(s.pair.phi[i % d]);
    }
    LabelingScheme out = rebuild(s, s.pair, p, d);
    if (flag_classes(p).count != flag_classes(s.pair).count)
        throw InvariantError("multiplication changed the configurations");
    return out;
}

Division divide(const LabelingScheme &s)
{
    int d = s.degree();
    for (int k = d / 2; k >= 2; --k) {
        if (d % k) continue;
        int m = d / k;
        for (int r = 0; r < m; ++r) {
            VectorPair p = rotate(s.pair, r);
            bool periodic = true;
            for (int i = m; i < d && periodic; ++i)
                periodic = p.xi[i] == p.xi[i - m] && p.phi[i] == p.phi[i - m];
            if (!periodic) continue;
            VectorPair base{{p.xi.begin(), p.xi.begin() + m}, {p.phi.begin(), p.phi.begin() + m}};
            LabelingScheme b;
            try {
                b = rebuild(s, p, base, m);
            } catch (const UserError &) {
                continue;
            }
            if (!validate_scheme(b).ok()) continue;
            // the multiple must glue exactly like the rotated scheme
            LabelingScheme turned{p, s.neighborhoods};
            auto fc = flag_classes(p);
            if (inversion(multiply(b, k, d), fc) == inversion(turned, fc)) return {b, k};
        }
    }
    return {s, 1};
}

std::string to_string(Taxonomy t)
{
    return t == Taxonomy::Cayley ? "cayley" : "face-edge-transitive";
}

Taxonomy prime_degree_taxonomy(const LabelingScheme &s, const TypeVector &tv)
{
    int d = s.degree();
    bool prime = d >= 2;
    for (int q = 2; q * q <= d; ++q)
        if (d % q == 0) prime = false;
    if (!prime) throw UserError("degree " + std::to_string(d) + " is not prime");
    if (connectivity_class(s.pair) != Connectivity::ThreeConnected)
        throw UserError("graph is not 3-connected");
    auto val = validate_type_vector(primitive_type_vector(s), tv);
    if (!val.ok) throw UserError("type vector rejected: " + val.reason);
    return stabilizer(s).rotation_order > 1 ? Taxonomy::FaceEdgeTransitive : Taxonomy::Cayley;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Cayley: return "cayley";
    case Verdict::NotCayley: return "not-cayley";
    case Verdict::Undetermined: return "undetermined";
    }
    return "";
}

std::vector<int> ball_code(const GraphBall &b, int depth, int start_slot, int dir)
{
    int d = b.degree();
    auto dist = b.distances();
    std::vector<int> id(b.vertices.size(), -1), entry(b.vertices.size(), 0);
    std::deque<int> q{0};
    id[0] = 0;
    entry[0] = start_slot;
    int next_id = 1;
    std::vector<int> code;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (dist[v] >= depth) continue;
        for (int k = 0; k < d; ++k) {
            int slot = wrap(entry[v] + dir * k, d);
            int w = b.vertices[v].nbr[slot];
            if (w < 0) {
                code.push_back(-1);
                continue;
            }
            if (id[w] < 0) {
                id[w] = next_id++;
                entry[w] = b.vertices[v].back[slot];
                q.push_back(w);
            }
            code.push_back(id[w]);
        }
    }
    return code;
}

bool same_rooted_ball(const GraphBall &a, const GraphBall &b, int depth)
{
    if (a.degree() != b.degree()) return false;
    auto target = ball_code(a, depth, 0, 1);
    for (int s = 0; s < b.degree(); ++s)
        for (int dir : {1, -1})
            if (ball_code(b, depth, s, dir) == target) return true;
    return false;
}

namespace {

std::vector<TypeVector> dihedral_images(const TypeVector &tv)
{
    int d = static_cast<int>(tv.size());
    std::set<TypeVector> out;
    for (int r = 0; r < d; ++r) {
        TypeVector a(d), b(d);
        for (int q = 0; q < d; ++q) {
            a[q] = tv[wrap(q + r, d)];
            b[q] = tv[wrap(r - q - 1, d)];
        }
        out.insert(a);
        out.insert(b);
    }
    return {out.begin(), out.end()};
}

const std::vector<SchemeFamily> &default_candidates(int d)
{
    static std::mutex mu;
    static std::map<int, std::vector<SchemeFamily>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    EnumerateOptions opt;
    opt.allow_long = true;
    return cache.emplace(d, enumerate_schemes(d, opt)).first->second;
}

bool six_n_pm_one(const TypeVector &tv)
{
    if (tv.size() != 3 || tv[0] == kInfinite) return false;
    return std::all_of(tv.begin(), tv.end(), [&](int k) { return k == tv[0]; }) &&
           (tv[0] % 6 == 1 || tv[0] % 6 == 5);
}

} // namespace

CayleyReport is_cayley(const LabelingScheme &s, const TypeVector &tv, int search_radius,
                       const std::vector<SchemeFamily> *candidates)
{
    if (search_radius < 1) throw UserError("search radius must be at least 1");
    SchemeFamily self = make_family(s);
    auto val = validate_type_vector(self.ptv, tv);
    if (!val.ok) throw UserError("type vector rejected: " + val.reason);
    CayleyReport rep;
    if (self.aperiodic) {
        rep.verdict = Verdict::NotCayley;
        rep.certificate = "aperiodic face border";
        return rep;
    }
    Geometry g = classify_geometry(tv);
    bool finite = g == Geometry::Spherical;
    int d = s.degree();
    const auto &pool = candidates ? *candidates : default_candidates(d);
    GraphBall target = build_ball(s, tv, search_radius);
    int depth = finite ? static_cast<int>(target.vertices.size()) : search_radius;

    std::vector<const SchemeFamily *> cands{&self};
    for (const auto &f : pool)
        if (f.degree() == d && !f.aperiodic && f.key != self.key) cands.push_back(&f);
    for (const auto *c : cands)
        for (const auto &img : dihedral_images(tv)) {
            if (!validate_type_vector(c->ptv, img).ok) continue;
            GraphBall other;
            try {
                other = build_ball(c->scheme, img, search_radius);
            } catch (const InvariantError &) {
                continue;
            }
            if (other.closed != target.closed) continue;
            if (finite && other.vertices.size() != target.vertices.size()) continue;
            if (!same_rooted_ball(target, other, depth)) continue;
            rep.same_ball.emplace_back(c->scheme, img);
            if (rep.verdict != Verdict::Cayley && stabilizer(c->scheme).rotation_order == 1) {
                rep.verdict = Verdict::Cayley;
                rep.witness = c->scheme;
                rep.witness_tv = img;
                rep.certificate = "scheme without rotations realizes the same graph";
            }
        }
    if (rep.verdict == Verdict::Cayley) return rep;
    if (finite && target.closed) {
        rep.verdict = Verdict::NotCayley;
        rep.certificate = "finite graph: every scheme of the same graph has rotations";
    } else if (six_n_pm_one(tv)) {
        rep.verdict = Verdict::NotCayley;
        rep.certificate = "uniform degree-3 tiling with faces of size 6n+1 or 6n-1";
    } else {
        rep.certificate = "no witness within radius " + std::to_string(search_radius);
    }
    return rep;
}

} // namespace vtp
