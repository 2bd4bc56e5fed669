#include "vtp/scheme.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <set>

namespace vtp {

const EdgeNeighborhood *LabelingScheme::neighborhood_for(int color) const
{
    for (const auto &nb : neighborhoods)
        if (nb.color == color) return &nb;
    return nullptr;
}

EdgeNeighborhood make_neighborhood(const VectorPair &pair, int pos1, int dir1, int pos2, int dir2)
{
    EdgeNeighborhood nb;
    nb.color = pair.xi[wrap(pos1, pair.degree())];
    nb.first = arrange(pair, frame_at(pair, pos1, dir1));
    nb.second = arrange(pair, frame_at(pair, pos2, dir2));
    return nb;
}

bool locked(const EdgeNeighborhood &nb)
{
    int d = nb.first.degree();
    if (d < 1 || nb.second.degree() != d) return false;
    if (nb.first.phi.size() != nb.first.xi.size() || nb.second.phi.size() != nb.second.xi.size())
        return false;
    return nb.first.xi[0] == nb.color && nb.second.xi[0] == nb.color &&
           nb.first.phi[0] == nb.second.phi[d - 1] && nb.first.phi[d - 1] == nb.second.phi[0];
}

std::pair<int, int> separator(const EdgeNeighborhood &nb)
{
    return {nb.first.phi.front(), nb.second.phi.front()};
}

EdgeNeighborhood neighborhood_invert(const EdgeNeighborhood &nb)
{
    return {nb.color, nb.second, nb.first};
}

EdgeNeighborhood neighborhood_reflect(const EdgeNeighborhood &nb)
{
    return {nb.color, reflect(nb.first), reflect(nb.second)};
}

EdgeNeighborhood neighborhood_twist(const EdgeNeighborhood &nb, int extremity, int block)
{
    if (extremity != 0 && extremity != 1) throw UserError("extremity must be 0 or 1");
    const VectorPair &ext = extremity == 0 ? nb.first : nb.second;
    auto bl = blocks(ext);
    if (bl.empty()) throw UserError("twist needs an infinite face at the extremity");
    if (block < 0 || block >= static_cast<int>(bl.size())) throw UserError("block index out of range");
    const auto &b = bl[block];
    if (b.size() > 1 && std::find(b.begin(), b.end(), 0) != b.end())
        throw UserError("twist would move the central edge");
    EdgeNeighborhood out = nb;
    (extremity == 0 ? out.first : out.second) = twist(ext, block);
    if (!locked(out)) throw UserError("twist breaks the locking across the central edge");
    return out;
}

namespace {
VectorPair canonical_at_center(const VectorPair &ext)
{
    VectorPair best = ext;
    for (const auto &a : arrangements(ext)) {
        if (a[0] != Slot{0, 1}) continue;
        VectorPair img = arrange(ext, a);
        if (img < best) best = std::move(img);
    }
    return best;
}
} // namespace

EdgeNeighborhood canonical_neighborhood(const EdgeNeighborhood &nb)
{
    EdgeNeighborhood best;
    bool first = true;
    for (const EdgeNeighborhood &v : {nb, neighborhood_invert(nb), neighborhood_reflect(nb),
                                      neighborhood_invert(neighborhood_reflect(nb))}) {
        EdgeNeighborhood c{v.color, canonical_at_center(v.first), canonical_at_center(v.second)};
        if (first || c < best) best = c;
        first = false;
    }
    return best;
}

bool coherent(const EdgeNeighborhood &nb, const VectorPair &pair)
{
    if (nb.first.degree() != pair.degree() || nb.second.degree() != pair.degree()) return false;
    if (nb.first.xi[0] != nb.color || nb.second.xi[0] != nb.color) return false;
    return pair_isomorphic(nb.first, pair) && pair_isomorphic(nb.second, pair);
}

std::vector<std::string> ValidationReport::all() const
{
    std::vector<std::string> out;
    for (const auto *v : {&shape, &class_count, &neighborhood})
        out.insert(out.end(), v->begin(), v->end());
    return out;
}

std::pair<int, int> match_extremity(const VectorPair &pair, const VectorPair &ext)
{
    if (ext.degree() != pair.degree() || ext.degree() == 0) return {-1, 0};
    auto want = flag_reading(ext, 0, 1);
    for (int pos = 0; pos < pair.degree(); ++pos)
        for (int dir : {1, -1})
            if (flag_reading(pair, pos, dir) == want) return {pos, dir};
    return {-1, 0};
}

std::vector<std::vector<int>> inversion(const LabelingScheme &s, const FlagClasses &fc)
{
    std::vector<std::set<int>> rel(fc.count);
    for (const auto &nb : s.neighborhoods) {
        auto [p1, o1] = match_extremity(s.pair, nb.first);
        auto [p2, o2] = match_extremity(s.pair, nb.second);
        if (p1 < 0 || p2 < 0) continue;
        for (int b : {1, -1}) {
            int x = fc.cls(p1, o1 * b), y = fc.cls(p2, o2 * b);
            rel[x].insert(y);
            rel[y].insert(x);
        }
    }
    std::vector<std::vector<int>> out(fc.count);
    for (int i = 0; i < fc.count; ++i) out[i].assign(rel[i].begin(), rel[i].end());
    return out;
}

ValidationReport validate_scheme(const LabelingScheme &s)
{
    ValidationReport r;
    const VectorPair &p = s.pair;
    int d = p.degree();
    if (d < 2) r.shape.push_back("degree must be at least 2");
    if (p.phi.size() != p.xi.size()) r.shape.push_back("edge and face vectors differ in length");
    for (int c : p.xi)
        if (c < 0 || c == kInfinite) r.shape.push_back("edge vector holds an invalid color");
    for (int c : p.phi)
        if (c < 0) r.shape.push_back("face vector holds an invalid color");
    for (const auto &nb : s.neighborhoods)
        if (!locked(nb))
            r.shape.push_back("neighborhood of " + edge_color_name(nb.color) +
                              " is not locked across its central edge");
    if (!r.shape.empty()) return r;

    std::set<int> colors(p.xi.begin(), p.xi.end());
    for (int c : colors) {
        auto eq = eq_count(p, c);
        if (eq.count > 2)
            r.class_count.push_back("edge color " + edge_color_name(c) + " splits into " +
                                    std::to_string(eq.count) + " classes");
    }

    auto reps = edge_class_reps(p);
    for (int c : colors) {
        int n = static_cast<int>(std::count_if(s.neighborhoods.begin(), s.neighborhoods.end(),
                                               [&](const auto &nb) { return nb.color == c; }));
        if (n == 0) r.neighborhood.push_back("no neighborhood for " + edge_color_name(c));
        if (n > 1) r.neighborhood.push_back("several neighborhoods for " + edge_color_name(c));
    }
    for (const auto &nb : s.neighborhoods) {
        std::string name = edge_color_name(nb.color);
        if (!colors.count(nb.color)) {
            r.neighborhood.push_back("neighborhood for absent color " + name);
            continue;
        }
        if (!coherent(nb, p)) {
            r.neighborhood.push_back("neighborhood of " + name + " is not coherent with the pair");
            continue;
        }
        auto eq = eq_count(p, nb.color);
        if (eq.count == 2) {
            int a = reps[match_extremity(p, nb.first).first];
            int b = reps[match_extremity(p, nb.second).first];
            if (a == b)
                r.neighborhood.push_back("neighborhood of " + name +
                                         " does not place both edge classes on its extremities");
        }
    }
    if (r.neighborhood.empty()) {
        auto fc = flag_classes(p);
        auto inv = inversion(s, fc);
        for (int x = 0; x < fc.count; ++x)
            if (inv[x].size() != 1) {
                r.neighborhood.push_back("neighborhoods identify configurations inconsistently");
                break;
            }
    }
    return r;
}

SchemeKey scheme_key(const VectorPair &pair, const FlagClasses &fc, const std::vector<int> &inv)
{
    int d = pair.degree();
    SchemeKey best;
    best.pair = normal_form(pair);
    bool first = true;
    std::vector<int> img(2 * d), rep(fc.count), key(2 * d);
    for (const auto &a : arrangements(pair)) {
        if (relabel(arrange(pair, a)) != best.pair) continue;
        std::fill(rep.begin(), rep.end(), -1);
        for (int q = 0; q < d; ++q)
            for (int b : {1, -1}) {
                int f = flag_index(q, b);
                img[f] = fc.cls(a[q].pos, b * a[q].orient);
                if (rep[img[f]] < 0) rep[img[f]] = f;
            }
        for (int f = 0; f < 2 * d; ++f) key[f] = rep[inv[img[f]]];
        if (first || key < best.inv) best.inv = key;
        first = false;
    }
    return best;
}

SchemeKey scheme_key(const LabelingScheme &s)
{
    auto fc = flag_classes(s.pair);
    auto rel = inversion(s, fc);
    std::vector<int> inv(fc.count);
    for (int x = 0; x < fc.count; ++x) {
        if (rel[x].size() != 1) throw InvariantError("scheme does not define a single inversion");
        inv[x] = rel[x][0];
    }
    return scheme_key(s.pair, fc, inv);
}

bool isomorphic(const LabelingScheme &a, const LabelingScheme &b)
{
    return a.degree() == b.degree() && scheme_key(a) == scheme_key(b);
}

} // namespace vtp
