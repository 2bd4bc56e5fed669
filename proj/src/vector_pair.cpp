#include "vtp/vector_pair.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace vtp {

int VectorPair::infinite_count() const
{
    return static_cast<int>(std::count(phi.begin(), phi.end(), kInfinite));
}

int face_after(const VectorPair &p, int pos, int dir)
{
    int d = p.degree();
    return dir > 0 ? p.phi[wrap(pos, d)] : p.phi[wrap(pos - 1, d)];
}

int face_before(const VectorPair &p, int pos, int dir) { return face_after(p, pos, -dir); }

std::vector<std::vector<int>> blocks(const VectorPair &p)
{
    int d = p.degree();
    std::vector<int> infs;
    for (int i = 0; i < d; ++i)
        if (p.phi[i] == kInfinite) infs.push_back(i);
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < infs.size(); ++k) {
        int last = infs[(k + 1) % infs.size()];
        std::vector<int> b;
        for (int j = wrap(infs[k] + 1, d);; j = wrap(j + 1, d)) {
            b.push_back(j);
            if (j == last) break;
        }
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return out;
}

VectorPair arrange(const VectorPair &p, const Arrangement &a)
{
    int d = p.degree();
    VectorPair out;
    out.xi.resize(d);
    out.phi.resize(d);
    for (int q = 0; q < d; ++q) {
        out.xi[q] = p.xi[a[q].pos];
        out.phi[q] = face_after(p, a[q].pos, a[q].orient);
    }
    return out;
}

namespace {

std::vector<Arrangement> dihedral(int d)
{
    std::vector<Arrangement> out;
    for (int r = 0; r < d; ++r) {
        Arrangement a(d), b(d);
        for (int q = 0; q < d; ++q) {
            a[q] = {wrap(q + r, d), 1};
            b[q] = {wrap(r - q, d), -1};
        }
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

std::vector<Arrangement> block_images(int d, const std::vector<std::vector<int>> &bl)
{
    int t = static_cast<int>(bl.size());
    double estimate = 2.0 * d;
    for (int i = 1; i <= t; ++i) estimate *= 2.0 * i;
    if (estimate > 2.0e7)
        throw UserError("pair has too many blocks for exhaustive canonicalization");
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<Arrangement> seen;
    std::vector<Arrangement> out;
    do {
        for (int mask = 0; mask < (1 << t); ++mask) {
            Arrangement seq;
            seq.reserve(d);
            for (int k = 0; k < t; ++k) {
                const auto &b = bl[perm[k]];
                bool rev = (mask >> k) & 1;
                for (std::size_t j = 0; j < b.size(); ++j)
                    seq.push_back({rev ? b[b.size() - 1 - j] : b[j], rev ? -1 : 1});
            }
            for (int r = 0; r < d; ++r) {
                Arrangement a(d);
                for (int q = 0; q < d; ++q) a[q] = seq[(q + r) % d];
                if (seen.insert(a).second) out.push_back(std::move(a));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

const std::vector<Arrangement> &arrangements(const VectorPair &p)
{
    static std::mutex mu;
    static std::map<std::pair<int, std::uint64_t>, std::vector<Arrangement>> cache;
    int d = p.degree();
    std::uint64_t mask = 0;
    for (int i = 0; i < d; ++i)
        if (p.phi[i] == kInfinite) mask |= std::uint64_t(1) << i;
    auto key = std::make_pair(d, mask);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto bl = blocks(p);
    std::vector<Arrangement> fresh = bl.size() <= 1 ? dihedral(d) : block_images(d, bl);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(fresh)).first->second;
}

std::vector<Arrangement> automorphisms(const VectorPair &p)
{
    std::vector<Arrangement> out;
    for (const auto &a : arrangements(p))
        if (arrange(p, a) == p) out.push_back(a);
    return out;
}

Arrangement frame_at(const VectorPair &p, int pos, int dir)
{
    int d = p.degree();
    pos = wrap(pos, d);
    Arrangement a;
    a.reserve(d);
    auto bl = blocks(p);
    if (bl.size() <= 1) {
        for (int q = 0; q < d; ++q) a.push_back({wrap(pos + dir * q, d), dir});
        return a;
    }
    std::size_t home = 0;
    for (std::size_t k = 0; k < bl.size(); ++k)
        if (std::find(bl[k].begin(), bl[k].end(), pos) != bl[k].end()) home = k;
    std::vector<int> own = bl[home];
    if (dir < 0) std::reverse(own.begin(), own.end());
    auto at = std::find(own.begin(), own.end(), pos) - own.begin();
    for (std::size_t j = at; j < own.size(); ++j) a.push_back({own[j], dir});
    for (std::size_t k = 1; k < bl.size(); ++k)
        for (int x : bl[(home + k) % bl.size()]) a.push_back({x, 1});
    for (std::size_t j = 0; j < static_cast<std::size_t>(at); ++j) a.push_back({own[j], dir});
    return a;
}

VectorPair rotate(const VectorPair &p, int s)
{
    int d = p.degree();
    Arrangement a(d);
    for (int q = 0; q < d; ++q) a[q] = {wrap(q + s, d), 1};
    return arrange(p, a);
}

// Reversing the edges forces phi'[q] = phi[-q-1]: edge -q keeps its two faces.
VectorPair reflect(const VectorPair &p)
{
    int d = p.degree();
    Arrangement a(d);
    for (int q = 0; q < d; ++q) a[q] = {wrap(-q, d), -1};
    return arrange(p, a);
}

VectorPair rearrange(const VectorPair &p, const std::vector<int> &sigma)
{
    auto bl = blocks(p);
    int t = static_cast<int>(bl.size());
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(std::max(t, 1));
    std::iota(ident.begin(), ident.end(), 0);
    bool identity = sigma == ident || sigma.empty();
    if (t < 2) {
        if (!identity) throw UserError("no blocks to rearrange");
        return p;
    }
    if (static_cast<int>(sigma.size()) != t || sorted != ident)
        throw UserError("block permutation has the wrong size or repeats a block");
    int d = p.degree();
    Arrangement seq;
    for (int k : sigma)
        for (int x : bl[k]) seq.push_back({x, 1});
    Arrangement a(d);
    int start = bl[0].front();
    for (int q = 0; q < d; ++q) a[wrap(start + q, d)] = seq[q];
    return arrange(p, a);
}

VectorPair twist(const VectorPair &p, int block)
{
    auto bl = blocks(p);
    if (bl.empty()) throw UserError("twist needs an infinite face; use reflect");
    if (block < 0 || block >= static_cast<int>(bl.size()))
        throw UserError("block index out of range");
    int d = p.degree();
    Arrangement a(d);
    for (int q = 0; q < d; ++q) a[q] = {q, 1};
    const auto &b = bl[block];
    for (std::size_t j = 0; j < b.size(); ++j) a[b[j]] = {b[b.size() - 1 - j], -1};
    return arrange(p, a);
}

VectorPair canonical_pair(const VectorPair &p)
{
    VectorPair best;
    bool first = true;
    for (const auto &a : arrangements(p)) {
        VectorPair img = arrange(p, a);
        if (first || img < best) best = std::move(img);
        first = false;
    }
    return best;
}

namespace {
std::vector<int> block_word(const VectorPair &p, const std::vector<int> &b, bool reversed)
{
    std::vector<int> w;
    int n = static_cast<int>(b.size());
    for (int j = 0; j < n; ++j) {
        int x = reversed ? b[n - 1 - j] : b[j];
        w.push_back(p.xi[x]);
        if (j + 1 < n) w.push_back(face_after(p, x, reversed ? -1 : 1));
    }
    return w;
}
} // namespace

bool pair_isomorphic(const VectorPair &a, const VectorPair &b)
{
    if (a.degree() != b.degree() || a.infinite_count() != b.infinite_count()) return false;
    if (a.infinite_count() <= 1) return canonical_pair(a) == canonical_pair(b);
    auto words = [](const VectorPair &p) {
        std::vector<std::vector<int>> out;
        for (const auto &bl : blocks(p)) out.push_back(std::min(block_word(p, bl, false), block_word(p, bl, true)));
        std::sort(out.begin(), out.end());
        return out;
    };
    return words(a) == words(b);
}

VectorPair relabel(const VectorPair &p)
{
    VectorPair out = p;
    std::map<int, int> em, fm;
    for (auto &c : out.xi) c = em.emplace(c, static_cast<int>(em.size())).first->second;
    for (auto &c : out.phi)
        if (c != kInfinite) c = fm.emplace(c, static_cast<int>(fm.size())).first->second;
    return out;
}

VectorPair normal_form(const VectorPair &p)
{
    VectorPair best;
    bool first = true;
    for (const auto &a : arrangements(p)) {
        VectorPair img = relabel(arrange(p, a));
        if (first || img < best) best = std::move(img);
        first = false;
    }
    return best;
}

std::vector<int> flag_reading(const VectorPair &p, int pos, int dir)
{
    int d = p.degree();
    std::vector<int> out;
    out.reserve(4 * d + 1);
    for (int side : {dir, -dir}) {
        int x = wrap(pos, d);
        for (int step = 0; step < d; ++step) {
            out.push_back(p.xi[x]);
            int f = face_after(p, x, side);
            out.push_back(f);
            if (f == kInfinite) break;
            x = wrap(x + side, d);
        }
        out.push_back(-1);
    }
    return out;
}

FlagClasses flag_classes(const VectorPair &p)
{
    FlagClasses fc;
    int d = p.degree();
    fc.degree = d;
    fc.of.assign(2 * d, -1);
    std::map<std::vector<int>, int> ids;
    for (int pos = 0; pos < d; ++pos)
        for (int dir : {1, -1}) {
            auto [it, fresh] = ids.emplace(flag_reading(p, pos, dir), fc.count);
            if (fresh) {
                ++fc.count;
                fc.rep_pos.push_back(pos);
                fc.rep_dir.push_back(dir);
            }
            fc.of[flag_index(pos, dir)] = it->second;
        }
    return fc;
}

namespace {
std::vector<int> edge_key(const VectorPair &p, int pos)
{
    return std::min(flag_reading(p, pos, 1), flag_reading(p, pos, -1));
}
} // namespace

std::vector<int> edge_class_reps(const VectorPair &p)
{
    int d = p.degree();
    std::map<std::vector<int>, int> first;
    std::vector<int> out(d);
    for (int pos = 0; pos < d; ++pos) out[pos] = first.emplace(edge_key(p, pos), pos).first->second;
    return out;
}

EqClasses eq_count(const VectorPair &p, int color)
{
    if (std::find(p.xi.begin(), p.xi.end(), color) == p.xi.end())
        throw UserError("edge color " + edge_color_name(color) + " does not occur in the edge vector");
    auto reps = edge_class_reps(p);
    std::map<int, std::vector<int>> by_rep;
    for (int pos = 0; pos < p.degree(); ++pos)
        if (p.xi[pos] == color) by_rep[reps[pos]].push_back(pos);
    EqClasses out;
    for (auto &[r, v] : by_rep) out.classes.push_back(v);
    out.count = static_cast<int>(out.classes.size());
    return out;
}

std::string edge_color_name(int c) { return "a" + std::to_string(c + 1); }

std::string face_color_name(int c) { return c == kInfinite ? "inf" : "f" + std::to_string(c + 1); }

std::string format_colors(const std::vector<int> &v, bool faces)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += faces ? face_color_name(v[i]) : edge_color_name(v[i]);
    }
    return out;
}

std::vector<int> parse_colors(const std::string &s, bool faces)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (faces && (tok == "inf" || tok == "oo")) {
            out.push_back(kInfinite);
            continue;
        }
        char want = faces ? 'f' : 'a';
        if (tok.size() < 2 || tok[0] != want)
            throw UserError("cannot parse color '" + tok + "'");
        int n = 0;
        try {
            n = std::stoi(tok.substr(1));
        } catch (const std::exception &) {
            throw UserError("cannot parse color '" + tok + "'");
        }
        if (n < 1) throw UserError("color indices start at 1: '" + tok + "'");
        out.push_back(n - 1);
    }
    return out;
}

} // namespace vtp
