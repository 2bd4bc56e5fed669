#include "vtp/enumerator.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace vtp {

namespace {

// Restricted growth strings: each new color is one more than the largest so far.
void growth_strings(int n, bool allow_inf, std::vector<int> &cur, int m,
                    std::vector<std::vector<int>> &out)
{
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int c = 0; c <= m; ++c) {
        cur.push_back(c);
        growth_strings(n, allow_inf, cur, std::max(m, c + 1), out);
        cur.pop_back();
    }
    if (allow_inf) {
        cur.push_back(kInfinite);
        growth_strings(n, allow_inf, cur, m, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> growth_strings(int n, bool allow_inf)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    growth_strings(n, allow_inf, cur, 0, out);
    return out;
}

bool few_classes(const VectorPair &p)
{
    std::set<int> colors(p.xi.begin(), p.xi.end());
    return std::all_of(colors.begin(), colors.end(), [&](int c) { return eq_count(p, c).count <= 2; });
}

std::vector<VectorPair> pairs_for_edges(const std::vector<int> &xi,
                                        const std::vector<std::vector<int>> &faces)
{
    std::set<VectorPair> found;
    for (const auto &phi : faces) {
        found.insert(normal_form({xi, phi}));
    }
    std::vector<VectorPair> out;
    for (const auto &p : found)
        if (few_classes(p)) out.push_back(p);
    return out;
}

void check_degree(int d, const EnumerateOptions &opt)
{
    if (d < 2 || d > kMaxDegree)
        throw UserError("degree must be between 2 and " + std::to_string(kMaxDegree));
    if (d == kMaxDegree && !opt.allow_long)
        throw UserError("degree 6 runs for a long time; pass the opt-in flag");
}

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn fn)
{
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::mutex mu;
    std::size_t next = 0;
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= n) return;
                    i = next++;
                }
                fn(i);
            }
        });
    for (auto &t : pool) t.join();
}

} // namespace

std::vector<VectorPair> enumerate_pairs(int d)
{
    if (d < 2) throw UserError("degree must be at least 2");
    auto faces = growth_strings(d, true);
    std::set<VectorPair> all;
    for (const auto &xi : growth_strings(d, false))
        for (auto &p : pairs_for_edges(xi, faces)) all.insert(p);
    return {all.begin(), all.end()};
}

std::vector<NeighborhoodOption> neighborhood_options(const VectorPair &pair, const FlagClasses &fc,
                                                     int color)
{
    auto eq = eq_count(pair, color);
    if (eq.count > 2) return {};
    int p1 = eq.classes[0].front();
    int p2 = eq.classes[eq.count - 1].front();
    std::vector<NeighborhoodOption> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    for (int s : {1, -1}) {
        if (face_after(pair, p1, 1) != face_before(pair, p2, s) ||
            face_before(pair, p1, 1) != face_after(pair, p2, s))
            continue;
        std::map<int, int> m;
        bool ok = true;
        for (int b : {1, -1}) {
            int x = fc.cls(p1, b), y = fc.cls(p2, s * b);
            for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
                auto [it, fresh] = m.emplace(u, v);
                if (!fresh && it->second != v) ok = false;
            }
        }
        if (!ok) continue;
        std::vector<std::pair<int, int>> inv(m.begin(), m.end());
        if (!seen.insert(inv).second) continue;
        out.push_back({make_neighborhood(pair, p1, 1, p2, s), std::move(inv)});
    }
    return out;
}

std::vector<EdgeNeighborhood> enumerate_neighborhoods(const VectorPair &pair, int color)
{
    auto fc = flag_classes(pair);
    std::set<EdgeNeighborhood> out;
    for (const auto &o : neighborhood_options(pair, fc, color)) out.insert(canonical_neighborhood(o.nb));
    return {out.begin(), out.end()};
}

SchemeFamily make_family(const LabelingScheme &s)
{
    SchemeFamily f;
    f.scheme = s;
    f.key = scheme_key(s);
    auto r = analyze(s);
    if (!r.faces.valid) throw UserError("faces of one color have different borders");
    f.ptv = r.ptv;
    f.aperiodic = r.aperiodic;
    f.connectivity = connectivity_class(s.pair);
    return f;
}

namespace {

// The cycle graph: one edge color and one face color on both sides.
std::vector<SchemeFamily> degree_two()
{
    VectorPair p{{0, 0}, {0, 0}};
    LabelingScheme s{p, {make_neighborhood(p, 0, 1, 0, -1)}};
    return {make_family(s)};
}

void schemes_of_pair(const VectorPair &pair, std::mt19937_64 *rng, std::vector<SchemeFamily> &out)
{
    auto fc = flag_classes(pair);
    std::set<int> colorset(pair.xi.begin(), pair.xi.end());
    std::vector<int> colors(colorset.begin(), colorset.end());
    std::vector<std::vector<NeighborhoodOption>> opts;
    for (int c : colors) {
        opts.push_back(neighborhood_options(pair, fc, c));
        if (opts.back().empty()) return;
        if (rng) std::shuffle(opts.back().begin(), opts.back().end(), *rng);
    }
    std::set<SchemeKey> keys;
    std::vector<std::size_t> pick(colors.size(), 0);
    for (;;) {
        std::vector<int> inv(fc.count, -1);
        for (std::size_t c = 0; c < colors.size(); ++c)
            for (auto [x, y] : opts[c][pick[c]].inv) inv[x] = y;
        if (std::find(inv.begin(), inv.end(), -1) == inv.end()) {
            std::vector<std::vector<int>> rel(fc.count);
            for (int x = 0; x < fc.count; ++x) rel[x] = {inv[x]};
            auto r = analyze(pair, rel);
            if (r.faces.valid) {
                auto key = scheme_key(pair, fc, inv);
                if (keys.insert(key).second) {
                    SchemeFamily f;
                    f.scheme.pair = pair;
                    for (std::size_t c = 0; c < colors.size(); ++c)
                        f.scheme.neighborhoods.push_back(opts[c][pick[c]].nb);
                    f.key = std::move(key);
                    f.ptv = r.ptv;
                    f.aperiodic = r.aperiodic;
                    f.connectivity = connectivity_class(pair);
                    out.push_back(std::move(f));
                }
            }
        }
        std::size_t c = 0;
        while (c < colors.size() && ++pick[c] == opts[c].size()) pick[c++] = 0;
        if (c == colors.size()) break;
    }
}

} // namespace

std::vector<SchemeFamily> enumerate_schemes(int d, const EnumerateOptions &opt)
{
    check_degree(d, opt);
    if (d == 2) return degree_two();
    auto edges = growth_strings(d, false);
    auto faces = growth_strings(d, true);
    if (opt.shuffle) {
        std::mt19937_64 rng(opt.shuffle);
        std::shuffle(edges.begin(), edges.end(), rng);
        std::shuffle(faces.begin(), faces.end(), rng);
    }
    // pairs are bucketed by their normalized edge vector so each lands in one task
    std::vector<std::vector<VectorPair>> per(edges.size());
    parallel_for(edges.size(), opt.jobs, [&](std::size_t i) {
        for (auto &p : pairs_for_edges(edges[i], faces))
            if (p.xi == edges[i]) per[i].push_back(p);
    });
    std::vector<VectorPair> pairs;
    for (auto &v : per) pairs.insert(pairs.end(), v.begin(), v.end());
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (opt.shuffle) {
        std::mt19937_64 rng(opt.shuffle + 1);
        std::shuffle(pairs.begin(), pairs.end(), rng);
    }

    std::vector<std::vector<SchemeFamily>> found(pairs.size());
    parallel_for(pairs.size(), opt.jobs, [&](std::size_t i) {
        std::mt19937_64 rng(opt.shuffle + i);
        schemes_of_pair(pairs[i], opt.shuffle ? &rng : nullptr, found[i]);
    });
    std::vector<SchemeFamily> out;
    for (auto &v : found)
        for (auto &f : v) out.push_back(std::move(f));
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.key < b.key; });
    return out;
}

FamilyCounts count_families(const std::vector<SchemeFamily> &fams)
{
    FamilyCounts c;
    for (const auto &f : fams) (f.aperiodic ? c.aperiodic : c.periodic)++;
    return c;
}

} // namespace vtp
