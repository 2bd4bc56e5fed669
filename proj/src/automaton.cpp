#include "vtp/automaton.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace vtp {

bool BorderAutomaton::deterministic() const
{
    return std::all_of(next.begin(), next.end(), [](const auto &s) { return s.size() == 1; });
}

std::string BorderAutomaton::dump() const
{
    auto name = [&](int x) {
        return std::to_string(classes.rep_pos[x] + 1) + (classes.rep_dir[x] > 0 ? "+" : "-");
    };
    auto set = [&](const std::vector<int> &v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + name(v[i]);
        return s + "}";
    };
    std::ostringstream out;
    for (int x = 0; x < size(); ++x)
        out << x << ' ' << name(x) << ' ' << edge_color_name(color_of[x]) << " face="
            << face_color_name(face_of[x]) << " next=" << set(next[x]) << " inv=" << set(inv[x])
            << '\n';
    return out.str();
}

BorderAutomaton make_automaton(const VectorPair &pair, const std::vector<std::vector<int>> &inv)
{
    BorderAutomaton a;
    a.pair = pair;
    a.classes = flag_classes(pair);
    const auto &fc = a.classes;
    int d = pair.degree();
    if (static_cast<int>(inv.size()) != fc.count)
        throw InvariantError("inversion relation does not cover every configuration");
    a.inv = inv;
    a.next.assign(fc.count, {});
    a.face_of.assign(fc.count, -1);
    a.color_of.assign(fc.count, -1);
    auto bl = blocks(pair);
    for (int pos = 0; pos < d; ++pos)
        for (int dir : {1, -1}) {
            int x = fc.cls(pos, dir);
            int f = face_after(pair, pos, dir);
            if (a.face_of[x] < 0) a.face_of[x] = f;
            if (a.face_of[x] != f || (a.color_of[x] >= 0 && a.color_of[x] != pair.xi[pos]))
                throw InvariantError("configuration reads two different faces");
            a.color_of[x] = pair.xi[pos];
            std::set<int> succ(a.next[x].begin(), a.next[x].end());
            if (f != kInfinite || bl.size() <= 1) {
                succ.insert(fc.cls(pos + dir, dir));
            } else {
                for (const auto &b : bl) {
                    if (std::find(b.begin(), b.end(), pos) != b.end()) continue;
                    succ.insert(fc.cls(b.front(), 1));
                    succ.insert(fc.cls(b.back(), -1));
                }
            }
            a.next[x].assign(succ.begin(), succ.end());
        }
    return a;
}

BorderAutomaton build_automaton(const LabelingScheme &s)
{
    auto rep = validate_scheme(s);
    if (!rep.ok()) throw UserError("invalid scheme: " + rep.all().front());
    auto fc = flag_classes(s.pair);
    return make_automaton(s.pair, inversion(s, fc));
}

bool OmegaWord::periodic() const
{
    if (!defect.empty() || head.size() != tail.size()) return false;
    for (std::size_t r = 0; r < tail.size(); ++r)
        if (std::equal(head.begin(), head.end(), tail.begin() + r, tail.end()) &&
            std::equal(tail.begin(), tail.begin() + r, head.end() - r))
            return true;
    return head.empty();
}

namespace {
std::string word_str(const std::vector<int> &w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + edge_color_name(w[i]);
    return s;
}
} // namespace

std::string OmegaWord::str() const
{
    if (periodic()) return "(" + word_str(head) + ")^w";
    std::string s = "(" + word_str(head) + ")^w";
    if (!defect.empty()) s += " " + word_str(defect);
    return s + " (" + word_str(tail) + ")^w";
}

std::vector<int> Orbit::positions(const FlagClasses &fc) const
{
    std::set<int> cs(crossed.begin(), crossed.end()), out;
    for (int p = 0; p < fc.degree; ++p)
        if (cs.count(fc.cls(p, 1)) || cs.count(fc.cls(p, -1))) out.insert(p);
    return {out.begin(), out.end()};
}

std::string letter_name(int letter)
{
    static const char *names[] = {"n", "m", "p", "q", "r", "s", "t", "u"};
    if (letter >= 0 && letter < 8) return names[letter];
    return "x" + std::to_string(letter + 1);
}

std::string format_ptv(const PrimitiveTypeVector &p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        if (p[i].k == 0) s += "inf";
        else s += (p[i].k == 1 ? "" : std::to_string(p[i].k)) + letter_name(p[i].letter);
    }
    return s + "]";
}

TypeVector parse_type_vector(const std::string &s)
{
    TypeVector out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        tok.erase(std::remove(tok.begin(), tok.end(), '['), tok.end());
        tok.erase(std::remove(tok.begin(), tok.end(), ']'), tok.end());
        if (tok == "inf" || tok == "oo") {
            out.push_back(kInfinite);
            continue;
        }
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            throw UserError("cannot parse type vector entry '" + tok + "'");
        }
        if (used != tok.size() || v < 1) throw UserError("cannot parse type vector entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UserError("empty type vector");
    return out;
}

std::string format_type_vector(const TypeVector &tv)
{
    std::string s = "[";
    for (std::size_t i = 0; i < tv.size(); ++i)
        s += (i ? "," : "") + (tv[i] == kInfinite ? std::string("inf") : std::to_string(tv[i]));
    return s + "]";
}

namespace {

struct Walk {
    std::vector<int> states;
    std::vector<int> crossed;
};

Walk walk_face(const BorderAutomaton &a, int start)
{
    Walk w;
    int cur = start;
    for (int guard = 0; guard <= 2 * a.size() + 1; ++guard) {
        w.states.push_back(cur);
        if (a.next[cur].size() != 1 || a.inv[a.next[cur][0]].size() != 1)
            throw InvariantError("finite face walk is not deterministic");
        int y = a.next[cur][0];
        w.crossed.push_back(y);
        cur = a.inv[y][0];
        if (cur == start) return w;
    }
    throw InvariantError("finite face walk does not close");
}

std::vector<int> colors(const BorderAutomaton &a, const std::vector<int> &states)
{
    std::vector<int> w;
    for (int y : states) w.push_back(a.color_of[y]);
    return w;
}

std::vector<int> rotmin(const std::vector<int> &w)
{
    std::vector<int> best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<int> c(w.begin() + r, w.end());
        c.insert(c.end(), w.begin(), w.begin() + r);
        best = std::min(best, c);
    }
    return best;
}

bool same_border(std::vector<int> a, std::vector<int> b)
{
    if (rotmin(a) == rotmin(b)) return true;
    std::reverse(b.begin(), b.end());
    return rotmin(a) == rotmin(b);
}

struct Step {
    int from, to, letter;
};

// Shortest letter path from `from` to `to` (at least one step) within allowed nodes.
std::vector<int> letter_path(const std::vector<Step> &steps, int n, int from, int to)
{
    std::vector<int> prev(n, -1), via(n, -1);
    std::deque<int> q;
    for (std::size_t e = 0; e < steps.size(); ++e)
        if (steps[e].from == from && prev[steps[e].to] < 0) {
            prev[steps[e].to] = from;
            via[steps[e].to] = static_cast<int>(e);
            q.push_back(steps[e].to);
        }
    while (!q.empty() && prev[to] < 0) {
        int x = q.front();
        q.pop_front();
        for (std::size_t e = 0; e < steps.size(); ++e)
            if (steps[e].from == x && prev[steps[e].to] < 0) {
                prev[steps[e].to] = x;
                via[steps[e].to] = static_cast<int>(e);
                q.push_back(steps[e].to);
            }
    }
    if (prev[to] < 0) return {};
    std::vector<int> word;
    int cur = to;
    do {
        const Step &s = steps[via[cur]];
        word.push_back(s.letter);
        cur = s.from;
    } while (cur != from || word.empty());
    std::reverse(word.begin(), word.end());
    return word;
}

OmegaWord describe_component(const std::vector<Step> &steps, int n, const std::vector<int> &nodes,
                             const std::vector<std::vector<char>> &reach)
{
    OmegaWord w;
    std::vector<int> transient, cyclic;
    for (int x : nodes) (reach[x][x] ? cyclic : transient).push_back(x);
    if (cyclic.empty()) return w;
    if (transient.empty()) {
        w.head = w.tail = letter_path(steps, n, cyclic.front(), cyclic.front());
        return w;
    }
    int t = transient.front();
    int h = -1, e = -1;
    for (int x : cyclic)
        if (h < 0 && reach[x][t]) h = x;
    for (int x : cyclic)
        if (e < 0 && reach[t][x]) e = x;
    if (h < 0) h = e;
    if (e < 0) e = h;
    w.head = letter_path(steps, n, h, h);
    w.tail = letter_path(steps, n, e, e);
    if (reach[h][t]) {
        w.defect = letter_path(steps, n, h, t);
        auto rest = letter_path(steps, n, t, e);
        w.defect.insert(w.defect.end(), rest.begin(), rest.end());
    }
    // letters that continue either periodic side belong to it
    while (!w.defect.empty() && !w.head.empty() && w.defect.front() == w.head.front()) {
        std::rotate(w.head.begin(), w.head.begin() + 1, w.head.end());
        w.defect.erase(w.defect.begin());
    }
    while (!w.defect.empty() && !w.tail.empty() && w.defect.back() == w.tail.back()) {
        std::rotate(w.tail.rbegin(), w.tail.rbegin() + 1, w.tail.rend());
        w.defect.pop_back();
    }
    return w;
}

} // namespace

FaceCheck check_face_equivalence(const BorderAutomaton &a)
{
    FaceCheck out;
    const auto &p = a.pair;
    int d = p.degree();
    std::vector<std::vector<int>> words(d);
    for (int i = 0; i < d; ++i)
        if (p.phi[i] != kInfinite) words[i] = colors(a, walk_face(a, a.classes.cls(i, 1)).crossed);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (p.phi[i] == kInfinite || p.phi[i] != p.phi[j]) continue;
            if (!same_border(words[i], words[j])) {
                out.valid = false;
                out.face_a = i;
                out.face_b = j;
                return out;
            }
        }
    return out;
}

Analysis analyze(const VectorPair &pair, const std::vector<std::vector<int>> &inv)
{
    Analysis r;
    r.automaton = make_automaton(pair, inv);
    const auto &a = r.automaton;
    const auto &fc = a.classes;
    int d = pair.degree(), n = fc.count;
    r.orbit_of_face.assign(d, -1);

    std::vector<std::set<int>> orbit_sets;
    std::map<int, int> letters;
    r.ptv.assign(d, {});
    for (int i = 0; i < d; ++i) {
        if (pair.phi[i] == kInfinite) continue;
        Walk fw = walk_face(a, fc.cls(i, 1));
        Walk bw = walk_face(a, fc.cls(i + 1, -1));
        std::set<int> fs(fw.states.begin(), fw.states.end());
        std::set<int> bs(bw.states.begin(), bw.states.end());
        int found = -1;
        for (std::size_t o = 0; o < r.orbits.size(); ++o)
            if (!r.orbits[o].infinite && (orbit_sets[o] == fs || orbit_sets[o] == bs))
                found = static_cast<int>(o);
        if (found < 0) {
            Orbit o;
            o.face_color = pair.phi[i];
            o.states = fw.states;
            o.crossed = fw.crossed;
            o.word = colors(a, fw.crossed);
            r.orbits.push_back(o);
            orbit_sets.push_back(fs);
            found = static_cast<int>(r.orbits.size()) - 1;
        }
        r.orbits[found].faces.push_back(i);
        r.orbit_of_face[i] = found;
        int letter = letters.emplace(pair.phi[i], static_cast<int>(letters.size())).first->second;
        r.ptv[i] = {static_cast<int>(fw.states.size()), letter};
    }
    r.faces = check_face_equivalence(a);

    // states reachable while running along infinite faces
    std::vector<Step> steps;
    for (int x = 0; x < n; ++x)
        for (int y : a.next[x])
            for (int z : a.inv[y]) steps.push_back({x, z, a.color_of[y]});
    std::vector<char> region(n, 0);
    std::deque<int> todo;
    for (int i = 0; i < d; ++i)
        if (pair.phi[i] == kInfinite)
            for (int x : {fc.cls(i, 1), fc.cls(i + 1, -1)})
                if (!region[x]) {
                    region[x] = 1;
                    todo.push_back(x);
                }
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        for (const auto &s : steps)
            if (s.from == x && !region[s.to]) {
                region[s.to] = 1;
                todo.push_back(s.to);
            }
    }
    std::vector<Step> inner;
    for (const auto &s : steps)
        if (region[s.from] && region[s.to]) inner.push_back(s);
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (const auto &s : inner) reach[s.from][s.to] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    for (int x = 0; x < n; ++x)
        if (region[x] && !reach[x][x]) r.aperiodic = true;

    // weakly connected components of the region
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int x = 0; x < n; ++x) {
        if (!region[x] || comp[x] >= 0) continue;
        comp[x] = ncomp;
        std::vector<int> stack{x};
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            for (const auto &s : inner) {
                int other = s.from == y ? s.to : (s.to == y ? s.from : -1);
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = ncomp;
                    stack.push_back(other);
                }
            }
        }
        ++ncomp;
    }
    for (int c = 0; c < ncomp; ++c) {
        Orbit o;
        o.infinite = true;
        o.face_color = kInfinite;
        for (int x = 0; x < n; ++x)
            if (comp[x] == c) o.states.push_back(x);
        std::set<int> crossed;
        for (int x : o.states)
            for (int y : a.next[x]) crossed.insert(y);
        o.crossed.assign(crossed.begin(), crossed.end());
        o.omega = describe_component(inner, n, o.states, reach);
        o.word = o.omega.head;
        for (int i = 0; i < d; ++i)
            if (pair.phi[i] == kInfinite && comp[fc.cls(i, 1)] == c) {
                o.faces.push_back(i);
                r.orbit_of_face[i] = static_cast<int>(r.orbits.size());
            }
        r.orbits.push_back(o);
    }
    return r;
}

Analysis analyze(const LabelingScheme &s)
{
    auto a = build_automaton(s);
    return analyze(s.pair, a.inv);
}

PrimitiveTypeVector primitive_type_vector(const LabelingScheme &s)
{
    auto r = analyze(s);
    if (!r.faces.valid)
        throw UserError("faces " + std::to_string(r.faces.face_a + 1) + " and " +
                        std::to_string(r.faces.face_b + 1) + " share a color but not a border");
    return r.ptv;
}

Valuation validate_type_vector(const PrimitiveTypeVector &ptv, const TypeVector &tv)
{
    Valuation v;
    if (ptv.size() != tv.size()) {
        v.reason = "type vector has length " + std::to_string(tv.size()) + ", expected " +
                   std::to_string(ptv.size());
        return v;
    }
    int letters = 0;
    for (const auto &e : ptv) letters = std::max(letters, e.letter + 1);
    v.letters.assign(letters, 0);
    auto fail = [&](std::size_t i, std::string why) {
        v.conflict = static_cast<int>(i);
        v.reason = "position " + std::to_string(i + 1) + ": " + why;
        v.letters.clear();
        return v;
    };
    for (std::size_t i = 0; i < ptv.size(); ++i) {
        const auto &e = ptv[i];
        int l = tv[i];
        if (e.k == 0) {
            if (l != kInfinite) return fail(i, "face is infinite");
            continue;
        }
        if (l == kInfinite) return fail(i, "face is finite");
        if (l < 3) return fail(i, "faces have at least 3 sides");
        if (l % e.k) return fail(i, std::to_string(e.k) + " does not divide " + std::to_string(l));
        int val = l / e.k;
        int &slot = v.letters[e.letter];
        if (slot && slot != val) return fail(i, "letter " + letter_name(e.letter) + " already set");
        slot = val;
    }
    v.ok = true;
    return v;
}

Connectivity connectivity_class(const VectorPair &pair)
{
    int n = pair.infinite_count();
    return n == 0 ? Connectivity::ThreeConnected
                  : (n == 1 ? Connectivity::TwoSeparable : Connectivity::OneSeparable);
}

std::string to_string(Connectivity c)
{
    switch (c) {
    case Connectivity::ThreeConnected: return "3-connected";
    case Connectivity::TwoSeparable: return "2-connected-2-separable";
    case Connectivity::OneSeparable: return "1-separable";
    }
    return "";
}

} // namespace vtp
