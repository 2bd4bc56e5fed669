#include "vtp/catalog.hpp"

#include "vtp/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace vtp {

using nlohmann::json;
using nlohmann::ordered_json;

bool CatalogRecord::operator==(const CatalogRecord &o) const
{
    return id == o.id && scheme == o.scheme && ptv == o.ptv && aperiodic == o.aperiodic &&
           connectivity == o.connectivity && stabilizer.rotation_order == o.stabilizer.rotation_order &&
           stabilizer.has_reflection == o.stabilizer.has_reflection && stabilizer.kind == o.stabilizer.kind &&
           edge_classes == o.edge_classes && borders == o.borders;
}

std::string family_id(const SchemeKey &key)
{
    std::string text = format_colors(key.pair.xi, false) + "/" + format_colors(key.pair.phi, true) + "/";
    for (int x : key.inv) text += std::to_string(x) + ",";
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof buf, "d%d-%012llx", key.pair.degree(),
                  static_cast<unsigned long long>(h & 0xffffffffffffull));
    return buf;
}

CatalogRecord make_record(const SchemeFamily &f)
{
    CatalogRecord r;
    r.id = family_id(f.key);
    r.scheme = f.scheme;
    r.ptv = format_ptv(f.ptv);
    r.aperiodic = f.aperiodic;
    r.connectivity = to_string(f.connectivity);
    r.stabilizer = stabilizer(f.scheme);

    const VectorPair &p = f.scheme.pair;
    // one edge class per edge color, numbered by color
    std::set<int> colors(p.xi.begin(), p.xi.end());
    for (int c : colors) {
        const auto *nb = f.scheme.neighborhood_for(c);
        int flip = 0;
        if (nb) {
            int o1 = match_extremity(p, nb->first).second, o2 = match_extremity(p, nb->second).second;
            flip = o1 * o2 < 0;
        }
        r.edge_classes.push_back("a" + std::to_string(c + 1) + "^" + std::to_string(flip));
    }
    auto an = analyze(f.scheme);
    const auto &fc = an.automaton.classes;
    auto name = [&](int state) { return "a" + std::to_string(p.xi[fc.rep_pos[state]] + 1); };
    auto words = [&](const std::vector<int> &states) {
        std::string s;
        for (std::size_t i = 0; i < states.size(); ++i) s += (i ? " " : "") + name(states[i]);
        return s;
    };
    for (const auto &o : an.orbits) {
        if (!o.infinite) {
            int letter = f.ptv[o.faces.front()].letter;
            r.borders.push_back("(" + words(o.crossed) + ")^" + letter_name(letter));
            continue;
        }
        auto by_color = [](const std::vector<int> &w) {
            std::string s;
            for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + ("a" + std::to_string(w[i] + 1));
            return s;
        };
        std::string s = "(" + by_color(o.omega.head) + ")^w";
        if (!o.omega.periodic()) {
            if (!o.omega.defect.empty()) s += " " + by_color(o.omega.defect);
            s += " (" + by_color(o.omega.tail) + ")^w";
        }
        r.borders.push_back(s);
    }
    return r;
}

Catalog make_catalog(int degree, const std::vector<SchemeFamily> &fams, bool include_aperiodic)
{
    Catalog c;
    c.degree = degree;
    auto counts = count_families(fams);
    c.periodic = counts.periodic;
    c.aperiodic = counts.aperiodic;
    for (const auto &f : fams)
        if (include_aperiodic || !f.aperiodic) c.records.push_back(make_record(f));
    return c;
}

ordered_json pair_to_json(const VectorPair &p)
{
    ordered_json j;
    j["xi"] = format_colors(p.xi, false);
    j["phi"] = format_colors(p.phi, true);
    return j;
}

VectorPair pair_from_json(const json &j)
{
    VectorPair p{parse_colors(j.at("xi").get<std::string>(), false),
                 parse_colors(j.at("phi").get<std::string>(), true)};
    if (p.xi.size() != p.phi.size()) throw UserError("edge and face vectors differ in length");
    return p;
}

ordered_json scheme_to_json(const LabelingScheme &s)
{
    ordered_json j = pair_to_json(s.pair);
    j["neighborhoods"] = ordered_json::array();
    for (const auto &nb : s.neighborhoods) {
        ordered_json n;
        n["color"] = edge_color_name(nb.color);
        n["first"] = pair_to_json(nb.first);
        n["second"] = pair_to_json(nb.second);
        j["neighborhoods"].push_back(n);
    }
    return j;
}

LabelingScheme scheme_from_json(const json &j)
{
    try {
        LabelingScheme s;
        s.pair = pair_from_json(j);
        for (const auto &n : j.at("neighborhoods")) {
            auto c = parse_colors(n.at("color").get<std::string>(), false);
            if (c.size() != 1) throw UserError("neighborhood color must be a single edge color");
            s.neighborhoods.push_back({c[0], pair_from_json(n.at("first")), pair_from_json(n.at("second"))});
        }
        std::stable_sort(s.neighborhoods.begin(), s.neighborhoods.end(),
                         [](const auto &a, const auto &b) { return a.color < b.color; });
        return s;
    } catch (const json::exception &e) {
        throw UserError(std::string("malformed scheme: ") + e.what());
    }
}

ordered_json record_to_json(const CatalogRecord &r)
{
    ordered_json j;
    j["id"] = r.id;
    j["degree"] = r.degree();
    j["scheme"] = scheme_to_json(r.scheme);
    j["ptv"] = r.ptv;
    j["periodicity"] = r.aperiodic ? "A" : "P";
    j["connectivity"] = r.connectivity;
    j["stabilizer"] = {{"kind", to_string(r.stabilizer.kind)},
                       {"rotation_order", r.stabilizer.rotation_order},
                       {"reflection", r.stabilizer.has_reflection}};
    j["edge_classes"] = r.edge_classes;
    j["borders"] = r.borders;
    return j;
}

CatalogRecord record_from_json(const json &j)
{
    try {
        CatalogRecord r;
        r.id = j.at("id").get<std::string>();
        r.scheme = scheme_from_json(j.at("scheme"));
        r.ptv = j.at("ptv").get<std::string>();
        r.aperiodic = j.at("periodicity").get<std::string>() == "A";
        r.connectivity = j.at("connectivity").get<std::string>();
        const auto &st = j.at("stabilizer");
        r.stabilizer.rotation_order = st.at("rotation_order").get<int>();
        r.stabilizer.has_reflection = st.at("reflection").get<bool>();
        std::string kind = st.at("kind").get<std::string>();
        r.stabilizer.kind = kind == "dihedral" ? Stabilizer::Kind::Dihedral
                                               : (kind == "cyclic" ? Stabilizer::Kind::Cyclic : Stabilizer::Kind::Trivial);
        r.edge_classes = j.at("edge_classes").get<std::vector<std::string>>();
        r.borders = j.at("borders").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception &e) {
        throw UserError(std::string("malformed catalog record: ") + e.what());
    }
}

std::string serialize(const Catalog &c)
{
    ordered_json j;
    j["format"] = "vtp-catalog";
    j["version"] = kCatalogVersion;
    j["degree"] = c.degree;
    j["periodic"] = c.periodic;
    j["aperiodic"] = c.aperiodic;
    j["families"] = ordered_json::array();
    for (const auto &r : c.records) j["families"].push_back(record_to_json(r));
    return j.dump(1) + "\n";
}

Catalog parse_catalog(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw UserError(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (j.value("format", "") != "vtp-catalog") throw UserError("not a catalog file");
    if (j.value("version", 0) != kCatalogVersion) throw UserError("unsupported catalog version");
    Catalog c;
    c.degree = j.at("degree").get<int>();
    c.periodic = j.at("periodic").get<int>();
    c.aperiodic = j.at("aperiodic").get<int>();
    for (const auto &r : j.at("families")) c.records.push_back(record_from_json(r));
    return c;
}

std::string load_text(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UserError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UserError("cannot write " + path);
    out << text;
}

Catalog load_catalog(const std::string &path) { return parse_catalog(load_text(path)); }

LabelingScheme load_scheme(const std::string &path)
{
    json j;
    try {
        j = json::parse(load_text(path));
    } catch (const json::exception &e) {
        throw UserError(path + " is not valid JSON: " + e.what());
    }
    if (j.contains("scheme")) return scheme_from_json(j.at("scheme"));
    return scheme_from_json(j);
}

const CatalogRecord *find_record(const Catalog &c, const std::string &id)
{
    for (const auto &r : c.records)
        if (r.id == id) return &r;
    return nullptr;
}

ordered_json ball_to_json(const GraphBall &b)
{
    ordered_json j;
    j["degree"] = b.degree();
    j["pair"] = pair_to_json(b.pair);
    j["type_vector"] = format_type_vector(b.tv);
    j["geometry"] = to_string(b.geometry);
    if (b.has_coords) j["edge_length"] = b.length;
    j["radius"] = b.radius;
    j["closed"] = b.closed;
    j["vertex_count"] = b.vertices.size();
    j["edge_count"] = b.edge_count();
    j["face_count"] = b.closed_faces().size();
    auto dist = b.distances();
    j["vertices"] = ordered_json::array();
    for (std::size_t v = 0; v < b.vertices.size(); ++v) {
        const auto &x = b.vertices[v];
        ordered_json o;
        o["id"] = v;
        o["distance"] = dist[v];
        ordered_json edges = ordered_json::array();
        for (int q = 0; q < b.degree(); ++q)
            edges.push_back({{"to", x.nbr[q]},
                             {"color", edge_color_name(b.edge_label(static_cast<int>(v), q))},
                             {"face", face_color_name(b.face_label(static_cast<int>(v), q))}});
        o["rotation"] = edges;
        if (b.has_coords) {
            if (b.geometry == Geometry::Spherical)
                o["point"] = {x.point.sphere.x(), x.point.sphere.y(), x.point.sphere.z()};
            else
                o["point"] = {x.point.plane.x(), x.point.plane.y()};
        }
        j["vertices"].push_back(o);
    }
    return j;
}

} // namespace vtp
