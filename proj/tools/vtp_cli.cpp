#include "vtp/catalog.hpp"
#include "vtp/errors.hpp"
#include "vtp/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <thread>

using namespace vtp;

namespace {

struct SchemeArgs {
    std::string scheme;
    std::string catalog = "catalog.json";
};

void add_scheme_options(CLI::App *cmd, SchemeArgs &a)
{
    cmd->add_option("--scheme", a.scheme, "family id from the catalog, or a scheme file")->required();
    cmd->add_option("--catalog", a.catalog, "catalog used to resolve family ids");
}

LabelingScheme resolve(const SchemeArgs &a)
{
    if (std::filesystem::exists(a.scheme)) return load_scheme(a.scheme);
    if (!std::filesystem::exists(a.catalog))
        throw UserError("'" + a.scheme + "' is not a file and catalog " + a.catalog + " does not exist");
    Catalog c = load_catalog(a.catalog);
    const CatalogRecord *r = find_record(c, a.scheme);
    if (!r) throw UserError("unknown family id '" + a.scheme + "'");
    return r->scheme;
}

void write_or_print(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        save_text(path, text);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Planar vertex-transitive graphs from labeling schemes"};
    app.require_subcommand(1);

    int degree = 3, jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool include_aperiodic = false, allow_long = false;
    std::string out;
    auto *en = app.add_subcommand("enumerate", "enumerate every scheme of a degree");
    en->add_option("--degree", degree, "vertex degree")->required();
    en->add_flag("--include-aperiodic", include_aperiodic, "also write aperiodic families");
    en->add_option("--jobs", jobs, "worker threads");
    en->add_flag("--allow-long", allow_long, "permit degree 6");
    en->add_option("--out", out, "catalog file to write");

    SchemeArgs sa;
    std::string tv_text;
    int radius = 2;
    bool coords = false;
    auto *bu = app.add_subcommand("build", "build a ball of the graph");
    add_scheme_options(bu, sa);
    bu->add_option("--type-vector", tv_text, "face sizes, e.g. 3,4,3,3,5")->required();
    bu->add_option("--radius", radius, "ball radius");
    bu->add_flag("--coords", coords, "attach coordinates");
    bu->add_option("--out", out, "ball file to write");

    auto *re = app.add_subcommand("render", "draw a ball as SVG");
    add_scheme_options(re, sa);
    re->add_option("--type-vector", tv_text, "face sizes")->required();
    re->add_option("--radius", radius, "ball radius");
    re->add_option("--out", out, "SVG file to write");

    int search_radius = 3;
    auto *cc = app.add_subcommand("check-cayley", "decide whether the graph is a Cayley graph");
    add_scheme_options(cc, sa);
    cc->add_option("--type-vector", tv_text, "face sizes")->required();
    cc->add_option("--radius", search_radius, "ball radius compared against other schemes");

    bool dump = false;
    auto *in = app.add_subcommand("info", "describe a scheme");
    add_scheme_options(in, sa);
    in->add_option("--type-vector", tv_text, "face sizes");
    in->add_flag("--dump-automaton", dump, "print the border automaton");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*en) {
            EnumerateOptions opt;
            opt.jobs = jobs;
            opt.allow_long = allow_long;
            auto fams = enumerate_schemes(degree, opt);
            Catalog c = make_catalog(degree, fams, include_aperiodic);
            if (!out.empty()) save_text(out, serialize(c));
            std::cout << "degree " << degree << ": P=" << c.periodic << " A=" << c.aperiodic << "\n";
        } else if (*bu) {
            auto s = resolve(sa);
            BuildOptions opt;
            opt.coords = coords;
            GraphBall b = build_ball(s, parse_type_vector(tv_text), radius, opt);
            write_or_print(out, ball_to_json(b).dump(1) + "\n");
            if (!out.empty())
                std::cout << "vertices=" << b.vertices.size() << " edges=" << b.edge_count()
                          << " faces=" << b.closed_faces().size() << (b.closed ? " closed" : "") << "\n";
        } else if (*re) {
            auto s = resolve(sa);
            BuildOptions opt;
            opt.coords = true;
            GraphBall b = build_ball(s, parse_type_vector(tv_text), radius, opt);
            write_or_print(out, render_svg(b));
        } else if (*cc) {
            auto s = resolve(sa);
            auto tv = parse_type_vector(tv_text);
            auto rep = is_cayley(s, tv, search_radius);
            std::cout << "verdict: " << to_string(rep.verdict) << "\n";
            std::cout << "reason: " << rep.certificate << "\n";
            if (rep.witness)
                std::cout << "witness: " << scheme_to_json(*rep.witness).dump() << " type vector "
                          << format_type_vector(rep.witness_tv) << "\n";
            std::cout << "schemes sharing the ball: " << rep.same_ball.size() << "\n";
        } else if (*in) {
            auto s = resolve(sa);
            auto fam = make_family(s);
            auto st = stabilizer(s);
            std::cout << "id: " << family_id(fam.key) << "\n"
                      << "degree: " << s.degree() << "\n"
                      << "pair: " << format_colors(s.pair.xi, false) << " / " << format_colors(s.pair.phi, true)
                      << "\n"
                      << "ptv: " << format_ptv(fam.ptv) << "\n"
                      << "periodicity: " << (fam.aperiodic ? "A" : "P") << "\n"
                      << "connectivity: " << to_string(fam.connectivity) << "\n"
                      << "stabilizer: " << to_string(st.kind) << " (rotations " << st.rotation_order
                      << (st.has_reflection ? ", reflection" : "") << ")\n";
            auto rec = make_record(fam);
            for (const auto &b : rec.borders) std::cout << "border: " << b << "\n";
            if (!tv_text.empty()) {
                auto tv = parse_type_vector(tv_text);
                auto val = validate_type_vector(fam.ptv, tv);
                if (!val.ok) throw UserError("type vector rejected: " + val.reason);
                Geometry g = classify_geometry(tv);
                std::cout << "geometry: " << to_string(g) << "\n";
                std::cout << "edge length: " << solve_edge_length(tv).length << "\n";
                std::cout << "growth: " << (g == Geometry::Spherical ? "finite" : to_string(growth_class(s, tv)))
                          << "\n";
                std::cout << "cayley: " << to_string(is_cayley(s, tv).verdict) << "\n";
            }
            if (dump) std::cout << build_automaton(s).dump();
        }
    } catch (const UserError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
