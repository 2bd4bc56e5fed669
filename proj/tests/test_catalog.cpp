#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vtp/catalog.hpp"
#include "vtp/errors.hpp"
#include "vtp/svg.hpp"

#include <filesystem>
#include <regex>

using namespace vtp;

#ifndef VTP_DATA_DIR
#define VTP_DATA_DIR "data"
#endif

TEST_CASE("catalogs survive a round trip byte for byte")
{
    for (int d = 2; d <= 5; ++d) {
        Catalog c = make_catalog(d, oracle::families(d), true);
        std::string text = serialize(c);
        Catalog back = parse_catalog(text);
        CHECK(back.degree == d);
        CHECK(back.periodic == c.periodic);
        CHECK(back.aperiodic == c.aperiodic);
        REQUIRE(back.records.size() == c.records.size());
        for (std::size_t i = 0; i < c.records.size(); ++i) CHECK(back.records[i] == c.records[i]);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("summary counts follow the families")
{
    for (int d = 3; d <= 5; ++d) {
        auto counts = count_families(oracle::families(d));
        Catalog all = make_catalog(d, oracle::families(d), true);
        Catalog periodic_only = make_catalog(d, oracle::families(d), false);
        CHECK(all.periodic == counts.periodic);
        CHECK(all.aperiodic == counts.aperiodic);
        CHECK(static_cast<int>(all.records.size()) == counts.periodic + counts.aperiodic);
        CHECK(static_cast<int>(periodic_only.records.size()) == counts.periodic);
    }
}

TEST_CASE("family ids are stable")
{
    std::regex shape("d[0-9]-[0-9a-f]{12}");
    std::set<std::string> ids;
    for (const auto &f : oracle::families(4)) {
        std::string id = family_id(f.key);
        CHECK(std::regex_match(id, shape));
        CHECK(id == make_record(f).id);
        ids.insert(id);
    }
    CHECK(ids.size() == oracle::families(4).size());

    // Enumerating again in another order gives the same ids.
    EnumerateOptions opt;
    opt.shuffle = 99;
    auto again = enumerate_schemes(4, opt);
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(family_id(again[i].key) == family_id(oracle::families(4)[i].key));
}

TEST_CASE("records describe edge classes and borders")
{
    CatalogRecord r = make_record(make_family(oracle::example4()));
    CHECK(r.ptv == "[3n,m,3n,3n,p]");
    CHECK(r.connectivity == "3-connected");
    CHECK(r.edge_classes.size() == 3);
    CHECK(r.borders.size() == 3);
    CHECK_FALSE(r.aperiodic);

    CatalogRecord a = make_record(make_family(oracle::example5()));
    CHECK(a.aperiodic);
    bool omega = false;
    for (const auto &b : a.borders) omega = omega || b.find("^w") != std::string::npos;
    CHECK(omega);
}

TEST_CASE("scheme files")
{
    LabelingScheme ex4 = load_scheme(std::string(VTP_DATA_DIR) + "/trivial_stabilizer_d5.json");
    CHECK(isomorphic(ex4, oracle::example4()));
    LabelingScheme ex5 = load_scheme(std::string(VTP_DATA_DIR) + "/aperiodic_border_d5.json");
    CHECK(isomorphic(ex5, oracle::example5()));
    CHECK(scheme_from_json(scheme_to_json(ex5)) == ex5);
    CHECK(pair_from_json(pair_to_json(ex4.pair)) == ex4.pair);
    CHECK_THROWS_AS(load_scheme(std::string(VTP_DATA_DIR) + "/missing.json"), UserError);
    CHECK_THROWS_AS(scheme_from_json(nlohmann::json::parse(R"({"xi":"a1,a1","phi":"f1"})")), UserError);

    Catalog c = make_catalog(5, oracle::families(5), true);
    CHECK(find_record(c, family_id(make_family(ex4).key)) != nullptr);
    CHECK(find_record(c, "d5-000000000000") == nullptr);
}

TEST_CASE("ball files")
{
    GraphBall b = build_ball(oracle::example4(), {3, 4, 3, 3, 5}, 2, {.coords = true});
    auto j = ball_to_json(b);
    CHECK(j["vertices"].size() == b.vertices.size());
    CHECK(j["geometry"] == "hyperbolic");
}

TEST_CASE("svg output is deterministic")
{
    GraphBall hyp = build_ball(oracle::example4(), {3, 4, 3, 3, 5}, 2, {.coords = true});
    std::string a = render_svg(hyp), b = render_svg(hyp);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("<circle") != std::string::npos);
    // Rebuilding from scratch draws the same picture.
    CHECK(render_svg(build_ball(oracle::example4(), {3, 4, 3, 3, 5}, 2, {.coords = true})) == a);

    std::regex number("[0-9]+\\.[0-9]+");
    for (auto it = std::sregex_iterator(a.begin(), a.end(), number); it != std::sregex_iterator(); ++it)
        CHECK(it->str().size() - it->str().find('.') - 1 == 6);

    auto grid = oracle::family_for({4, 4, 4, 4});
    std::string flat = render_svg(build_ball(grid.first->scheme, grid.second, 3, {.coords = true}));
    CHECK(flat.find("<circle") == std::string::npos);
    CHECK_THROWS_AS(render_svg(build_ball(grid.first->scheme, grid.second, 2)), UserError);
}
