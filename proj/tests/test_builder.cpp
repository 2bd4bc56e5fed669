#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vtp/builder.hpp"
#include "vtp/errors.hpp"

using namespace vtp;

namespace {

GraphBall build_for(const TypeVector &tv, int r, bool coords = false)
{
    auto [fam, img] = oracle::family_for(tv);
    REQUIRE(fam != nullptr);
    BuildOptions opt;
    opt.coords = coords;
    return build_ball(fam->scheme, img, r, opt);
}

int face_count(const GraphBall &b) { return static_cast<int>(b.closed_faces().size()); }

} // namespace

TEST_CASE("platonic closures")
{
    GraphBall dodeca = build_for({5, 5, 5}, 1, true);
    CHECK(dodeca.closed);
    CHECK(dodeca.vertices.size() == 20);
    CHECK(dodeca.edge_count() == 30);
    CHECK(face_count(dodeca) == 12);
    CHECK(verify(dodeca).empty());
    for (const auto &v : dodeca.vertices) CHECK(v.point.sphere.norm() == doctest::Approx(1.0));

    GraphBall tetra = build_for({3, 3, 3}, 1, true);
    CHECK(tetra.closed);
    CHECK(tetra.vertices.size() == 4);
    CHECK(tetra.edge_count() == 6);
    CHECK(face_count(tetra) == 4);
}

TEST_CASE("spherical closures match Euler counts")
{
    for (int d = 3; d <= 5; ++d)
        for (const auto &f : oracle::families(d)) {
            if (f.scheme.pair.infinite_count() > 0) continue;
            TypeVector tv = oracle::pick_tv(f.ptv, 3);
            if (classify_geometry(tv) != Geometry::Spherical || excluded_type_vector(tv)) continue;
            GraphBall b = build_ball(f.scheme, tv, 1);
            CAPTURE(format_type_vector(tv));
            auto want = oracle::spherical_counts(tv);
            CHECK(b.closed);
            CHECK(static_cast<int>(b.vertices.size()) == want.v);
            CHECK(b.edge_count() == want.e);
            CHECK(face_count(b) == want.f);
            CHECK(static_cast<int>(b.vertices.size()) - b.edge_count() + face_count(b) == 2);
            CHECK(verify(b).empty());
        }
}

TEST_CASE("square grid balls")
{
    int schemes = 0;
    for (const auto &f : oracle::families(4)) {
        if (!validate_type_vector(f.ptv, {4, 4, 4, 4}).ok) continue;
        ++schemes;
        for (int r = 1; r <= 4; ++r) {
            GraphBall b = build_ball(f.scheme, {4, 4, 4, 4}, r);
            CHECK(static_cast<int>(b.vertices.size()) == oracle::grid_ball(r));
            CHECK(verify(b).empty());
        }
    }
    CHECK(schemes > 0);
    GraphBall b = build_for({4, 4, 4, 4}, 2);
    CHECK(b.vertices.size() == 13);
}

TEST_CASE("three-connected worked scheme builds with its faces around the root")
{
    GraphBall b = build_ball(oracle::example4(), {3, 4, 3, 3, 5}, 2, {.coords = true});
    CHECK(verify(b).empty());
    std::vector<int> sizes;
    for (int q = 0; q < 5; ++q) sizes.push_back(b.face_size(0, q));
    CHECK(sizes == std::vector<int>{3, 4, 3, 3, 5});
    CHECK(max_edge_length_error(b) < 1e-9);
    CHECK(max_angle_error(b) < 1e-9);
}

TEST_CASE("one-separable worked scheme builds")
{
    GraphBall b = build_ball(oracle::example5(), {kInfinite, 3, 4, kInfinite, 3}, 3, {.coords = true});
    CHECK(verify(b).empty());
    CHECK_FALSE(b.closed);
    CHECK(max_edge_length_error(b) < 1e-9);
    CHECK(b.face_size(0, 0) == kInfinite);
}

TEST_CASE("round trip and unique gluing over every family of degree 3 and 4")
{
    for (int d = 3; d <= 4; ++d)
        for (const auto &f : oracle::families(d)) {
            TypeVector tv = oracle::pick_tv(f.ptv, 7);
            GraphBall b = build_ball(f.scheme, tv, 3);
            CAPTURE(format_ptv(f.ptv));
            CHECK(verify(b).empty());
            CHECK(b.max_gluing_options == 1);
            CHECK(isomorphic(recover_scheme(b), f.scheme));
        }
}

TEST_CASE("round trip on a degree 5 sample with coordinates")
{
    const auto &fams = oracle::families(5);
    for (std::size_t i = 0; i < fams.size(); i += 6) {
        const auto &f = fams[i];
        TypeVector tv = oracle::pick_tv(f.ptv, 7);
        GraphBall b = build_ball(f.scheme, tv, 2, {.coords = true});
        CAPTURE(format_ptv(f.ptv));
        CHECK(verify(b).empty());
        CHECK(b.max_gluing_options == 1);
        CHECK(isomorphic(recover_scheme(b), f.scheme));
        CHECK(max_edge_length_error(b) < 1e-9);
        CHECK(max_angle_error(b) < 1e-9);
    }
}

TEST_CASE("faces close at their declared size")
{
    GraphBall b = build_ball(oracle::example4(), {6, 4, 6, 6, 5}, 3);
    for (const auto &face : b.closed_faces()) {
        const Corner &c = face.front();
        CHECK(static_cast<int>(face.size()) == b.face_size(c.v, c.q));
    }
}

TEST_CASE("gluing preconditions")
{
    GraphBall b = start_ball(oracle::example4(), {3, 4, 3, 3, 5}, false);
    CHECK(b.vertices.size() == 1);
    int w = glue(b, 0, 0);
    CHECK(w == 1);
    CHECK_THROWS_WITH_AS(glue(b, 0, 0), "slot is already glued", UserError);
    CHECK_THROWS_AS(glue(b, 9, 0), UserError);

    GraphBall full = build_for({5, 5, 5}, 1);
    CHECK_THROWS_AS(glue(full, 0, 1), UserError);
}

TEST_CASE("recovering needs radius 2")
{
    GraphBall b = build_ball(oracle::example4(), {3, 4, 3, 3, 5}, 1);
    CHECK_THROWS_AS(recover_scheme(b), UserError);
    CHECK_THROWS_AS(build_ball(oracle::example4(), {3, 4, 3, 3, 5}, 0), UserError);
    CHECK_THROWS_AS(build_ball(oracle::example4(), {4, 4, 3, 3, 5}, 2), UserError);
}

TEST_CASE("growth")
{
    auto grid = oracle::family_for({4, 4, 4, 4});
    CHECK(growth_class(grid.first->scheme, grid.second) == Growth::Quadratic);
    auto hept = oracle::family_for({7, 7, 7});
    CHECK(growth_class(hept.first->scheme, hept.second) == Growth::Exponential);
    CHECK(growth_class(oracle::example5(), {kInfinite, 3, 4, kInfinite, 3}) == Growth::Exponential);
    auto ladder = oracle::family_for({kInfinite, 4, 4});
    REQUIRE(ladder.first != nullptr);
    CHECK(growth_class(ladder.first->scheme, ladder.second) == Growth::Linear);
    auto dodeca = oracle::family_for({5, 5, 5});
    CHECK_THROWS_WITH_AS(growth_class(dodeca.first->scheme, dodeca.second), "finite graph", UserError);
}

TEST_CASE("edge points follow the geometry")
{
    GraphBall b = build_for({7, 7, 7}, 2, true);
    for (int q = 0; q < 3; ++q) {
        int w = b.vertices[0].nbr[q];
        Point end = edge_point(b, 0, q, b.length);
        CHECK(distance(end, b.vertices[w].point, b.geometry) < 1e-9);
    }
}
