#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "vtp/enumerator.hpp"
#include "vtp/errors.hpp"

#include <set>

using namespace vtp;

namespace {

std::vector<TypeVector> dihedral_images(const TypeVector &tv)
{
    int d = static_cast<int>(tv.size());
    std::vector<TypeVector> out;
    for (int refl = 0; refl < 2; ++refl)
        for (int r = 0; r < d; ++r) {
            TypeVector img(d);
            for (int q = 0; q < d; ++q) img[q] = refl ? tv[wrap(r - q, d)] : tv[wrap(q + r, d)];
            out.push_back(img);
        }
    return out;
}

bool validated_by_some_family(const TypeVector &tv)
{
    for (const auto &f : oracle::families(static_cast<int>(tv.size())))
        for (const auto &img : dihedral_images(tv))
            if (validate_type_vector(f.ptv, img).ok) return true;
    return false;
}

bool even(int k) { return k == kInfinite || k % 2 == 0; }

// [n,n,n], [n,2m,2m] or [2n,2m,2p] with letters allowed to be infinite.
bool degree3_shape(const TypeVector &tv)
{
    int a = tv[0], b = tv[1], c = tv[2];
    if (a == b && b == c) return true;
    if (even(a) && even(b) && even(c)) return true;
    return (b == c && even(b)) || (a == c && even(a)) || (a == b && even(a));
}

} // namespace

TEST_CASE("degree 2 is the cycle")
{
    auto fams = enumerate_schemes(2);
    REQUIRE(fams.size() == 1);
    CHECK_FALSE(fams[0].aperiodic);
    CHECK(validate_scheme(fams[0].scheme).ok());
}

TEST_CASE("family counts")
{
    // Frozen from an independent exhaustive search over pairs, neighborhoods and inversions.
    struct Row {
        int d, periodic, aperiodic;
    };
    for (auto [d, p, a] : {Row{2, 1, 0}, Row{3, 15, 0}, Row{4, 50, 1}, Row{5, 124, 3}}) {
        auto c = count_families(oracle::families(d));
        CHECK(c.periodic == p);
        CHECK(c.aperiodic == a);
    }
}

TEST_CASE("every family is valid and carries consistent metadata")
{
    for (int d = 2; d <= 5; ++d)
        for (const auto &f : oracle::families(d)) {
            CHECK(validate_scheme(f.scheme).ok());
            Analysis a = analyze(f.scheme);
            CHECK(a.faces.valid);
            CHECK(a.aperiodic == f.aperiodic);
            CHECK(f.connectivity == connectivity_class(f.scheme.pair));
            CHECK(f.key == scheme_key(f.scheme));
            if (f.aperiodic) CHECK(f.scheme.pair.infinite_count() >= 2);
        }
}

TEST_CASE("families are pairwise non-isomorphic")
{
    for (int d = 3; d <= 5; ++d) {
        std::set<SchemeKey> keys;
        for (const auto &f : oracle::families(d)) keys.insert(f.key);
        CHECK(keys.size() == oracle::families(d).size());
    }
}

TEST_CASE("generation order does not change the result")
{
    for (int d = 3; d <= 5; ++d)
        for (std::uint64_t seed : {7u, 1234567u}) {
            EnumerateOptions opt;
            opt.shuffle = seed;
            opt.jobs = 3;
            auto shuffled = enumerate_schemes(d, opt);
            const auto &plain = oracle::families(d);
            REQUIRE(shuffled.size() == plain.size());
            for (std::size_t i = 0; i < plain.size(); ++i) CHECK(shuffled[i].key == plain[i].key);
        }
}

TEST_CASE("degree 3 type vectors")
{
    std::set<std::string> ptvs;
    for (const auto &f : oracle::families(3)) ptvs.insert(format_ptv(f.ptv));
    CHECK(ptvs.count("[n,n,n]"));
    CHECK(ptvs.count("[n,2m,2m]"));
    CHECK(ptvs.count("[2n,2m,2p]"));

    std::vector<int> values{3, 4, 5, 6, 7, 8, 9, 10, 12, kInfinite};
    for (int a : values)
        for (int b : values)
            for (int c : values) {
                TypeVector tv{a, b, c};
                CAPTURE(format_type_vector(tv));
                CHECK(validated_by_some_family(tv) == degree3_shape(tv));
            }
}

TEST_CASE("excluded type vectors have no scheme")
{
    for (int p = 5; p <= 30; ++p) CHECK_FALSE(validated_by_some_family({3, 3, p}));
    for (int p = 6; p <= 30; ++p) CHECK_FALSE(validated_by_some_family({3, 4, p}));
    for (int p = 9; p <= 30; ++p) CHECK_FALSE(validated_by_some_family({3, 5, p}));
    CHECK(validated_by_some_family({3, 4, 4}));
    CHECK(validated_by_some_family({3, 6, 6}));
}

TEST_CASE("pairs")
{
    auto p3 = enumerate_pairs(3);
    CHECK(std::count(p3.begin(), p3.end(), VectorPair{{0, 0, 0}, {0, 0, 0}}) == 1);
    std::set<std::vector<int>> edge_vectors;
    for (const auto &p : p3) edge_vectors.insert(p.xi);
    CHECK(edge_vectors.size() <= 9);
    for (int d = 2; d <= 5; ++d)
        for (const auto &p : enumerate_pairs(d)) {
            CHECK(normal_form(p) == p);
            for (int c : std::set<int>(p.xi.begin(), p.xi.end())) CHECK(eq_count(p, c).count <= 2);
        }
}

TEST_CASE("neighborhood candidates")
{
    LabelingScheme s5 = oracle::example5();
    auto greens = enumerate_neighborhoods(s5.pair, 2);
    CHECK(std::count(greens.begin(), greens.end(), canonical_neighborhood(s5.neighborhoods[2])) == 1);

    // Green occurs once in the three-connected example: both ends sit on edge 4.
    VectorPair p4 = oracle::example4().pair;
    for (const auto &nb : enumerate_neighborhoods(p4, 2)) {
        CHECK(match_extremity(p4, nb.first).first == 3);
        CHECK(match_extremity(p4, nb.second).first == 3);
    }

    for (int d = 2; d <= 6; ++d)
        for (const auto &p : enumerate_pairs(d))
            for (int c : std::set<int>(p.xi.begin(), p.xi.end())) {
                auto nbs = enumerate_neighborhoods(p, c);
                CHECK(static_cast<int>(nbs.size()) <= 2 * d);
                for (const auto &nb : nbs) {
                    CHECK(coherent(nb, p));
                    CHECK(locked(nb));
                }
            }
}

TEST_CASE("degree limits")
{
    CHECK_THROWS_AS(enumerate_schemes(1), UserError);
    CHECK_THROWS_AS(enumerate_schemes(kMaxDegree + 1), UserError);
    CHECK_THROWS_AS(enumerate_schemes(6), UserError);
}
