#include <rhcalc/simplicial.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace rhcalc;
using namespace fixtures;

namespace {

std::vector<std::uint64_t> b(std::initializer_list<std::uint64_t> l) { return l; }

}  // namespace

TEST_CASE("build_complex closes under faces", "[simplicial]") {
    const auto tri = build_complex(hollow_triangle());
    CHECK(tri.count(0) == 3);
    CHECK(tri.count(1) == 3);
    CHECK(tri.dimension() == 1);

    const auto s2 = build_complex(simplex_boundary(4));
    CHECK(s2.count(0) == 4);
    CHECK(s2.count(1) == 6);
    CHECK(s2.count(2) == 4);

    const auto t = build_complex(torus7());
    CHECK(t.count(0) == 7);
    CHECK(t.count(1) == 21);
    CHECK(t.count(2) == 14);
}

TEST_CASE("build_complex rejects bad facets", "[simplicial]") {
    CHECK_THROWS_AS(build_complex({}), InputError);
    CHECK_THROWS_AS(build_complex({{"a", "b"}, {}}), InputError);
    CHECK_THROWS_AS(build_complex({{"a", "a"}}), InputError);
    CHECK_THROWS_AS(build_complex({{""}}), InputError);
}

TEST_CASE("vertex labels sort lexicographically", "[simplicial]") {
    const auto k = build_complex({{"b", "a10", "a9"}});
    CHECK(k.vertices() == std::vector<std::string>{"a10", "a9", "b"});
}

TEST_CASE("cochain complex examples", "[simplicial]") {
    const auto tri = cochain_complex(build_complex(hollow_triangle()));
    REQUIRE(tri.coboundaries.size() == 2);
    CHECK(tri.coboundary(0).rows() == 3);
    CHECK(tri.coboundary(0).cols() == 3);
    CHECK(rank(tri.coboundary(0)) == 2);
    CHECK(tri.coboundary(1).rows() == 0);
    CHECK(tri.coboundary(1).cols() == 3);

    const auto pt = cochain_complex(build_complex(point()));
    CHECK(pt.dims == std::vector<std::size_t>{1});
    CHECK(pt.coboundary(0).empty());

    const auto s2 = cochain_complex(build_complex(simplex_boundary(4)));
    CHECK(s2.coboundary(0).rows() == 6);
    CHECK(s2.coboundary(0).cols() == 4);
    CHECK(rank(s2.coboundary(0)) == 3);
    CHECK(s2.coboundary(1).rows() == 4);
    CHECK(s2.coboundary(1).cols() == 6);
    CHECK(rank(s2.coboundary(1)) == 3);
}

TEST_CASE("betti examples against the brute-force oracle", "[simplicial]") {
    CHECK(betti_numbers(build_complex(simplex_boundary(4))) == b({1, 0, 1}));
    CHECK(betti_numbers(build_complex(torus7())) == b({1, 2, 1}));
    CHECK(betti_numbers(build_complex(rp2_6())) == b({1, 0, 0}));
    for (const auto& entry : corpus()) {
        INFO(entry.name);
        const auto ours = betti_numbers(build_complex(entry.facets));
        const auto theirs = oracle::brute_force_betti(entry.facets);
        CHECK(std::vector<std::uint64_t>(theirs.begin(), theirs.end()) == ours);
    }
}

TEST_CASE("corpus invariants: coboundary squares to zero, Euler characteristic", "[simplicial][property]") {
    for (const auto& entry : corpus()) {
        INFO(entry.name);
        const auto k = build_complex(entry.facets);
        const auto c = cochain_complex(k);
        for (std::size_t d = 0; d + 1 < c.coboundaries.size(); ++d)
            CHECK((c.coboundaries[d + 1] * c.coboundaries[d]).nonzero_count() == 0);
        long chi_cells = 0, chi_betti = 0;
        const auto bn = betti_numbers(k);
        for (std::size_t d = 0; d < c.dims.size(); ++d) {
            const long sign = d % 2 == 0 ? 1 : -1;
            chi_cells += sign * static_cast<long>(c.dims[d]);
            chi_betti += sign * static_cast<long>(bn[d]);
        }
        CHECK(chi_cells == chi_betti);
    }
}

TEST_CASE("betti of disjoint unions and cones", "[simplicial][property]") {
    const auto entries = corpus();
    for (const auto& a : entries) {
        CHECK(betti(build_complex(cone(a.facets))) == betti(build_complex(point())));
        for (const auto& c : entries) {
            INFO(a.name << " + " << c.name);
            const auto u = betti(build_complex(disjoint_union(a.facets, c.facets)));
            GradedDims sum = betti(build_complex(a.facets));
            const auto other = betti(build_complex(c.facets));
            for (const auto& [d, v] : other.entries()) sum.add(d, v);
            CHECK(u == sum);
        }
    }
}

TEST_CASE("cohomology representatives", "[simplicial]") {
    const auto tri = build_complex(hollow_triangle());
    const auto reps = cohomology_representatives(tri, 1);
    REQUIRE(reps.cols() == 1);
    CHECK(reps.nonzero_count() == 1);  // supported on a single edge

    const auto pt = cohomology_representatives(build_complex(point()), 0);
    CHECK(pt == RationalMatrix::from_rows({{1}}));

    CHECK(cohomology_representatives(build_complex(simplex_boundary(4)), 1).cols() == 0);

    for (const auto& entry : corpus()) {
        const auto k = build_complex(entry.facets);
        const auto c = cochain_complex(k);
        const auto bn = betti_numbers(k);
        for (int d = 0; d <= k.dimension(); ++d) {
            INFO(entry.name << " degree " << d);
            const auto r = cohomology_representatives(k, d);
            CHECK(r.cols() == bn[static_cast<std::size_t>(d)]);
            CHECK((c.coboundary(d) * r).nonzero_count() == 0);
            // Independent modulo coboundaries.
            const auto incoming = d == 0 ? RationalMatrix(k.count(0), 0) : c.coboundary(d - 1);
            CHECK(rank(incoming.hstack(r)) == rank(incoming) + r.cols());
        }
    }
}

TEST_CASE("simplicial map validation", "[simplicial]") {
    const auto tri = make(hollow_triangle());
    const auto pt = make(point());
    CHECK_THROWS_AS(SimplicialMap(tri, tri, {{"a", "a"}, {"b", "b"}}), InputError);
    CHECK_THROWS_AS(SimplicialMap(tri, tri, {{"a", "a"}, {"b", "b"}, {"c", "zzz"}}), InputError);
    const auto edge = make({{"x", "y"}});
    const auto two_points = make({{"p"}, {"q"}});
    CHECK_THROWS_AS(SimplicialMap(edge, two_points, {{"x", "p"}, {"y", "q"}}), InputError);
    CHECK_NOTHROW(SimplicialMap(tri, pt, {{"a", "a"}, {"b", "a"}, {"c", "a"}}));
}

TEST_CASE("induced cohomology map examples", "[simplicial]") {
    const auto tri = make(hollow_triangle());
    const SimplicialMap id(tri, tri, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    CHECK(induced_cohomology_map(id, 1) == RationalMatrix::identity(1));
    CHECK(induced_cohomology_map(id, 0) == RationalMatrix::identity(1));

    const auto pt = make(point());
    const SimplicialMap collapse(tri, pt, {{"a", "a"}, {"b", "a"}, {"c", "a"}});
    CHECK(induced_cohomology_map(collapse, 0) == RationalMatrix::identity(1));
    const auto m1 = induced_cohomology_map(collapse, 1);
    CHECK(m1.rows() == 1);
    CHECK(m1.cols() == 0);

    for (int p : {1, 2, 3, 5}) {
        INFO("p = " << p);
        const auto m = induced_cohomology_map(winding(p), 1);
        REQUIRE(m.rows() == 1);
        REQUIRE(m.cols() == 1);
        CHECK(abs(m(0, 0)) == p);
    }

    // A reflection of the triangle reverses orientation.
    const SimplicialMap flip(tri, tri, {{"a", "b"}, {"b", "a"}, {"c", "c"}});
    CHECK(induced_cohomology_map(flip, 1) == RationalMatrix::from_rows({{-1}}));
}

TEST_CASE("induced maps are contravariantly functorial", "[simplicial][property]") {
    std::mt19937 rng(42);
    std::vector<std::string> labels;
    for (int i = 0; i < 6; ++i) labels.push_back(label("a", i));
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const auto A = make(random_facets(rng, labels));
        const auto fB = random_map_from(rng, *A, "b");
        const auto gC = random_map_from(rng, *fB.target, "c");
        const SimplicialMap f(A, fB.target, fB.assignment);
        const SimplicialMap g(fB.target, gC.target, gC.assignment);
        const auto gf = compose(g, f);
        const int top = std::max({A->dimension(), fB.target->dimension(), gC.target->dimension()});
        for (int d = 0; d <= top; ++d) {
            const auto lhs = induced_cohomology_map(gf, d);
            const auto rhs = induced_cohomology_map(f, d) * induced_cohomology_map(g, d);
            CHECK(lhs == rhs);
            if (d > 0 && lhs.nonzero_count() > 0) ++nontrivial;
        }
    }
    CHECK(nontrivial > 0);  // the generator exercises positive degrees
}
