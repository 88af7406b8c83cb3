#include <rhcalc/graded.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace rhcalc;

TEST_CASE("regrade nonpositive", "[graded]") {
    CHECK(regrade_nonpositive(GradedDims{{0, 1}, {2, 1}}) == GradedDims{{0, 1}, {-2, 1}});
    CHECK(regrade_nonpositive(GradedDims{{0, 1}}) == GradedDims{{0, 1}});
    CHECK(regrade_nonpositive(GradedDims{{0, 1}, {1, 2}, {2, 1}}) == GradedDims{{0, 1}, {-1, 2}, {-2, 1}});
    CHECK_THROWS_AS(regrade_nonpositive(GradedDims{{-1, 1}}), InputError);
}

TEST_CASE("tensor examples", "[graded]") {
    const GradedDims w{{1, 2}, {3, 1}, {-4, 7}};
    CHECK(tensor(GradedDims{{0, 1}}, w) == w);
    CHECK(tensor(GradedDims{{0, 1}, {-2, 1}}, GradedDims{{1, 1}, {3, 1}}) == GradedDims{{1, 2}, {3, 1}, {-1, 1}});
    const GradedDims circle{{0, 1}, {-1, 1}};
    CHECK(tensor(circle, circle) == GradedDims{{0, 1}, {-1, 2}, {-2, 1}});
    CHECK_THROWS_AS(tensor(GradedDims{{0, ExtDim::unbounded(3)}}, w), InputError);
}

TEST_CASE("truncate_min", "[graded]") {
    CHECK(truncate_min(GradedDims{{1, 2}, {3, 1}, {-1, 1}}, 0) == GradedDims{{1, 2}, {3, 1}});
    CHECK(truncate_min(GradedDims{{0, 5}, {1, 1}}, 1) == GradedDims{{1, 1}});
    CHECK(truncate_min(GradedDims{}, 0).empty());
}

TEST_CASE("poincare series", "[graded]") {
    CHECK(poincare_series(GradedDims{{1, 2}, {3, 1}}) == "2·t^1 + t^3");
    CHECK(poincare_series(GradedDims{}) == "0");
    CHECK(poincare_series(GradedDims{{-2, 1}, {0, 1}}) == "t^-2 + 1");
    CHECK(poincare_series(GradedDims{{0, ExtDim::unbounded(8)}, {2, 1}}) == "∞ + t^2");
    CHECK(poincare_series(GradedDims{{3, ExtDim::unbounded(1)}}) == "∞·t^3");
}

TEST_CASE("ExtDim lower-bound arithmetic", "[graded]") {
    CHECK((ExtDim(2) + ExtDim(3)) == ExtDim(5));
    CHECK((ExtDim(2) + ExtDim::unbounded(3)) == ExtDim::unbounded(5));
    CHECK(scale(ExtDim::unbounded(3), 2) == ExtDim::unbounded(6));
    CHECK(scale(ExtDim::unbounded(3), 0) == ExtDim(0));
    CHECK_THROWS_AS(ExtDim::unbounded(1).value(), InputError);
    CHECK(ExtDim::unbounded(4).str() == "≥4");
    // An UNBOUNDED zero lower bound is still stored.
    GradedDims g;
    g.set(0, ExtDim::unbounded(0));
    CHECK_FALSE(g.empty());
}

namespace {

GradedDims random_dims(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 5), degree(-6, 6), dim(0, 4);
    GradedDims g;
    for (int i = count(rng); i > 0; --i) g.add(degree(rng), static_cast<std::uint64_t>(dim(rng)));
    return g;
}

}  // namespace

TEST_CASE("tensor algebra laws on random dimension vectors", "[graded][property]") {
    std::mt19937 rng(2026);
    const GradedDims unit{{0, 1}};
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = random_dims(rng), v = random_dims(rng), w = random_dims(rng);
        CHECK(tensor(unit, u) == u);
        CHECK(tensor(u, unit) == u);
        CHECK(tensor(u, v) == tensor(v, u));
        CHECK(tensor(tensor(u, v), w) == tensor(u, tensor(v, w)));
        CHECK(tensor(u, v).total().value() == u.total().value() * v.total().value());

        std::uniform_int_distribution<int> cut(-6, 6);
        const int a = cut(rng), b = cut(rng);
        CHECK(truncate_min(truncate_min(u, a), b) == truncate_min(u, std::max(a, b)));

        const auto nonneg = truncate_min(u, 0);
        const auto regraded = regrade_nonpositive(nonneg);
        GradedDims reflected;
        for (const auto& [d, x] : regraded.entries()) reflected.set(-d, x);
        CHECK(reflected == nonneg);
    }
}
