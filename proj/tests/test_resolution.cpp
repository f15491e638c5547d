#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtsys/resolution.hpp"

using namespace gtsys;

namespace {

using Shape = std::map<std::pair<std::int64_t, std::int64_t>, long>;

Shape shape(const BettiTable& t) {
    Shape s;
    for (const auto& [k, v] : t.entries) s[k] = v.get_si();
    return s;
}

// [z^t] of (1 + sum (-1)^l b_{l,i} z^{l+i}) / (1 - z)^mu, no reduction.
BigInt expand(const BettiTable& t, std::int64_t degree) {
    BigInt total = binomial(degree + t.mu_d - 1, t.mu_d - 1);
    for (const auto& [key, rank] : t.entries) {
        const auto shift = key.first + key.second;
        if (shift > degree) continue;
        const BigInt term = rank * binomial(degree - shift + t.mu_d - 1, t.mu_d - 1);
        total += key.first % 2 == 0 ? term : BigInt(-term);
    }
    return total;
}

}  // namespace

TEST_CASE("betti_table examples") {
    CHECK(shape(betti_table(surface_profile(1, 3, 6))) == Shape{{{1, 1}, 9}, {{2, 1}, 16}, {{3, 1}, 9}, {{4, 2}, 1}});
    CHECK(shape(betti_table(surface_profile(1, 4, 8))) ==
          Shape{{{1, 1}, 13}, {{2, 1}, 30}, {{3, 1}, 25}, {{4, 1}, 4}, {{4, 2}, 5}, {{5, 2}, 2}});
    CHECK(shape(betti_table(surface_profile(1, 2, 4))) == Shape{{{1, 1}, 2}, {{2, 2}, 1}});
    CHECK(shape(betti_table(surface_profile(1, 2, 8))) ==
          Shape{{{1, 1}, 7}, {{2, 1}, 8}, {{2, 2}, 6}, {{3, 1}, 3}, {{3, 2}, 8}, {{4, 2}, 3}});
    CHECK(shape(betti_table(surface_profile(1, 2, 6))) == Shape{{{1, 1}, 4}, {{2, 1}, 2}, {{2, 2}, 3}, {{3, 2}, 2}});
    CHECK(shape(betti_table(surface_profile(1, 3, 5))) == Shape{{{1, 1}, 1}, {{1, 2}, 2}, {{2, 2}, 2}});

    const auto t = betti_table(surface_profile(1, 3, 6));
    CHECK(t.c == 4);
    CHECK(t.h == 0);
    CHECK(t.which == ResolutionCase::ThetaAtLeastFour);
    CHECK(t.at(2, 2) == 0);
    CHECK(betti_table(surface_profile(1, 2, 3)).which == ResolutionCase::ThetaThree);
}

TEST_CASE("generator_counts examples") {
    CHECK(generator_counts(surface_profile(1, 2, 3)) == GeneratorCounts{0, 1});
    CHECK(generator_counts(surface_profile(1, 3, 6)) == GeneratorCounts{9, 0});
    CHECK(generator_counts(surface_profile(1, 3, 5)) == GeneratorCounts{1, 2});
}

TEST_CASE("first_betti_via_fibers examples") {
    const CyclicAction cubic(3, {0, 1, 2});
    CHECK(first_betti_via_fibers(cubic, 1).binomial_minus_hf == 0);
    CHECK(first_betti_via_fibers(cubic, 2).fiber_sum == 1);
    const auto three = first_betti_via_fibers(CyclicAction(4, {0, 1, 2, 3}), 1);
    CHECK(three.binomial_minus_hf == 12);
    CHECK(three.agree());
    CHECK_THROWS_AS(first_betti_via_fibers(cubic, 0), PreconditionError);
}

TEST_CASE("series_from_betti examples") {
    CHECK(series_from_betti(betti_table(surface_profile(1, 2, 3))) == RationalSeries{{1, 1, 1}, 3});
    CHECK(series_from_betti(betti_table(surface_profile(1, 3, 6))) == RationalSeries{{1, 4, 1}, 3});
    CHECK(series_from_betti(betti_table(surface_profile(1, 2, 4))) == RationalSeries{{1, 2, 1}, 3});
    CHECK(RationalSeries{{1, -1}, 1}.reduced() == RationalSeries{{1}, 0});
    CHECK(RationalSeries{{2, 0, -2}, 2}.reduced() == RationalSeries{{2, 2}, 1});
}

TEST_CASE("resolution sweep d <= 30") {
    for (std::int64_t d = 3; d <= 30; ++d)
        for (std::int64_t a = 1; a < d; ++a)
            for (std::int64_t b = a + 1; b < d; ++b) {
                if (gcd_all({a, b, d}) != 1) continue;
                const auto p = surface_profile(a, b, d);
                const auto t = betti_table(p);
                REQUIRE(series_from_betti(t) == closed_form_series(p));
                REQUIRE(t.projective_dimension() == t.c);
                REQUIRE(t.regularity() == 3);
                REQUIRE(t.at(t.c, 2) == p.cm_type);
                REQUIRE(t.at(t.c, 1) == 0);
                const auto g = generator_counts(p);
                REQUIRE(g.quadrics == t.at(1, 1));
                REQUIRE(g.cubics == t.at(1, 2));
                if (p.theta >= 4) REQUIRE(g.cubics == 0);
                for (std::int64_t deg = 0; deg <= 6; ++deg) REQUIRE(expand(t, deg) == hf_closed_form(p, deg));
                if (d <= 16) REQUIRE(first_betti_via_fibers(p.action(), 1).fiber_sum == t.at(1, 1));
            }
}
