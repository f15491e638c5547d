#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gtsys/hilbert.hpp"

using namespace gtsys;

namespace {

struct Triple {
    std::int64_t a, b, d;
};

std::vector<Triple> sweep(std::int64_t max_d) {
    std::vector<Triple> out;
    for (std::int64_t d = 3; d <= max_d; ++d)
        for (std::int64_t a = 1; a < d; ++a)
            for (std::int64_t b = a + 1; b < d; ++b)
                if (gcd_all({a, b, d}) == 1) out.push_back({a, b, d});
    return out;
}

// Number of nonnegative (y0, y1, y2) with y0 + y1 + y2 = t d and
// a y1 + b y2 == 0 (mod d), i.e. HF(X_d, t) by plain enumeration.
std::int64_t naive_hf(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t t) {
    std::int64_t n = 0;
    for (std::int64_t y1 = 0; y1 <= t * d; ++y1)
        for (std::int64_t y2 = 0; y1 + y2 <= t * d; ++y2)
            if ((a * y1 + b * y2) % d == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("hf_by_counting examples") {
    const CyclicAction cubic(3, {0, 1, 2});
    CHECK(hf_by_counting(cubic, 0) == 1);
    CHECK(hf_by_counting(cubic, 2) == 10);
    CHECK(hf_by_counting(cubic, 3) == 19);
    CHECK(hf_by_counting(cubic, 4) == 31);
    const CyclicAction threefold(4, {0, 1, 2, 3});
    CHECK(hf_by_counting(threefold, 1) == 10);
    CHECK(hf_by_counting(threefold, 2) == 43);
    CHECK(hf_by_counting(CyclicAction(7, {0, 2, 5, 6}), 0) == 1);
    CHECK_THROWS_AS(hf_by_counting(cubic, -1), PreconditionError);
}

TEST_CASE("count_system_solutions against enumeration") {
    const CyclicAction a(6, {0, 2, 3});
    std::int64_t total = 0;
    for (std::int64_t r = 0; r <= 3; ++r) {
        std::int64_t n = 0;
        for (std::int64_t y1 = 0; y1 <= 6; ++y1)
            for (std::int64_t y2 = 0; y1 + y2 <= 6; ++y2)
                if (2 * y1 + 3 * y2 == 6 * r) ++n;
        CHECK(count_system_solutions(a, 1, r) == n);
        total += n;
    }
    CHECK(total == 7);
}

TEST_CASE("hf_reduced examples") {
    CHECK(hf_reduced(2, 3, 6, 1) == 7);
    CHECK(hf_reduced(3, 5, 8, 1) == 7);
    CHECK(hf_reduced(1, 2, 3, 2) == 10);
    CHECK(hf_reduced(2, 3, 4, 1) == 5);
    CHECK_THROWS_AS(hf_reduced(2, 2, 5, 1), PreconditionError);
    CHECK_THROWS_AS(hf_reduced(2, 4, 6, 1), PreconditionError);
    CHECK_THROWS_AS(hf_reduced(1, 2, 3, -1), PreconditionError);
}

TEST_CASE("surface_profile examples") {
    const auto p = surface_profile(3, 5, 8);
    CHECK(p.lambda == 7);
    CHECK(p.mu == -2);
    CHECK(p.theta == 4);
    CHECK(p.mu_d == 7);
    CHECK(p.codim == 4);
    CHECK(p.cm_type == 3);
    CHECK(p.reg == 3);
    CHECK_FALSE(p.discrepancy);

    const auto q = surface_profile(1, 2, 3);
    CHECK(q.lambda == 2);
    CHECK(q.theta == 3);
    CHECK(q.mu_d == 4);
    CHECK(q.codim == 1);
    CHECK(q.cm_type == 1);

    const auto r = surface_profile(2, 3, 6);
    CHECK(r.theta == 6);
    CHECK(r.mu_d == 7);
    CHECK(r.gcd_ad == 2);
    CHECK(r.a_prime == 1);
    CHECK(r.d_prime == 3);
    CHECK(r.gcd_bd == 3);
    CHECK(r.b_prime == 1);
    CHECK(r.d_second == 2);

    CHECK_THROWS_AS(surface_profile(0, 1, 3), PreconditionError);
    CHECK_THROWS_AS(surface_profile(2, 4, 6), PreconditionError);
}

TEST_CASE("surface_invariants") {
    const auto five = surface_invariants(surface_profile(1, 3, 5));
    CHECK(five.mu_d == 5);
    CHECK(five.codim == 2);
    const auto cubic = surface_invariants(surface_profile(1, 2, 3));
    CHECK(cubic.mu_d == 4);
    CHECK(cubic.codim == 1);
    CHECK(cubic.cm_type == 1);
    CHECK(cubic.degree == 3);
    CHECK(cubic.reg == 3);
    for (std::int64_t d : {5, 7, 11, 13, 17, 19, 23, 29})
        for (const auto& [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {1, d - 1}, {2, d - 2}}) {
            if (a >= b) continue;
            const auto inv = surface_invariants(surface_profile(a, b, d));
            REQUIRE(inv.mu_d == (d + 5) / 2);
            REQUIRE(inv.codim == (d - 1) / 2);
        }
}

TEST_CASE("hf_closed_form and hilbert_series examples") {
    CHECK(hf_closed_form(surface_profile(1, 2, 3), 3) == 19);
    CHECK(hf_closed_form(surface_profile(3, 5, 8), 1) == 7);
    CHECK(hf_closed_form(surface_profile(5, 6, 11), 0) == 1);

    const auto cubic = hilbert_series(surface_profile(1, 2, 3), 4);
    CHECK(cubic.series_numerator == std::array<BigInt, 3>{1, 1, 1});
    CHECK(cubic.polynomial == std::array<Rational, 3>{Rational(3, 2), Rational(3, 2), Rational(1)});
    CHECK(cubic.table == std::vector<std::int64_t>{1, 4, 10, 19, 31});

    const auto gor = hilbert_series(surface_profile(2, 3, 6));
    CHECK(gor.series_numerator == std::array<BigInt, 3>{1, 4, 1});
    CHECK(gor.table.size() == 7);
    CHECK_THROWS_AS(hilbert_series(surface_profile(1, 2, 3), 0), PreconditionError);
}

TEST_CASE("triple agreement, d <= 30, t <= 5") {
    for (const auto& [a, b, d] : sweep(30)) {
        const auto p = surface_profile(a, b, d);
        REQUIRE_FALSE(p.discrepancy);
        REQUIRE(p.mu_d == (d + p.theta + 2) / 2);
        REQUIRE((d + p.theta) % 2 == 0);
        REQUIRE(p.cm_type >= 1);
        REQUIRE(p.lambda * p.a_prime + p.mu * p.d_prime == b);
        REQUIRE((0 < p.lambda && p.lambda <= p.d_prime));
        if (p.gcd_ad == 1) REQUIRE(p.lambda != 1);
        const auto action = p.action();
        for (std::int64_t t = 0; t <= 5; ++t) {
            const auto c = hf_by_counting(action, t);
            REQUIRE(c == hf_reduced(a, b, d, t));
            REQUIRE(c == hf_closed_form(p, t));
        }
        const auto h = hilbert_series(p, 5);
        REQUIRE_FALSE(h.discrepancy);
        BigInt at_one = 0;
        for (const auto& c : h.series_numerator) {
            REQUIRE(c >= 0);
            at_one += c;
        }
        REQUIRE(at_one == d);
    }
}

TEST_CASE("counting agrees with naive enumeration on small surfaces") {
    for (const auto& [a, b, d] : sweep(9))
        for (std::int64_t t = 0; t <= 3; ++t) REQUIRE(hf_by_counting(CyclicAction(d, {0, a, b}), t) == naive_hf(a, b, d, t));
}

TEST_CASE("weight reversal leaves HF unchanged") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 3);
        std::vector<std::int64_t> w, rev;
        for (std::int64_t i = 0; i <= n; ++i) {
            w.push_back(i);
            rev.push_back(n - i);
        }
        std::shuffle(w.begin(), w.end(), rng);
        const CyclicAction fwd(n + 1, w), back(n + 1, rev);
        const std::int64_t t = 1 + static_cast<std::int64_t>(rng() % 3);
        REQUIRE(hf_by_counting(fwd, t) == hf_by_counting(back, t));
    }
}

TEST_CASE("catalogue_theta") {
    CHECK(catalogue_theta(1, 2, 4) == 4);
    CHECK(catalogue_theta(1, 2, 6) == 4);
    CHECK(catalogue_theta(1, 3, 6) == 5);
    CHECK(catalogue_theta(1, 4, 8) == 5);
    CHECK(catalogue_theta(1, 2, 8) == 4);
    CHECK_FALSE(catalogue_theta(1, 2, 5));
    CHECK_FALSE(catalogue_theta(2, 4, 8));
}
