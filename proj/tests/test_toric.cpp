#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gtsys/resolution.hpp"
#include "gtsys/toric.hpp"

using namespace gtsys;

namespace {

bool holds(const std::vector<ExponentVector>& gens, const Binomial& b) {
    return b.lhs.size() == b.rhs.size() && b.lhs != b.rhs && multiset_product(gens, b.lhs) == multiset_product(gens, b.rhs);
}

// The three weights form an arithmetic progression whose step is a unit mod d.
bool progression(std::int64_t a, std::int64_t b, std::int64_t d) {
    const std::int64_t w[3] = {0, a, b};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int k = 3 - i - j;
            const auto step = mod_floor(w[j] - w[i], d);
            if (mod_floor(w[k] - w[j], d) == step && std::gcd(step, d) == 1) return true;
        }
    return false;
}

// dim I_3 - rank(S_1 I_2) with the products written in the basis of all
// degree-3 multisets at once (no splitting by fiber).
std::int64_t cubic_count_dense(const CyclicAction& action) {
    const auto g = minimal_generators(action, false);
    const std::size_t n = g.generators.size();
    std::map<Multiset, std::size_t> col;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) col.emplace(Multiset{i, j, k}, col.size());
    IntegerMatrix m;
    for (const auto& q : g.quadrics)
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<BigInt> row(col.size());
            auto l = q.lhs, r = q.rhs;
            l.push_back(v);
            r.push_back(v);
            std::sort(l.begin(), l.end());
            std::sort(r.begin(), r.end());
            row[col.at(l)] += 1;
            row[col.at(r)] -= 1;
            m.append_row(row);
        }
    return ideal_dimension(action, 3) - static_cast<std::int64_t>(integer_rank(m));
}

}  // namespace

TEST_CASE("fiber_partition examples") {
    const CyclicAction cubic(3, {0, 1, 2});
    const auto f3 = fiber_partition(cubic, 3);
    std::vector<std::vector<Multiset>> nontrivial;
    for (const auto& [image, members] : f3.fibers)
        if (members.size() > 1) {
            CHECK(image == ExponentVector{3, 3, 3});
            nontrivial.push_back(members);
        }
    REQUIRE(nontrivial.size() == 1);
    CHECK(std::set<Multiset>(nontrivial[0].begin(), nontrivial[0].end()) == std::set<Multiset>{{0, 2, 3}, {1, 1, 1}});
    CHECK(fiber_partition(cubic, 2).excess() == 0);
    CHECK(fiber_partition(CyclicAction(6, {0, 1, 3}), 2).excess() == 9);
    CHECK_THROWS_AS(fiber_partition(cubic, 0), PreconditionError);
}

TEST_CASE("ideal_dimension examples") {
    CHECK(ideal_dimension(CyclicAction(3, {0, 1, 2}), 2) == 0);
    CHECK(ideal_dimension(CyclicAction(3, {0, 1, 2}), 3) == 1);
    CHECK(ideal_dimension(CyclicAction(5, {0, 1, 3}), 2) == 1);
    CHECK(ideal_dimension(CyclicAction(5, {0, 1, 3}), 0) == 0);
}

TEST_CASE("minimal_generators examples") {
    const auto cubic = minimal_generators(CyclicAction(3, {0, 1, 2}));
    CHECK(cubic.quadric_count == 0);
    CHECK(cubic.cubic_count == 1);
    REQUIRE(cubic.cubics.size() == 1);
    const std::set<Multiset> sides{cubic.cubics[0].lhs, cubic.cubics[0].rhs};
    CHECK(sides == std::set<Multiset>{{0, 2, 3}, {1, 1, 1}});
    CHECK(cubic.verified_through_degree == 4);

    const auto six = minimal_generators(CyclicAction(6, {0, 1, 3}));
    CHECK(six.quadric_count == 9);
    CHECK(six.cubic_count == 0);

    const auto five = minimal_generators(CyclicAction(5, {0, 1, 3}), false);
    CHECK(five.quadric_count == 1);
    CHECK(five.cubic_count == 2);
    CHECK_FALSE(five.degree_four);
    CHECK(five.verified_through_degree == 3);
}

TEST_CASE("(7; 0,1,3) needs a single cubic") {
    const CyclicAction a(7, {0, 1, 3});
    const auto g = minimal_generators(a);
    CHECK(g.quadric_count == 3);
    CHECK(g.cubic_count == 1);
    CHECK(cubic_count_dense(a) == 1);
    REQUIRE(g.cubics.size() == 1);
    CHECK(multiset_product(g.generators, g.cubics[0].lhs) == ExponentVector{7, 7, 7});
    CHECK(generator_counts(surface_profile(1, 3, 7)).cubics == 3);
}

TEST_CASE("partitions are consistent with HF in degrees 2 and 3") {
    for (std::int64_t d = 3; d <= 10; ++d)
        for (std::int64_t a = 1; a < d; ++a)
            for (std::int64_t b = a + 1; b < d; ++b) {
                if (gcd_all({a, b, d}) != 1) continue;
                const CyclicAction act(d, {0, a, b});
                const auto mu = mu_d(act);
                for (std::int64_t j = 2; j <= 3; ++j) {
                    const auto f = fiber_partition(act, j);
                    REQUIRE(f.excess() == ideal_dimension(act, j));
                    REQUIRE(static_cast<std::int64_t>(f.multiset_count()) == binomial_i64(mu + j - 1, j));
                    std::set<Multiset> seen;
                    for (const auto& [image, members] : f.fibers)
                        for (const auto& m : members) {
                            REQUIRE(multiset_product(f.generators, m) == image);
                            REQUIRE(seen.insert(m).second);
                        }
                }
            }
}

TEST_CASE("generator sweep d <= 12") {
    for (std::int64_t d = 3; d <= 12; ++d)
        for (std::int64_t a = 1; a < d; ++a)
            for (std::int64_t b = a + 1; b < d; ++b) {
                if (gcd_all({a, b, d}) != 1) continue;
                const CyclicAction act(d, {0, a, b});
                const auto p = surface_profile(a, b, d);
                const auto g = minimal_generators(act);
                const auto formula = generator_counts(p);
                for (const auto& q : g.quadrics) REQUIRE(holds(g.generators, q));
                for (const auto& c : g.cubics) REQUIRE(holds(g.generators, c));
                REQUIRE(g.degree_four->no_new_generators());
                REQUIRE(formula.quadrics == g.quadric_count);
                if (p.theta >= 4 || progression(a, b, d)) {
                    REQUIRE(formula.cubics == g.cubic_count);
                } else {
                    REQUIRE(g.cubic_count < formula.cubics);
                }
                if (d <= 9) REQUIRE(cubic_count_dense(act) == g.cubic_count);
            }
}
