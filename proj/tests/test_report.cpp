#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtsys/report.hpp"
#include "gtsys/reproduce.hpp"

using namespace gtsys;

TEST_CASE("action_from_json") {
    const auto a = action_from_json(Json::parse(R"({"d": 5, "weights": [0, 1, 3]})"));
    CHECK(a == CyclicAction(5, {0, 1, 3}));
    CHECK(action_from_json(to_json(a)) == a);
    CHECK_THROWS_AS(action_from_json(Json::parse(R"({"weights": [0, 1]})")), PreconditionError);
    CHECK_THROWS_AS(action_from_json(Json::parse(R"({"d": "5", "weights": [0, 1]})")), PreconditionError);
    CHECK_THROWS_AS(action_from_json(Json::parse(R"({"d": 5, "weights": [0, 1.5]})")), PreconditionError);
    CHECK_THROWS_AS(action_from_json(Json::parse(R"({"d": 4, "weights": [0, 2]})")), PreconditionError);
    CHECK_THROWS_AS(action_from_json(Json::parse("[1, 2]")), PreconditionError);
}

TEST_CASE("semigroup_from_json") {
    const auto h = semigroup_from_json(Json::parse(R"({"dim": 3, "generators": [[0,0,3],[3,0,0],[1,1,1],[0,3,0]]})"));
    CHECK(h == make_h3t(1));
    CHECK(semigroup_from_json(to_json(make_h3t(3))) == make_h3t(3));
    CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"dim": 0, "generators": []})")), PreconditionError);
    CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"dim": 2, "generators": 3})")), PreconditionError);
    CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"dim": 2, "generators": [[1,"x"]]})")), PreconditionError);
    CHECK_THROWS_AS(semigroup_from_json(Json::parse(R"({"dim": 2, "generators": [[1,1],[2,0,0]]})")), PreconditionError);
}

TEST_CASE("big integers and rationals") {
    CHECK(to_json(BigInt(-7)) == Json(-7));
    const BigInt big("123456789012345678901234567890");
    CHECK(to_json(big) == Json("123456789012345678901234567890"));
    CHECK(to_json(Rational(3, 6)) == Json("1/2"));
    CHECK(to_json(Rational(4)) == Json("4"));
}

TEST_CASE("report shapes") {
    const auto p = surface_profile(1, 3, 6);
    const auto jp = to_json(p);
    CHECK(jp["theta"] == 6);
    CHECK(jp["mu_d"] == 7);
    CHECK(jp["discrepancy"].is_null());

    const auto jt = to_json(betti_table(surface_profile(1, 2, 4)));
    CHECK(jt["c"] == 2);
    CHECK(jt["entries"]["1,1"] == 2);
    CHECK(jt["entries"]["2,2"] == 1);

    const auto jg = to_json(minimal_generators(CyclicAction(3, {0, 1, 2})));
    CHECK(jg["quadric_count"] == 0);
    CHECK(jg["cubic_count"] == 1);
    CHECK(jg["cubics"].size() == 1);

    const auto jm = to_json(member(make_h3t(2), {3, 3, 0}));
    CHECK(jm["member"] == false);
    CHECK(jm["decomposition"].is_null());

    const auto jr = to_json(trung_cm_check(make_h3t(2), 3));
    CHECK(jr["status"] == "verified-up-to-bound");
    CHECK(jr["witness"].is_null());
}

TEST_CASE("render is stable and round-trips") {
    const Json j = to_json(hilbert_series(surface_profile(2, 3, 7)));
    const auto s = render(j);
    CHECK(s.back() == '\n');
    CHECK(render(Json::parse(s)) == s);
    CHECK(render(to_json(hilbert_series(surface_profile(2, 3, 7)))) == s);
    CHECK(s.find("\"polynomial\"") < s.find("\"series_numerator\""));
}

TEST_CASE("every reproduction check passes") {
    const auto checks = reproduction_checks();
    CHECK(checks.size() >= 30);
    for (const auto& c : checks) {
        INFO(c.id << ": " << c.detail);
        CHECK(c.passed);
    }
    const auto again = reproduction_checks();
    REQUIRE(again.size() == checks.size());
    for (std::size_t i = 0; i < checks.size(); ++i) CHECK(again[i].id == checks[i].id);
}
