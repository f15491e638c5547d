#include "gtsys/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gtsys/parallel.hpp"
#include "gtsys/resolution.hpp"
#include "gtsys/semigroup.hpp"
#include "gtsys/togliatti.hpp"
#include "gtsys/toric.hpp"

namespace gtsys {

namespace {

using Vectors = std::vector<ExponentVector>;
using Entries = std::map<std::pair<std::int64_t, std::int64_t>, long>;

// Degree-3t invariants of (3; 0,1,2) as printed. The t = 2 list lacks
// (0,3,3); the t = 3 list repeats (3,6,0) and lacks (3,0,6).
const Vectors kCubicT2 = {{6, 0, 0}, {3, 3, 0}, {4, 1, 1}, {0, 6, 0}, {1, 4, 1},
                          {2, 2, 2}, {3, 0, 3}, {1, 1, 4}, {0, 0, 6}};
const Vectors kCubicT3 = {{9, 0, 0}, {6, 3, 0}, {7, 1, 1}, {3, 6, 0}, {4, 4, 1}, {5, 2, 2}, {6, 0, 3},
                          {0, 9, 0}, {1, 7, 1}, {2, 5, 2}, {3, 3, 3}, {4, 1, 4}, {0, 6, 3}, {1, 4, 4},
                          {2, 2, 5}, {3, 6, 0}, {0, 3, 6}, {1, 1, 7}, {0, 0, 9}};
const Vectors kCubicT4 = {{12, 0, 0}, {9, 3, 0}, {10, 1, 1}, {6, 6, 0}, {7, 4, 1}, {8, 2, 2}, {9, 0, 3},
                          {3, 9, 0},  {4, 7, 1}, {5, 5, 2},  {6, 3, 3}, {7, 1, 4}, {0, 12, 0}, {1, 10, 1},
                          {2, 8, 2},  {3, 6, 3}, {4, 4, 4},  {5, 2, 5}, {6, 0, 6}, {0, 9, 3},  {1, 7, 4},
                          {2, 5, 5},  {3, 3, 6}, {4, 1, 7},  {0, 6, 6}, {1, 4, 7}, {2, 2, 8},  {3, 0, 9},
                          {0, 3, 9},  {1, 1, 10}, {0, 0, 12}};

std::string join(const Vectors& vs) {
    std::string s;
    for (const auto& v : vs) s += (s.empty() ? "" : ", ") + monomial_string(v);
    return s.empty() ? "none" : s;
}

std::set<ExponentVector> as_set(const Vectors& v) { return {v.begin(), v.end()}; }

CheckOutcome make(std::string id, std::string description) { return {std::move(id), std::move(description), true, ""}; }

void expect(CheckOutcome& c, bool ok, const std::string& why) {
    if (ok) return;
    c.passed = false;
    c.detail += (c.detail.empty() ? "" : "; ") + why;
}

CheckOutcome exact_list(std::string id, const CyclicAction& action, std::int64_t t, const Vectors& printed) {
    auto c = make(std::move(id), "degree-" + std::to_string(t * action.order()) + " invariants of " +
                                     action.to_string() + " match the printed list");
    const auto got = invariant_monomials(action, t).monomials;
    expect(c, as_set(got) == as_set(printed) && got.size() == printed.size(),
           "computed {" + join(got) + "}");
    return c;
}

// Count must match; the printed list must be contained in the computed one
// and the gap must be exactly the known misprints.
CheckOutcome list_with_misprints(std::string id, std::int64_t t, const Vectors& printed, std::size_t count,
                                 const Vectors& omitted) {
    const CyclicAction action(3, {0, 1, 2});
    auto c = make(std::move(id), "degree-" + std::to_string(3 * t) + " invariants of (3; 0,1,2): count " +
                                     std::to_string(count));
    const auto got = invariant_monomials(action, t).monomials;
    const auto computed = as_set(got), listed = as_set(printed);
    expect(c, got.size() == count, "count " + std::to_string(got.size()));
    Vectors missing, extra;
    std::set_difference(computed.begin(), computed.end(), listed.begin(), listed.end(), std::back_inserter(missing));
    std::set_difference(listed.begin(), listed.end(), computed.begin(), computed.end(), std::back_inserter(extra));
    expect(c, extra.empty(), "printed but not invariant: " + join(extra));
    expect(c, as_set(missing) == as_set(omitted), "unlisted: " + join(missing));
    if (c.passed && !omitted.empty()) c.detail = "printed list omits " + join(omitted);
    return c;
}

CheckOutcome betti_shape(std::string id, std::int64_t a, std::int64_t b, std::int64_t d, const Entries& expected) {
    std::ostringstream desc;
    desc << "Betti table of (" << d << "; 0," << a << "," << b << ")";
    auto c = make(std::move(id), desc.str());
    const auto table = betti_table(surface_profile(a, b, d));
    Entries got;
    for (const auto& [key, rank] : table.entries) got[key] = rank.get_si();
    std::ostringstream shown;
    for (const auto& [key, rank] : got) shown << " b" << key.first << key.second << "=" << rank;
    expect(c, got == expected, "computed" + shown.str());
    return c;
}

CheckOutcome family_list(std::int64_t t, const Vectors& printed) {
    auto c = make("h3t-" + std::to_string(t), "generators of H_" + std::to_string(3 * t));
    const auto h = make_h3t(t);
    expect(c, as_set(h.generators()) == as_set(printed), "computed {" + join(h.generators()) + "}");
    expect(c, h.generators().size() == static_cast<std::size_t>(3 * t + 1), "generator count");
    return c;
}

std::vector<std::function<CheckOutcome()>> all_checks() {
    std::vector<std::function<CheckOutcome()>> v;

    v.push_back([] {
        return exact_list("inv-5-013", CyclicAction(5, {0, 1, 3}), 1,
                          {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {2, 2, 1}, {1, 1, 3}});
    });
    v.push_back([] {
        return exact_list("inv-3-012-t1", CyclicAction(3, {0, 1, 2}), 1, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}});
    });
    v.push_back([] { return list_with_misprints("inv-3-012-t2", 2, kCubicT2, 10, {{0, 3, 3}}); });
    v.push_back([] { return list_with_misprints("inv-3-012-t3", 3, kCubicT3, 19, {{3, 0, 6}}); });
    v.push_back([] { return list_with_misprints("inv-3-012-t4", 4, kCubicT4, 31, {}); });
    v.push_back([] {
        return exact_list("inv-8-035", CyclicAction(8, {0, 3, 5}), 1,
                          {{8, 0, 0}, {6, 1, 1}, {4, 2, 2}, {0, 8, 0}, {2, 3, 3}, {0, 4, 4}, {0, 0, 8}});
    });
    v.push_back([] {
        return exact_list("inv-6-023", CyclicAction(6, {0, 2, 3}), 1,
                          {{6, 0, 0}, {3, 3, 0}, {4, 0, 2}, {0, 6, 0}, {1, 3, 2}, {2, 0, 4}, {0, 0, 6}});
    });
    v.push_back([] {
        auto c = make("reduced-systems", "reduced systems give 7 monomials for (8; 0,3,5) and (6; 0,2,3)");
        expect(c, hf_reduced(3, 5, 8, 1) == 7, "(8; 0,3,5)");
        expect(c, hf_reduced(2, 3, 6, 1) == 7, "(6; 0,2,3)");
        return c;
    });

    v.push_back([] {
        auto c = make("classify-5-013", "(5; 0,1,3) is a GT-system failing WLP in degree 4");
        const CyclicAction a(5, {0, 1, 3});
        const auto cls = classify(a);
        expect(c, cls.mu_d == 5 && togliatti_bound_ok(a), "bound");
        expect(c, cls.is_gt_system, "not classified as GT-system");
        expect(c, wlp_fails_in_degree(a, 4).fails, "WLP holds in degree 4");
        return c;
    });
    v.push_back([] {
        auto c = make("wlp-3-012", "x L on (R/I_3)_2 of (3; 0,1,2) has a kernel");
        const auto w = wlp_fails_in_degree(CyclicAction(3, {0, 1, 2}), 2);
        expect(c, w.fails && w.kernel_dimension >= 1, "kernel " + std::to_string(w.kernel_dimension));
        return c;
    });
    v.push_back([] {
        auto c = make("gt-families", "(d; 0,1,2) d=3..8, (4; 0,1,2,3), (n+1; 0..n) n=2..4 are GT-systems");
        std::vector<CyclicAction> actions;
        for (std::int64_t d = 3; d <= 8; ++d) actions.emplace_back(d, std::vector<std::int64_t>{0, 1, 2});
        actions.emplace_back(4, std::vector<std::int64_t>{0, 1, 2, 3});
        for (std::int64_t n = 2; n <= 4; ++n) {
            std::vector<std::int64_t> w(static_cast<std::size_t>(n + 1));
            for (std::int64_t i = 0; i <= n; ++i) w[static_cast<std::size_t>(i)] = i;
            actions.emplace_back(n + 1, w);
        }
        for (const auto& a : actions) expect(c, classify(a).is_gt_system, a.to_string());
        return c;
    });

    v.push_back([] {
        auto c = make("hf-cubic", "HF(X_3, 1..4) = 4, 10, 19, 31 and HP = 3/2 t^2 + 3/2 t + 1");
        const CyclicAction a(3, {0, 1, 2});
        const std::int64_t expected[] = {4, 10, 19, 31};
        for (std::int64_t t = 1; t <= 4; ++t)
            expect(c, hf_by_counting(a, t) == expected[t - 1], "HF at t=" + std::to_string(t));
        const auto h = hilbert_series(surface_profile(1, 2, 3));
        expect(c, h.polynomial[0] == Rational(3, 2) && h.polynomial[1] == Rational(3, 2) && h.polynomial[2] == 1,
               "Hilbert polynomial");
        return c;
    });
    v.push_back([] {
        auto c = make("cubic-betti", "b_{1,1} = 0 and b_{1,2} = 1 for X_3");
        const CyclicAction a(3, {0, 1, 2});
        expect(c, first_betti_via_fibers(a, 1).fiber_sum == 0, "b_{1,1}");
        expect(c, first_betti_via_fibers(a, 2).fiber_sum == 1, "b_{1,2}");
        return c;
    });
    v.push_back([] {
        auto c = make("threefold", "HF(X_4, 1) = 10, HF(X_4, 2) = 43, b_{1,1} = 12 for (4; 0,1,2,3)");
        const CyclicAction a(4, {0, 1, 2, 3});
        expect(c, hf_by_counting(a, 1) == 10, "HF(1)");
        expect(c, hf_by_counting(a, 2) == 43, "HF(2)");
        expect(c, first_betti_via_fibers(a, 1).fiber_sum == 12, "b_{1,1}");
        return c;
    });
    v.push_back([] {
        auto c = make("cubic-toric", "I(X_3) = (w1 w2 w3 - w4^3)");
        const auto g = minimal_generators(CyclicAction(3, {0, 1, 2}));
        // Canonical generator order: x0^3, x0x1x2, x1^3, x2^3.
        const Multiset axes{0, 2, 3}, centre{1, 1, 1};
        expect(c, g.quadrics.empty(), "unexpected quadrics");
        expect(c, g.cubics.size() == 1 && ((g.cubics[0].lhs == axes && g.cubics[0].rhs == centre) ||
                                           (g.cubics[0].lhs == centre && g.cubics[0].rhs == axes)),
               "cubic generator");
        expect(c, g.degree_four && g.degree_four->no_new_generators(), "degree 4");
        return c;
    });

    v.push_back([] { return betti_shape("betti-4", 1, 2, 4, {{{1, 1}, 2}, {{2, 2}, 1}}); });
    v.push_back([] {
        return betti_shape("betti-6-theta4", 1, 2, 6, {{{1, 1}, 4}, {{2, 1}, 2}, {{2, 2}, 3}, {{3, 2}, 2}});
    });
    v.push_back([] {
        return betti_shape("betti-6-gorenstein", 1, 3, 6, {{{1, 1}, 9}, {{2, 1}, 16}, {{3, 1}, 9}, {{4, 2}, 1}});
    });
    v.push_back([] {
        return betti_shape("betti-8-mu8", 1, 4, 8,
                           {{{1, 1}, 13}, {{2, 1}, 30}, {{3, 1}, 25}, {{4, 1}, 4}, {{4, 2}, 5}, {{5, 2}, 2}});
    });
    v.push_back([] {
        return betti_shape("betti-8-mu7", 1, 2, 8,
                           {{{1, 1}, 7}, {{2, 1}, 8}, {{2, 2}, 6}, {{3, 1}, 3}, {{3, 2}, 8}, {{4, 2}, 3}});
    });
    v.push_back([] {
        auto c = make("theta-catalogue", "printed theta(a,b,d) for d = 4, 6, 8 against counting");
        std::vector<std::string> off;
        for (std::int64_t d : {4, 6, 8})
            for (std::int64_t a = 1; a < d; ++a)
                for (std::int64_t b = a + 1; b < d; ++b) {
                    const auto printed = catalogue_theta(a, b, d);
                    if (!printed) continue;
                    const auto p = surface_profile(a, b, d);
                    expect(c, !p.discrepancy, "formula and counting disagree at (" + std::to_string(a) + "," +
                                                  std::to_string(b) + "," + std::to_string(d) + ")");
                    if (*printed != p.theta)
                        off.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) +
                                      "): printed " + std::to_string(*printed) + ", counted " +
                                      std::to_string(p.theta));
                }
        if (c.passed && !off.empty()) {
            c.detail = "note: " + std::to_string(off.size()) + " printed values differ from counting, e.g. " +
                       off.front();
        }
        return c;
    });

    v.push_back([] {
        return family_list(2, {{6, 0, 0}, {0, 6, 0}, {0, 0, 6}, {4, 1, 1}, {1, 4, 1}, {1, 1, 4}, {2, 2, 2}});
    });
    v.push_back([] {
        return family_list(3, {{9, 0, 0}, {0, 9, 0}, {0, 0, 9}, {7, 1, 1}, {1, 7, 1}, {1, 1, 7}, {5, 2, 2},
                               {2, 5, 2}, {2, 2, 5}, {3, 3, 3}});
    });
    v.push_back([] {
        return family_list(4, {{12, 0, 0}, {0, 12, 0}, {0, 0, 12}, {10, 1, 1}, {1, 10, 1}, {1, 1, 10}, {8, 2, 2},
                               {2, 8, 2}, {2, 2, 8}, {6, 3, 3}, {3, 6, 3}, {3, 3, 6}, {4, 4, 4}});
    });
    v.push_back([] {
        auto c = make("hk-k1", "H^1_{3(1+t')} coincides with H_{3(1+t')} for t' = 0..3");
        for (std::int64_t tp = 0; tp <= 3; ++tp) expect(c, make_hk(1, tp) == make_h3t(1 + tp), std::to_string(tp));
        return c;
    });
    v.push_back([] {
        auto c = make("h6-members", "(3,3,0), (0,9,9), (0,15,9), (0,9,15) are not in H_6");
        const auto h6 = make_h3t(2);
        MembershipOracle oracle(h6);
        for (const ExponentVector& w : {ExponentVector{3, 3, 0}, {0, 9, 9}, {0, 15, 9}, {0, 9, 15}})
            expect(c, !oracle.contains(w), monomial_string(w) + " found in H_6");
        return c;
    });
    v.push_back([] {
        auto c = make("h3t-not-invariant-ring", "(3,3(t-1),0) is not in H_3t but its sum with t m is, t = 2..4");
        for (std::int64_t t = 2; t <= 4; ++t) {
            MembershipOracle oracle(make_h3t(t));
            const ExponentVector w{3, 3 * (t - 1), 0};
            expect(c, !oracle.contains(w), "t=" + std::to_string(t) + " contains w");
            expect(c, oracle.contains(w + ExponentVector{t, t, t}), "t=" + std::to_string(t) + " misses w + tm");
        }
        return c;
    });
    v.push_back([] {
        auto c = make("two-zero-lemma", "one-zero-coordinate members of H_3t are multiples of 3t (t = 2, 3; box 18)");
        expect(c, lemma_two_zero_check(2, 18), "t=2");
        expect(c, lemma_two_zero_check(3, 18), "t=3");
        return c;
    });
    v.push_back([] {
        auto c = make("h3t-cm", "Trung criterion verified for H_3t, t = 1..4, up to 6 levels");
        for (std::int64_t t = 1; t <= 4; ++t) {
            const auto r = trung_cm_check(make_h3t(t), 6);
            expect(c, r.hypothesis_ok && r.status == TrungStatus::VerifiedUpToBound, "t=" + std::to_string(t));
        }
        return c;
    });
    v.push_back([] {
        auto c = make("non-acm", "the degree-5 non-aCM example yields a Trung counterexample");
        const AffineSemigroup h(3, {{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {3, 1, 1}, {2, 2, 1}, {1, 3, 1}});
        const auto r = trung_cm_check(h, 6);
        expect(c, r.status == TrungStatus::Counterexample && r.witness, "no witness up to 6 levels");
        if (c.passed) c.detail = "witness " + monomial_string(*r.witness);
        return c;
    });
    return v;
}

}  // namespace

std::vector<CheckOutcome> reproduction_checks() {
    const auto checks = all_checks();
    return parallel_map(checks.size(), [&](std::size_t i) {
        try {
            return checks[i]();
        } catch (const std::exception& e) {
            return CheckOutcome{"check-" + std::to_string(i), "exception", false, e.what()};
        }
    });
}

}  // namespace gtsys
