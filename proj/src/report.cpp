#include "gtsys/report.hpp"

namespace gtsys {

namespace {

std::int64_t get_int(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw PreconditionError(std::string("field \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

std::vector<std::int64_t> get_int_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw PreconditionError(what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw PreconditionError(what + " must be an array of integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

Json multiset_json(const Multiset& m) {
    Json j = Json::array();
    for (auto i : m) j.push_back(i);
    return j;
}

Json optional_vector(const std::optional<ExponentVector>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

CyclicAction action_from_json(const Json& j) {
    const auto d = get_int(j, "d");
    if (!j.contains("weights")) throw PreconditionError("missing field \"weights\"");
    return CyclicAction(d, get_int_list(j.at("weights"), "weights"));
}

AffineSemigroup semigroup_from_json(const Json& j) {
    const auto dim = get_int(j, "dim");
    if (dim < 1) throw PreconditionError("dim must be >= 1");
    if (!j.contains("generators") || !j.at("generators").is_array())
        throw PreconditionError("field \"generators\" must be an array");
    std::vector<ExponentVector> gens;
    for (const auto& g : j.at("generators")) gens.emplace_back(get_int_list(g, "generator"));
    return AffineSemigroup(static_cast<std::size_t>(dim), std::move(gens));
}

Json to_json(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Json to_json(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    return c.get_str();
}

Json to_json(const ExponentVector& v) { return Json(v.values()); }

Json to_json(const CyclicAction& a) { return Json{{"d", a.order()}, {"weights", a.weights()}}; }

Json to_json(const InvariantBasis& b) {
    Json mons = Json::array();
    for (const auto& m : b.monomials) mons.push_back(to_json(m));
    return Json{{"action", to_json(b.action)}, {"t", b.t}, {"count", b.count()}, {"monomials", mons}};
}

Json to_json(const WlpResult& w) {
    return Json{{"degree", w.degree},
                {"source_dimension", w.source_dimension},
                {"target_dimension", w.target_dimension},
                {"rank", w.rank},
                {"mode", to_string(w.mode)},
                {"fails", w.fails},
                {"kernel_dimension", w.kernel_dimension}};
}

Json to_json(const GtClassification& c) {
    return Json{{"action", to_json(c.action)},
                {"mu_d", c.mu_d},
                {"bound", to_json(c.bound)},
                {"is_togliatti_candidate", c.is_togliatti_candidate},
                {"wlp_fails_at_d_minus_1", c.wlp_fails_at_d_minus_1},
                {"kernel_dimension", c.kernel_dimension},
                {"is_gt_system", c.is_gt_system}};
}

Json to_json(const Discrepancy& d) {
    return Json{{"what", d.what}, {"expected", d.expected}, {"actual", d.actual}};
}

Json to_json(const SurfaceProfile& p) {
    return Json{{"a", p.a},
                {"b", p.b},
                {"d", p.d},
                {"gcd_ad", p.gcd_ad},
                {"gcd_bd", p.gcd_bd},
                {"a_prime", p.a_prime},
                {"b_prime", p.b_prime},
                {"d_prime", p.d_prime},
                {"d_second", p.d_second},
                {"lambda", p.lambda},
                {"mu", p.mu},
                {"theta", p.theta},
                {"mu_d", p.mu_d},
                {"degree", p.degree},
                {"codim", p.codim},
                {"cm_type", p.cm_type},
                {"reg", p.reg},
                {"discrepancy", p.discrepancy ? to_json(*p.discrepancy) : Json(nullptr)}};
}

Json to_json(const HilbertData& h) {
    Json poly = Json::array(), num = Json::array();
    for (const auto& c : h.polynomial) poly.push_back(to_json(c));
    for (const auto& c : h.series_numerator) num.push_back(to_json(c));
    return Json{{"polynomial", poly},
                {"series_numerator", num},
                {"table", h.table},
                {"discrepancy", h.discrepancy ? to_json(*h.discrepancy) : Json(nullptr)}};
}

Json to_json(const BettiTable& t) {
    Json entries = Json::object();
    for (const auto& [key, rank] : t.entries)
        entries[std::to_string(key.first) + "," + std::to_string(key.second)] = to_json(rank);
    return Json{{"mu_d", t.mu_d},
                {"c", t.c},
                {"h", t.h},
                {"case", to_string(t.which)},
                {"projective_dimension", t.projective_dimension()},
                {"regularity", t.regularity()},
                {"entries", entries}};
}

Json to_json(const GeneratorCounts& g) {
    return Json{{"quadrics", to_json(g.quadrics)}, {"cubics", to_json(g.cubics)}};
}

Json to_json(const RationalSeries& s) {
    Json num = Json::array();
    for (const auto& c : s.numerator) num.push_back(to_json(c));
    return Json{{"numerator", num}, {"denominator_power", s.denominator_power}};
}

Json to_json(const Binomial& b) { return Json::array({multiset_json(b.lhs), multiset_json(b.rhs)}); }

Json to_json(const BinomialGeneratorSet& g) {
    Json gens = Json::array(), quads = Json::array(), cubes = Json::array();
    for (const auto& v : g.generators) gens.push_back(to_json(v));
    for (const auto& b : g.quadrics) quads.push_back(to_json(b));
    for (const auto& b : g.cubics) cubes.push_back(to_json(b));
    Json out{{"generators", gens},
             {"quadric_count", g.quadric_count},
             {"cubic_count", g.cubic_count},
             {"quadrics", quads},
             {"cubics", cubes},
             {"verified_through_degree", g.verified_through_degree}};
    if (g.degree_four)
        out["degree_four"] = Json{{"ideal_dimension", g.degree_four->ideal_dimension},
                                  {"product_rank", g.degree_four->product_rank},
                                  {"no_new_generators", g.degree_four->no_new_generators()}};
    else
        out["degree_four"] = nullptr;
    return out;
}

Json to_json(const AffineSemigroup& h) {
    Json gens = Json::array();
    for (const auto& g : h.generators()) gens.push_back(to_json(g));
    return Json{{"dim", h.dimension()}, {"degree", h.degree()}, {"generators", gens}};
}

Json to_json(const Membership& m) {
    return Json{{"member", m.member},
                {"decomposition", m.decomposition ? multiset_json(*m.decomposition) : Json(nullptr)}};
}

Json to_json(const NormalityResult& n) {
    return Json{{"bound", n.bound}, {"normal_up_to_bound", n.normal_up_to_bound}, {"witness", optional_vector(n.witness)}};
}

Json to_json(const TrungReport& r) {
    return Json{{"f_indices", r.f_indices},
                {"bound", r.bound},
                {"hypothesis_ok", r.hypothesis_ok},
                {"z", r.z},
                {"status", to_string(r.status)},
                {"witness", optional_vector(r.witness)},
                {"candidates", r.candidates},
                {"saturation_hits", r.saturation_hits},
                {"h1_elements", r.h1_elements}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gtsys
