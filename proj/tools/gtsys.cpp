// gtsys: command-line front end for the GT-system toolkit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtsys/report.hpp"
#include "gtsys/reproduce.hpp"

using namespace gtsys;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDiscrepancy = 2, kCheckFailure = 3 };

struct Output {
    bool json = false;
    std::string path;
    std::ostringstream text;
    Json doc = Json::object();
};

std::vector<std::int64_t> parse_weights(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw PreconditionError("bad weight list \"" + s + "\"");
        out.push_back(v);
    }
    if (out.empty()) throw PreconditionError("empty weight list");
    return out;
}

std::string monomial_w(const Multiset& m) {
    std::string s;
    std::size_t i = 0;
    while (i < m.size()) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!s.empty()) s += "*";
        s += "w" + std::to_string(m[i] + 1);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

std::string vec(const ExponentVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void print_trung(std::ostream& out, const TrungReport& r) {
    out << "trung check up to " << r.bound << " levels: " << to_string(r.status) << "\n";
    out << "  hypothesis_ok " << (r.hypothesis_ok ? "yes" : "no") << ", z = " << r.z << "\n";
    out << "  candidates " << r.candidates << ", in saturation " << r.saturation_hits << ", in H^1 "
        << r.h1_elements << "\n";
    if (r.witness) out << "  witness " << vec(*r.witness) << "\n";
}

int cmd_invariants(Output& o, std::int64_t d, const std::string& weights, std::int64_t horizon) {
    const CyclicAction action(d, parse_weights(weights));
    Json list = Json::array();
    o.text << "action " << action.to_string() << "\n";
    for (std::int64_t t = 1; t <= horizon; ++t) {
        const auto basis = invariant_monomials(action, t);
        list.push_back(to_json(basis));
        o.text << "degree " << t * d << ": " << basis.count() << " monomials\n";
        for (const auto& m : basis.monomials) o.text << "  " << monomial_string(m) << "\n";
    }
    o.doc = Json{{"command", "invariants"}, {"bases", list}};
    return kOk;
}

int cmd_classify(Output& o, std::int64_t d, const std::string& weights) {
    const CyclicAction action(d, parse_weights(weights));
    const auto c = classify(action);
    const auto wlp = wlp_fails_in_degree(action, d - 1);
    o.doc = Json{{"command", "classify"}, {"classification", to_json(c)}, {"wlp", to_json(wlp)}};
    o.text << "action              " << action.to_string() << "\n"
           << "mu_d                " << c.mu_d << "\n"
           << "bound               " << to_string(c.bound) << "\n"
           << "togliatti candidate " << (c.is_togliatti_candidate ? "yes" : "no") << "\n"
           << "x L in degree " << d - 1 << "     " << wlp.source_dimension << " -> " << wlp.target_dimension
           << ", rank " << wlp.rank << ", kernel " << wlp.kernel_dimension << " (" << to_string(wlp.mode) << ")\n"
           << "wlp fails at d-1    " << (c.wlp_fails_at_d_minus_1 ? "yes" : "no") << "\n"
           << "is_gt_system        " << (c.is_gt_system ? "true" : "false") << "\n";
    if (c.is_togliatti_candidate && !c.is_gt_system) {
        o.text << "FAILED: within the bound but WLP does not fail in degree d-1\n";
        return kCheckFailure;
    }
    return kOk;
}

int cmd_hilbert(Output& o, std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t horizon) {
    const auto p = surface_profile(a, b, d);
    const auto h = hilbert_series(p, horizon);
    const auto action = p.action();
    bool flagged = p.discrepancy || h.discrepancy;

    o.text << "surface (" << d << "; 0," << a << "," << b << ")\n"
           << "  (a,d) " << p.gcd_ad << "  (b,d) " << p.gcd_bd << "  a' " << p.a_prime << "  b' " << p.b_prime
           << "  d' " << p.d_prime << "  d'' " << p.d_second << "\n"
           << "  lambda " << p.lambda << "  mu " << p.mu << "  theta " << p.theta << "\n"
           << "  mu_d " << p.mu_d << "  degree " << p.degree << "  codim " << p.codim << "  cm_type "
           << p.cm_type << "  reg " << p.reg << "\n";
    o.text << "    t   counting   reduced   closed\n";
    Json rows = Json::array();
    std::vector<std::string> mismatches;
    for (std::int64_t t = 0; t <= horizon; ++t) {
        const auto c1 = hf_by_counting(action, t);
        const auto c2 = hf_reduced(a, b, d, t);
        const auto c3 = hf_closed_form(p, t);
        rows.push_back(Json{{"t", t}, {"counting", c1}, {"reduced", c2}, {"closed", c3}});
        char line[96];
        std::snprintf(line, sizeof line, "%5lld %10lld %9lld %8lld%s\n", static_cast<long long>(t),
                      static_cast<long long>(c1), static_cast<long long>(c2), static_cast<long long>(c3),
                      (c1 == c2 && c2 == c3) ? "" : "   MISMATCH");
        o.text << line;
        if (c1 != c2 || c2 != c3) mismatches.push_back("t=" + std::to_string(t));
    }
    flagged = flagged || !mismatches.empty();
    o.text << "HP(t) = " << h.polynomial[0].get_str() << " t^2 + " << h.polynomial[1].get_str() << " t + "
           << h.polynomial[2].get_str() << "\n"
           << "HS(z) = (" << h.series_numerator[0].get_str() << " + " << h.series_numerator[1].get_str() << " z + "
           << h.series_numerator[2].get_str() << " z^2) / (1 - z)^3\n";
    if (p.discrepancy) o.text << "DISCREPANCY " << p.discrepancy->what << "\n";
    if (h.discrepancy) o.text << "DISCREPANCY " << h.discrepancy->what << "\n";

    Json notes = Json::array();
    if (const auto printed = catalogue_theta(a, b, d); printed && *printed != p.theta) {
        const std::string note = "published catalogue lists theta = " + std::to_string(*printed) +
                                 ", counting gives " + std::to_string(2 * p.mu_d - d - 2);
        notes.push_back(note);
        o.text << "note: " << note << "\n";
    }
    o.doc = Json{{"command", "hilbert"},
                 {"profile", to_json(p)},
                 {"hilbert", to_json(h)},
                 {"routes", rows},
                 {"route_mismatches", mismatches},
                 {"notes", notes},
                 {"consistent", !flagged}};
    o.text << "routes " << (flagged ? "DISAGREE" : "agree") << "\n";
    return flagged ? kDiscrepancy : kOk;
}

int cmd_betti(Output& o, std::int64_t a, std::int64_t b, std::int64_t d) {
    const auto p = surface_profile(a, b, d);
    const auto t = betti_table(p);
    const auto counts = generator_counts(p);
    const auto from_betti = series_from_betti(t);
    const auto closed = closed_form_series(p);
    const bool agree = from_betti == closed && !p.discrepancy;
    o.doc = Json{{"command", "betti"},
                 {"profile", to_json(p)},
                 {"betti", to_json(t)},
                 {"generator_counts", to_json(counts)},
                 {"series_from_betti", to_json(from_betti)},
                 {"closed_form_series", to_json(closed)},
                 {"series_agree", agree}};
    o.text << "surface (" << d << "; 0," << a << "," << b << ")  mu_d " << t.mu_d << "  c " << t.c << "  h " << t.h
           << "  " << to_string(t.which) << "\n";
    o.text << "  l :";
    for (std::int64_t i = 1; i <= 2; ++i) o.text << "   i=" << i;
    o.text << "\n";
    for (std::int64_t l = 1; l <= t.c; ++l) {
        o.text << std::string(l < 10 ? 3 : 2, ' ') << l << " :";
        for (std::int64_t i = 1; i <= 2; ++i) {
            const auto s = to_string(t.at(l, i));
            o.text << std::string(s.size() < 6 ? 6 - s.size() : 1, ' ') << s;
        }
        o.text << "\n";
    }
    o.text << "quadrics " << to_string(counts.quadrics) << ", cubics " << to_string(counts.cubics) << "\n";
    o.text << "series from Betti table " << (agree ? "matches" : "DIFFERS FROM") << " the closed form\n";
    return agree ? kOk : kDiscrepancy;
}

int cmd_ideal(Output& o, std::int64_t d, const std::string& weights, bool degree_four) {
    const CyclicAction action(d, parse_weights(weights));
    const auto g = minimal_generators(action, degree_four);
    o.doc = Json{{"command", "ideal"}, {"action", to_json(action)}, {"ideal", to_json(g)}};
    o.text << "action " << action.to_string() << "\n";
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        o.text << "  w" << i + 1 << " = " << monomial_string(g.generators[i]) << "\n";
    o.text << g.quadric_count << " quadrics, " << g.cubic_count << " cubics\n";
    for (const auto* list : {&g.quadrics, &g.cubics})
        for (const auto& bn : *list) o.text << "  " << monomial_w(bn.lhs) << " - " << monomial_w(bn.rhs) << "\n";
    if (g.degree_four) {
        o.text << "degree 4: dim I_4 = " << g.degree_four->ideal_dimension << ", rank S_1 I_3 = "
               << g.degree_four->product_rank << (g.degree_four->no_new_generators() ? ", no new generators" : ", NEW GENERATORS")
               << "\n";
        if (!g.degree_four->no_new_generators()) return kDiscrepancy;
    }
    return kOk;
}

int report_semigroup(Output& o, const std::string& name, const AffineSemigroup& h, std::int64_t bound,
                     const std::vector<ExponentVector>& queries, bool expect_cm) {
    Json doc{{"command", name}, {"semigroup", to_json(h)}};
    o.text << "semigroup of degree " << h.degree() << " with " << h.generators().size() << " generators\n";
    for (const auto& g : h.generators()) o.text << "  " << vec(g) << "\n";
    Json members = Json::array();
    MembershipOracle oracle(h);
    for (const auto& w : queries) {
        const auto m = oracle.query(w);
        members.push_back(Json{{"vector", to_json(w)}, {"result", to_json(m)}});
        o.text << "member " << vec(w) << ": " << (m.member ? "yes" : "no") << "\n";
    }
    doc["membership"] = members;
    int status = kOk;
    if (h.has_axis_multiples()) {
        const auto n = is_normal_up_to(h, bound);
        const auto r = trung_cm_check(h, bound);
        doc["normality"] = to_json(n);
        doc["trung"] = to_json(r);
        o.text << "normal up to " << bound << " levels: " << (n.normal_up_to_bound ? "yes" : "no");
        if (n.witness) o.text << " (witness " << vec(*n.witness) << ")";
        o.text << "\n";
        print_trung(o.text, r);
        if (expect_cm && r.status == TrungStatus::Counterexample) status = kCheckFailure;
    } else {
        doc["normality"] = nullptr;
        doc["trung"] = nullptr;
        o.text << "no multiple of every coordinate axis among the generators; saturation tests skipped\n";
    }
    o.doc = doc;
    return status;
}

int cmd_semigroup(Output& o, const std::string& file, std::int64_t bound) {
    std::ifstream in(file);
    if (!in) throw PreconditionError("cannot open " + file);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(file + ": " + e.what());
    }
    const auto h = semigroup_from_json(j);
    std::vector<ExponentVector> queries;
    if (j.contains("queries")) {
        if (!j.at("queries").is_array()) throw PreconditionError("field \"queries\" must be an array");
        for (const auto& q : j.at("queries")) {
            if (!q.is_array()) throw PreconditionError("query must be an array of integers");
            std::vector<std::int64_t> v;
            for (const auto& e : q) {
                if (!e.is_number_integer()) throw PreconditionError("query must be an array of integers");
                v.push_back(e.get<std::int64_t>());
            }
            queries.emplace_back(std::move(v));
        }
    }
    return report_semigroup(o, "semigroup", h, bound, queries, false);
}

int cmd_verify(Output& o) {
    const auto results = reproduction_checks();
    Json rows = Json::array();
    std::size_t failed = 0;
    for (const auto& r : results) {
        rows.push_back(Json{{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}});
        o.text << (r.passed ? "PASS  " : "FAIL  ") << r.id << "  " << r.description;
        if (!r.detail.empty()) o.text << "  [" << r.detail << "]";
        o.text << "\n";
        if (!r.passed) ++failed;
    }
    o.text << results.size() - failed << "/" << results.size() << " checks passed\n";
    o.doc = Json{{"command", "verify-paper"}, {"checks", rows}, {"failed", failed}};
    return failed ? kCheckFailure : kOk;
}

void emit(const Output& o) {
    const std::string body = o.json ? render(o.doc) : o.text.str();
    if (o.path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(o.path);
    if (!out) throw PreconditionError("cannot write " + o.path);
    out << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants, Hilbert functions, resolutions and CM checks for GT-systems"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--json", out.json, "emit JSON instead of text");
    app.add_option("--out", out.path, "write the report to a file");

    std::int64_t d = 0, a = 0, b = 0, horizon = 1, bound = 6, t = 1, k = 1, t_prime = 0;
    std::string weights, file;
    bool skip_four = false;

    auto* inv = app.add_subcommand("invariants", "invariant monomials of degree t*d for t = 1..T");
    inv->add_option("d", d)->required();
    inv->add_option("weights", weights, "comma-separated weights")->required();
    inv->add_option("--t", horizon, "largest multiple of d")->check(CLI::PositiveNumber);

    auto* cls = app.add_subcommand("classify", "Togliatti bound and WLP failure in degree d-1");
    cls->add_option("d", d)->required();
    cls->add_option("weights", weights)->required();

    std::int64_t hilbert_horizon = 6;
    auto* hil = app.add_subcommand("hilbert", "profile and Hilbert function of the surface (d; 0,a,b)");
    hil->add_option("a", a)->required();
    hil->add_option("b", b)->required();
    hil->add_option("d", d)->required();
    hil->add_option("--t", hilbert_horizon, "largest t in the table")->check(CLI::PositiveNumber);

    auto* bet = app.add_subcommand("betti", "Betti table and generator counts of the surface (d; 0,a,b)");
    bet->add_option("a", a)->required();
    bet->add_option("b", b)->required();
    bet->add_option("d", d)->required();

    auto* ide = app.add_subcommand("ideal", "binomial generators of the toric ideal in degrees 2 and 3");
    ide->add_option("d", d)->required();
    ide->add_option("weights", weights)->required();
    ide->add_flag("--no-degree-four", skip_four, "skip the degree-4 rank check");

    auto* sem = app.add_subcommand("semigroup", "membership, normality and Trung report for a JSON semigroup");
    sem->add_option("file", file)->required()->check(CLI::ExistingFile);
    sem->add_option("--bound", bound, "number of degree levels searched")->check(CLI::PositiveNumber);

    auto* h3t = app.add_subcommand("h3t", "the family H_3t");
    h3t->add_option("t", t)->required()->check(CLI::PositiveNumber);
    h3t->add_option("--bound", bound)->check(CLI::PositiveNumber);

    auto* hk = app.add_subcommand("hk", "the family H^k_{3(1+t'k)}");
    hk->add_option("k", k)->required()->check(CLI::PositiveNumber);
    hk->add_option("t_prime", t_prime)->required()->check(CLI::NonNegativeNumber);
    hk->add_option("--bound", bound)->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify-paper", "run every golden-value check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    int status = kOk;
    try {
        if (*inv) status = cmd_invariants(out, d, weights, horizon);
        else if (*cls) status = cmd_classify(out, d, weights);
        else if (*hil) status = cmd_hilbert(out, a, b, d, hilbert_horizon);
        else if (*bet) status = cmd_betti(out, a, b, d);
        else if (*ide) status = cmd_ideal(out, d, weights, !skip_four);
        else if (*sem) status = cmd_semigroup(out, file, bound);
        else if (*h3t) status = report_semigroup(out, "h3t", make_h3t(t), bound, {}, true);
        else if (*hk) status = report_semigroup(out, "hk", make_hk(k, t_prime), bound, {}, true);
        else if (*ver) status = cmd_verify(out);
        if (out.json) out.doc["exit_status"] = status;
        emit(out);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedConfiguration& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kDiscrepancy;
    }
    return status;
}
