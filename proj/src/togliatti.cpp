#include "gtsys/togliatti.hpp"

#include <algorithm>
#include <map>

namespace gtsys {

namespace {

void all_monomials(std::size_t pos, std::int64_t left, std::vector<std::int64_t>& cur,
                   std::vector<ExponentVector>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.emplace_back(cur);
        return;
    }
    for (std::int64_t e = left; e >= 0; --e) {
        cur[pos] = e;
        all_monomials(pos + 1, left - e, cur, out);
    }
}

// Monomial basis of (R/I)_j where I is generated by `gens`.
std::vector<ExponentVector> quotient_basis(std::size_t vars, std::int64_t j,
                                           const std::vector<ExponentVector>& gens) {
    std::vector<ExponentVector> all;
    std::vector<std::int64_t> cur(vars, 0);
    all_monomials(0, j, cur, all);
    std::erase_if(all, [&](const ExponentVector& m) {
        return std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return g.divides(m); });
    });
    return all;
}

}  // namespace

bool togliatti_bound_ok(const CyclicAction& action) {
    const auto n = static_cast<std::int64_t>(action.variables()) - 1;
    return BigInt(mu_d(action)) <= binomial(action.order() + n - 1, n - 1);
}

WlpResult wlp_fails_in_degree(const CyclicAction& action, std::int64_t j) {
    if (j < 0) throw PreconditionError("wlp_fails_in_degree: degree must be >= 0");
    const auto gens = invariant_monomials(action, 1).monomials;
    const auto vars = action.variables();
    const auto source = quotient_basis(vars, j, gens);
    const auto target = quotient_basis(vars, j + 1, gens);

    std::map<ExponentVector, std::size_t> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) target_index.emplace(target[i], i);

    // Columns are images of source monomials; the rank is the same as for
    // the transpose, so store one image per row.
    IntegerMatrix m(source.size(), target.size());
    for (std::size_t s = 0; s < source.size(); ++s) {
        for (std::size_t v = 0; v < vars; ++v) {
            ExponentVector prod = source[s];
            prod[v] += 1;
            auto it = target_index.find(prod);
            if (it != target_index.end()) m.at(s, it->second) += 1;
        }
    }

    WlpResult res{};
    res.degree = j;
    res.source_dimension = static_cast<std::int64_t>(source.size());
    res.target_dimension = static_cast<std::int64_t>(target.size());
    res.rank = static_cast<std::int64_t>(integer_rank(std::move(m)));
    res.mode = res.source_dimension <= res.target_dimension ? RankMode::Injectivity
                                                            : RankMode::Surjectivity;
    res.fails = res.rank < std::min(res.source_dimension, res.target_dimension);
    res.kernel_dimension = res.source_dimension - res.rank;
    return res;
}

GtClassification classify(const CyclicAction& action) {
    const auto n = static_cast<std::int64_t>(action.variables()) - 1;
    const auto d = action.order();
    GtClassification c{action, mu_d(action), binomial(d + n - 1, n - 1), false, false, 0, false};
    c.is_togliatti_candidate = BigInt(c.mu_d) <= c.bound;
    const auto wlp = wlp_fails_in_degree(action, d - 1);
    c.kernel_dimension = wlp.kernel_dimension;
    c.wlp_fails_at_d_minus_1 = wlp.kernel_dimension >= 1;
    c.is_gt_system = c.is_togliatti_candidate && c.wlp_fails_at_d_minus_1;
    return c;
}

const char* to_string(RankMode mode) {
    return mode == RankMode::Injectivity ? "injectivity" : "surjectivity";
}

}  // namespace gtsys
