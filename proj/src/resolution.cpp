#include "gtsys/resolution.hpp"

#include <algorithm>

#include "gtsys/toric.hpp"

namespace gtsys {

namespace {

void trim(std::vector<BigInt>& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

}  // namespace

BigInt BettiTable::at(std::int64_t l, std::int64_t i) const {
    auto it = entries.find({l, i});
    return it == entries.end() ? BigInt(0) : it->second;
}

std::int64_t BettiTable::projective_dimension() const {
    std::int64_t pd = 0;
    for (const auto& [key, rank] : entries) pd = std::max(pd, key.first);
    return pd;
}

std::int64_t BettiTable::regularity() const {
    std::int64_t reg = 0;
    for (const auto& [key, rank] : entries) reg = std::max(reg, key.second);
    return reg + 1;
}

BettiTable betti_table(const SurfaceProfile& profile) {
    BettiTable t{};
    t.mu_d = profile.mu_d;
    t.c = profile.codim;
    t.h = profile.cm_type - 1;
    const std::int64_t theta = t.c - t.h + 2;
    const std::int64_t c = t.c, h = t.h;
    const auto put = [&t](std::int64_t l, std::int64_t i, BigInt v) {
        if (sgn(v) != 0) t.entries[{l, i}] = std::move(v);
    };
    if (theta == 3) {
        t.which = ResolutionCase::ThetaThree;
        for (std::int64_t l = 1; l <= c - 1; ++l) put(l, 1, l * binomial(c, l + 1));
        for (std::int64_t l = 1; l <= c; ++l) put(l, 2, l * binomial(c, l));
    } else {
        t.which = ResolutionCase::ThetaAtLeastFour;
        for (std::int64_t l = 1; l <= c - h - 1; ++l)
            put(l, 1, l * binomial(c, l + 1) + (c - h - l) * binomial(c, l - 1));
        for (std::int64_t l = std::max<std::int64_t>(1, c - h); l <= c - 1; ++l) put(l, 1, l * binomial(c, l + 1));
        for (std::int64_t l = std::max<std::int64_t>(1, c - h); l <= c; ++l)
            put(l, 2, (l - c + h + 1) * binomial(c, l));
    }
    return t;
}

GeneratorCounts generator_counts(const SurfaceProfile& profile) {
    const std::int64_t m = profile.mu_d;
    const std::int64_t theta = 2 * m - profile.d - 2;
    if (theta == 3) return {binomial(m - 3, 2), BigInt(m - 3)};
    return {binomial(m - 3, 2) + 2 * (m - 3) - profile.d + 1, BigInt(0)};
}

FiberBetti first_betti_via_fibers(const CyclicAction& action, std::int64_t i) {
    if (i < 1) throw PreconditionError("first_betti_via_fibers: i must be >= 1");
    FiberBetti r;
    r.binomial_minus_hf = binomial(mu_d(action) + i, i + 1) - hf_by_counting(action, i + 1);
    r.fiber_sum = fiber_partition(action, i + 1).excess();
    if (!r.agree())
        throw ConsistencyError("first Betti number: binomial-minus-HF " + to_string(r.binomial_minus_hf) +
                               " != fiber sum " + to_string(r.fiber_sum));
    return r;
}

RationalSeries RationalSeries::reduced() const {
    RationalSeries r = *this;
    trim(r.numerator);
    while (r.denominator_power > 0 && !r.numerator.empty()) {
        BigInt at_one = 0;
        for (const auto& c : r.numerator) at_one += c;
        if (sgn(at_one) != 0) break;
        // N = (1 - z) Q  =>  q_k = n_k + q_{k-1}.
        std::vector<BigInt> q(r.numerator.size() - 1);
        BigInt acc = 0;
        for (std::size_t k = 0; k < q.size(); ++k) q[k] = acc += r.numerator[k];
        r.numerator = std::move(q);
        trim(r.numerator);
        --r.denominator_power;
    }
    return r;
}

RationalSeries series_from_betti(const BettiTable& table) {
    RationalSeries s;
    s.numerator.assign(static_cast<std::size_t>(table.c + 3), BigInt(0));
    s.numerator[0] = 1;
    for (const auto& [key, rank] : table.entries) {
        const auto [l, i] = key;
        const auto deg = static_cast<std::size_t>(l + i);
        if (deg >= s.numerator.size()) s.numerator.resize(deg + 1);
        if (l % 2 == 0) s.numerator[deg] += rank;
        else s.numerator[deg] -= rank;
    }
    s.denominator_power = table.mu_d;
    return s.reduced();
}

RationalSeries closed_form_series(const SurfaceProfile& profile) {
    const auto h = hilbert_series(profile, 1);
    return RationalSeries{{h.series_numerator.begin(), h.series_numerator.end()}, 3}.reduced();
}

const char* to_string(ResolutionCase c) {
    return c == ResolutionCase::ThetaThree ? "theta=3" : "theta>=4";
}

}  // namespace gtsys
