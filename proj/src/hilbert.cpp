#include "gtsys/hilbert.hpp"

#include <numeric>

namespace gtsys {

namespace {

// Enumerates y_2..y_n; (y_0, y_1) then solve a 2x2 system in closed form.
std::int64_t count_tail(const std::vector<std::int64_t>& w, std::size_t pos, std::int64_t total,
                        std::int64_t wtotal) {
    if (pos == 1) {
        const std::int64_t w0 = w[0], w1 = w[1];
        if (total < 0) return 0;
        if (w0 == w1) return w0 * total == wtotal ? total + 1 : 0;
        const std::int64_t num = wtotal - w0 * total;
        const std::int64_t den = w1 - w0;
        if (num % den != 0) return 0;
        const std::int64_t y1 = num / den;
        return (y1 >= 0 && y1 <= total) ? 1 : 0;
    }
    std::int64_t count = 0;
    for (std::int64_t y = 0; y <= total; ++y) {
        const std::int64_t rest = wtotal - w[pos] * y;
        if (rest < 0) break;
        count += count_tail(w, pos - 1, total - y, rest);
    }
    return count;
}

void require_surface(std::int64_t a, std::int64_t b, std::int64_t d) {
    if (!(0 < a && a < b && b < d))
        throw PreconditionError("surface action needs 0 < a < b < d");
    if (gcd_all({a, b, d}) != 1) throw PreconditionError("surface action needs gcd(a,b,d) = 1");
}

struct LambdaMu {
    std::int64_t g, a_prime, d_prime, lambda, mu;
};

LambdaMu lambda_mu(std::int64_t a, std::int64_t b, std::int64_t d) {
    LambdaMu r{};
    r.g = std::gcd(a, d);
    r.a_prime = a / r.g;
    r.d_prime = d / r.g;
    // a' is a unit mod d', so lambda = b / a' mod d', moved into (0, d'].
    r.lambda = mod_floor(b * mod_inverse(r.a_prime, r.d_prime), r.d_prime);
    if (r.lambda == 0) r.lambda = r.d_prime;
    r.mu = (b - r.lambda * r.a_prime) / r.d_prime;
    return r;
}

}  // namespace

std::int64_t count_system_solutions(const CyclicAction& action, std::int64_t t, std::int64_t r) {
    if (t < 0 || r < 0) return 0;
    const auto& w = action.weights();
    return count_tail(w, w.size() - 1, t * action.order(), r * action.order());
}

std::int64_t hf_by_counting(const CyclicAction& action, std::int64_t t) {
    if (t < 0) throw PreconditionError("hf_by_counting: t must be >= 0");
    std::int64_t total = 0;
    for (std::int64_t r = 0; r <= action.max_weight() * t; ++r)
        total += count_system_solutions(action, t, r);
    return total;
}

std::int64_t hf_reduced(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t t) {
    require_surface(a, b, d);
    if (t < 0) throw PreconditionError("hf_reduced: t must be >= 0");
    const auto lm = lambda_mu(a, b, d);
    // y1 + lambda k <= max(1, lambda/(a,d)) * t d bounds r by t max(lambda, (a,d)).
    const std::int64_t r_max = t * std::max(lm.lambda, lm.g);
    std::int64_t count = 0;
    for (std::int64_t r = 0; r <= r_max; ++r) {
        for (std::int64_t k = 0;; ++k) {
            const std::int64_t y1 = r * lm.d_prime - lm.lambda * k;
            if (y1 < 0) break;
            if (y1 + lm.g * k <= t * d) ++count;
        }
    }
    return count;
}

SurfaceProfile surface_profile(std::int64_t a, std::int64_t b, std::int64_t d) {
    require_surface(a, b, d);
    const auto lm = lambda_mu(a, b, d);
    SurfaceProfile p{};
    p.a = a;
    p.b = b;
    p.d = d;
    p.gcd_ad = lm.g;
    p.gcd_bd = std::gcd(b, d);
    p.a_prime = lm.a_prime;
    p.b_prime = b / p.gcd_bd;
    p.d_prime = lm.d_prime;
    p.d_second = d / p.gcd_bd;
    p.lambda = lm.lambda;
    p.mu = lm.mu;
    p.theta = lm.g + std::gcd(lm.lambda, lm.d_prime) + std::gcd(lm.lambda - lm.g, lm.d_prime);
    p.mu_d = mu_d(CyclicAction(d, {0, a, b}));
    p.degree = d;

    const std::int64_t theta_counted = 2 * p.mu_d - d - 2;
    if (theta_counted != p.theta)
        p.discrepancy = Discrepancy{"theta: 2*mu_d(counted) - d - 2 vs closed form", theta_counted,
                                    p.theta};
    // Derived fields follow the counted generator number.
    p.codim = p.mu_d - 3;
    p.cm_type = d - p.codim - 1;
    return p;
}

std::int64_t hf_closed_form(const SurfaceProfile& profile, std::int64_t t) {
    if (t < 0) throw PreconditionError("hf_closed_form: t must be >= 0");
    const Rational v = Rational(profile.d, 2) * t * t + Rational(profile.theta, 2) * t + 1;
    if (v.get_den() != 1) throw ConsistencyError("hf_closed_form: non-integral value");
    return v.get_num().get_si();
}

HilbertData hilbert_series(const SurfaceProfile& profile, std::int64_t horizon) {
    if (horizon < 1) throw PreconditionError("hilbert_series: horizon must be >= 1");
    const auto d = profile.d, theta = profile.theta;
    HilbertData h;
    h.polynomial = {Rational(d, 2), Rational(theta, 2), Rational(1)};
    for (auto& c : h.polynomial) c.canonicalize();
    if ((d + theta) % 2 != 0) {
        h.discrepancy = Discrepancy{"series numerator not integral (d + theta odd)", 0, d + theta};
    }
    h.series_numerator = {BigInt(1), BigInt((d + theta - 4) / 2), BigInt((d - theta + 2) / 2)};

    // [z^t] N(z)/(1-z)^3 = sum_k n_k binom(t - k + 2, 2).
    for (std::int64_t t = 0; t <= horizon; ++t) {
        BigInt expanded = 0;
        for (std::int64_t k = 0; k < 3; ++k) expanded += h.series_numerator[k] * binomial(t - k + 2, 2);
        const std::int64_t hf = hf_closed_form(profile, t);
        if (expanded != hf && !h.discrepancy)
            h.discrepancy = Discrepancy{"series expansion vs HF at t=" + std::to_string(t), hf,
                                        expanded.get_si()};
        h.table.push_back(hf);
    }
    return h;
}

SurfaceInvariants surface_invariants(const SurfaceProfile& profile) {
    return {profile.mu_d, profile.degree, profile.codim, profile.cm_type, profile.reg};
}

std::optional<std::int64_t> catalogue_theta(std::int64_t a, std::int64_t b, std::int64_t d) {
    if (!(0 < a && a < b && b < d) || gcd_all({a, b, d}) != 1) return std::nullopt;
    switch (d) {
        case 4:
            return 4;
        case 6:
            if ((a == 1 && (b == 2 || b == 5)) || (a == 4 && b == 5)) return 4;
            return 5;
        case 8:
            if ((a == 1 && (b == 4 || b == 5)) || (a == 3 && (b == 4 || b == 7)) || a == 4) return 5;
            return 4;
        default:
            return std::nullopt;
    }
}

}  // namespace gtsys
