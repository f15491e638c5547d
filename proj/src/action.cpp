#include "gtsys/action.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace gtsys {

std::int64_t ExponentVector::degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

bool ExponentVector::is_nonnegative() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e >= 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
    if (o.size() != size()) throw PreconditionError("ExponentVector: dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i) exps_[i] += o.exps_[i];
    return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
    if (o.size() != size()) throw PreconditionError("ExponentVector: dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i) exps_[i] -= o.exps_[i];
    return *this;
}

ExponentVector operator*(std::int64_t s, ExponentVector v) {
    for (auto& e : v.exps_) e *= s;
    return v;
}

std::string monomial_string(const ExponentVector& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        out << 'x' << i;
        if (v[i] != 1) out << '^' << v[i];
    }
    return first ? "1" : out.str();
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto e : v.values()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

CyclicAction::CyclicAction(std::int64_t order, std::vector<std::int64_t> weights)
    : order_(order), weights_(std::move(weights)) {
    if (order_ < 2) throw PreconditionError("CyclicAction: order must be >= 2");
    if (weights_.size() < 2) throw PreconditionError("CyclicAction: need at least two weights");
    for (auto& w : weights_) w = mod_floor(w, order_);
    std::vector<std::int64_t> all = weights_;
    all.push_back(order_);
    if (gcd_all(all) != 1)
        throw PreconditionError("CyclicAction: gcd of weights and order must be 1");
}

std::int64_t CyclicAction::max_weight() const {
    return *std::max_element(weights_.begin(), weights_.end());
}

CyclicAction CyclicAction::sorted() const {
    auto w = weights_;
    std::sort(w.begin(), w.end());
    return CyclicAction(order_, std::move(w));
}

std::string CyclicAction::to_string() const {
    std::ostringstream out;
    out << '(' << order_ << ';';
    for (std::size_t i = 0; i < weights_.size(); ++i) out << (i ? "," : "") << weights_[i];
    out << ')';
    return out.str();
}

bool is_invariant(const CyclicAction& action, const ExponentVector& v) {
    if (v.size() != action.variables())
        throw PreconditionError("is_invariant: exponent vector has wrong length");
    std::int64_t r = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        r = mod_floor(r + action.weights()[i] * mod_floor(v[i], action.order()), action.order());
    return r == 0;
}

namespace {

// Fills exponents for variables [pos, n) with remaining degree `left` and
// running residue, emitting invariant tuples in lex-descending order.
void enumerate_invariants(const CyclicAction& action, std::size_t pos, std::int64_t left,
                          std::int64_t residue, std::vector<std::int64_t>& cur,
                          std::vector<ExponentVector>& out) {
    const auto d = action.order();
    const auto& w = action.weights();
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        if (mod_floor(residue + w[pos] * left, d) == 0) out.emplace_back(cur);
        return;
    }
    for (std::int64_t e = left; e >= 0; --e) {
        cur[pos] = e;
        enumerate_invariants(action, pos + 1, left - e, mod_floor(residue + w[pos] * e, d), cur, out);
    }
}

}  // namespace

InvariantBasis invariant_monomials(const CyclicAction& action, std::int64_t t) {
    if (t < 1) throw PreconditionError("invariant_monomials: t must be >= 1");
    InvariantBasis basis{action, t, {}};
    std::vector<std::int64_t> cur(action.variables(), 0);
    enumerate_invariants(action, 0, t * action.order(), 0, cur, basis.monomials);
    return basis;
}

std::int64_t mu_d(const CyclicAction& action) {
    return static_cast<std::int64_t>(invariant_monomials(action, 1).count());
}

namespace {

// Finds b <= v componentwise with |b| = d and sum w_i b_i == 0 mod d.
// reach[i][c][r]: the first i variables can contribute c elements with residue r.
std::optional<ExponentVector> zero_sum_part(const CyclicAction& action, const ExponentVector& v) {
    const auto d = action.order();
    const auto n = action.variables();
    const auto& w = action.weights();
    const auto idx = [d](std::size_t c, std::int64_t r) { return c * static_cast<std::size_t>(d) + r; };
    const std::size_t layer = static_cast<std::size_t>((d + 1) * d);
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(layer, 0));
    reach[0][idx(0, 0)] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t cap = std::min<std::int64_t>(v[i], d);
        for (std::int64_t c = 0; c <= d; ++c)
            for (std::int64_t r = 0; r < d; ++r) {
                if (!reach[i][idx(c, r)]) continue;
                for (std::int64_t b = 0; b <= cap && c + b <= d; ++b)
                    reach[i + 1][idx(c + b, mod_floor(r + w[i] * b, d))] = 1;
            }
    }
    if (!reach[n][idx(d, 0)]) return std::nullopt;
    // Walk back from the last variable taking as few copies as possible, so
    // lower-index variables absorb as much of the part as they can.
    std::vector<std::int64_t> part(n, 0);
    std::int64_t c = d, r = 0;
    for (std::size_t i = n; i-- > 0;) {
        const std::int64_t cap = std::min<std::int64_t>(v[i], d);
        for (std::int64_t b = 0; b <= std::min(cap, c); ++b) {
            const std::int64_t pr = mod_floor(r - w[i] * b, d);
            if (reach[i][idx(c - b, pr)]) {
                part[i] = b;
                c -= b;
                r = pr;
                break;
            }
        }
    }
    return ExponentVector(std::move(part));
}

}  // namespace

std::vector<ExponentVector> egz_factor(const CyclicAction& action, const ExponentVector& v) {
    const auto d = action.order();
    if (v.size() != action.variables() || !v.is_nonnegative())
        throw PreconditionError("egz_factor: not an exponent vector for this action");
    if (v.degree() == 0 || v.degree() % d != 0)
        throw PreconditionError("egz_factor: degree is not a positive multiple of d");
    if (!is_invariant(action, v)) throw PreconditionError("egz_factor: monomial is not invariant");

    std::vector<ExponentVector> parts;
    ExponentVector rest = v;
    while (rest.degree() > d) {
        auto part = zero_sum_part(action, rest);
        if (!part) throw ConsistencyError("egz_factor: no zero-sum subsequence of length d in " +
                                          monomial_string(rest));
        rest -= *part;
        parts.push_back(std::move(*part));
    }
    parts.push_back(std::move(rest));
    return parts;
}

}  // namespace gtsys
