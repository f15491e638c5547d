#include "gtsys/semigroup.hpp"

#include <algorithm>
#include <functional>

namespace gtsys {

AffineSemigroup::AffineSemigroup(std::size_t dimension, std::vector<ExponentVector> generators)
    : dim_(dimension), gens_(std::move(generators)), degree_(0) {
    if (gens_.empty()) throw PreconditionError("AffineSemigroup: no generators");
    for (const auto& g : gens_) {
        if (g.size() != dim_) throw PreconditionError("AffineSemigroup: generator has wrong dimension");
        if (!g.is_nonnegative()) throw PreconditionError("AffineSemigroup: negative generator entry");
    }
    degree_ = gens_.front().degree();
    if (degree_ < 1) throw PreconditionError("AffineSemigroup: generators must have positive degree");
    for (const auto& g : gens_)
        if (g.degree() != degree_) throw PreconditionError("AffineSemigroup: generators are not homogeneous");
    std::sort(gens_.begin(), gens_.end(), CanonicalOrder{});
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

std::optional<std::size_t> AffineSemigroup::axis_generator(std::size_t axis) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i][axis] == degree_) return i;
    return std::nullopt;
}

bool AffineSemigroup::has_axis_multiples() const {
    for (std::size_t a = 0; a < dim_; ++a)
        if (!axis_generator(a)) return false;
    return true;
}

Lattice::Lattice(const AffineSemigroup& h) {
    const std::size_t dim = h.dimension();
    std::vector<std::vector<BigInt>> rows;
    for (const auto& g : h.generators()) {
        std::vector<BigInt> r;
        for (auto v : g.values()) r.emplace_back(static_cast<long>(v));
        rows.push_back(std::move(r));
    }
    std::size_t top = 0;
    for (std::size_t c = 0; c < dim && top < rows.size(); ++c) {
        // Euclid on column c among rows [top, end) until one nonzero remains.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[top][c].get_mpz_t());
                for (std::size_t j = c; j < dim; ++j) rows[i][j] -= q * rows[top][j];
                if (sgn(rows[i][c]) != 0) clean = false;
            }
            if (clean) break;
        }
        if (top < rows.size() && sgn(rows[top][c]) != 0) {
            if (sgn(rows[top][c]) < 0)
                for (auto& v : rows[top]) v = -v;
            std::vector<std::int64_t> narrow;
            for (const auto& v : rows[top]) {
                if (!v.fits_slong_p()) throw ConsistencyError("Lattice: basis entry exceeds 64 bits");
                narrow.push_back(v.get_si());
            }
            basis_.push_back(std::move(narrow));
            pivots_.push_back(c);
            ++top;
        }
    }
}

bool Lattice::contains(const ExponentVector& w) const {
    if (w.size() != (basis_.empty() ? w.size() : basis_.front().size())) return false;
    std::vector<std::int64_t> v = w.values();
    std::size_t k = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            const auto& row = basis_[k];
            if (v[c] % row[c] != 0) return false;
            const std::int64_t q = v[c] / row[c];
            for (std::size_t j = c; j < v.size(); ++j) v[j] -= q * row[j];
            ++k;
        } else if (v[c] != 0) {
            return false;
        }
    }
    return true;
}

std::int32_t MembershipOracle::search(const ExponentVector& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::int32_t found = kNotMember;
    const auto& gens = h_.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].divides(w)) continue;
        const ExponentVector rest = w - gens[i];
        if (rest.degree() == 0 || search(rest) != kNotMember) {
            found = static_cast<std::int32_t>(i);
            break;
        }
    }
    memo_.emplace(w, found);
    return found;
}

bool MembershipOracle::contains(const ExponentVector& w) {
    if (w.size() != h_.dimension() || !w.is_nonnegative()) return false;
    const auto deg = w.degree();
    if (deg == 0) return true;
    if (deg % h_.degree() != 0) return false;
    return search(w) != kNotMember;
}

Membership MembershipOracle::query(const ExponentVector& w) {
    if (!contains(w)) return {false, std::nullopt};
    Multiset parts;
    ExponentVector rest = w;
    while (rest.degree() > 0) {
        const auto i = static_cast<std::size_t>(search(rest));
        parts.push_back(i);
        rest -= h_.generators()[i];
    }
    std::sort(parts.begin(), parts.end());
    return {true, std::move(parts)};
}

AffineSemigroup semigroup_of_action(const CyclicAction& action) {
    return AffineSemigroup(action.variables(), invariant_monomials(action, 1).monomials);
}

namespace {

std::vector<ExponentVector> axis_vectors(std::int64_t scale) {
    return {{scale, 0, 0}, {0, scale, 0}, {0, 0, scale}};
}

// Every non-axis generator of the family must be s*step*m plus a scaled
// axis vector, with all coordinates positive.
void check_family_shape(const AffineSemigroup& h, std::int64_t step) {
    const auto g = h.degree();
    for (const auto& v : h.generators()) {
        const auto lo = std::min({v[0], v[1], v[2]});
        const bool axis = std::count(v.values().begin(), v.values().end(), 0) == 2;
        if (axis) continue;
        if (lo <= 0 || lo % step != 0)
            throw ConsistencyError("family generator " + monomial_string(v) + " has unexpected shape");
        const ExponentVector rest = v - ExponentVector{lo, lo, lo};
        const auto nonzero = std::count_if(rest.values().begin(), rest.values().end(), [](auto e) { return e != 0; });
        if (nonzero > 1 || rest.degree() != g - 3 * lo || rest.degree() % 3 != 0)
            throw ConsistencyError("family generator " + monomial_string(v) + " is not s*m + h'");
    }
}

AffineSemigroup build_family(std::int64_t k, std::int64_t steps) {
    std::vector<ExponentVector> gens = axis_vectors(3);
    gens.push_back({1, 1, 1});
    const ExponentVector shift{k, k, k};
    for (std::int64_t s = 1; s <= steps; ++s) {
        std::vector<ExponentVector> next = axis_vectors(3 * (1 + s * k));
        for (const auto& g : gens) next.push_back(g + shift);
        gens = std::move(next);
    }
    AffineSemigroup h(3, std::move(gens));
    check_family_shape(h, 1);
    return h;
}

}  // namespace

AffineSemigroup make_h3t(std::int64_t t) {
    if (t < 1) throw PreconditionError("make_h3t: t must be >= 1");
    return build_family(1, t - 1);
}

AffineSemigroup make_hk(std::int64_t k, std::int64_t t_prime) {
    if (k < 1 || t_prime < 0) throw PreconditionError("make_hk: need k >= 1 and t' >= 0");
    return build_family(k, t_prime);
}

Membership member(const AffineSemigroup& h, const ExponentVector& w) {
    MembershipOracle oracle(h);
    return oracle.query(w);
}

bool lattice_member(const AffineSemigroup& h, const ExponentVector& w) {
    return Lattice(h).contains(w);
}

namespace {

void require_orthant_cone(const AffineSemigroup& h) {
    if (!h.has_axis_multiples())
        throw UnsupportedConfiguration("saturation tests need a multiple of every coordinate axis in H");
}

// Calls visit(w) for every integer vector with coordinates >= lower and the
// given coordinate sum, in lex-descending order. Stops when visit returns false.
bool for_each_level_point(std::size_t dim, std::int64_t sum, std::int64_t lower,
                          const std::function<bool(const ExponentVector&)>& visit) {
    std::vector<std::int64_t> cur(dim, 0);
    const std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left) {
        if (pos + 1 == dim) {
            cur[pos] = left;
            return visit(ExponentVector(cur));
        }
        for (std::int64_t e = left - lower * static_cast<std::int64_t>(dim - pos - 1); e >= lower; --e) {
            cur[pos] = e;
            if (!rec(pos + 1, left - e)) return false;
        }
        return true;
    };
    if (sum < lower * static_cast<std::int64_t>(dim)) return true;
    return rec(0, sum);
}

}  // namespace

bool saturation_member(const AffineSemigroup& h, const ExponentVector& w) {
    require_orthant_cone(h);
    return w.size() == h.dimension() && w.is_nonnegative() && Lattice(h).contains(w);
}

NormalityResult is_normal_up_to(const AffineSemigroup& h, std::int64_t bound) {
    require_orthant_cone(h);
    if (bound < 0) throw PreconditionError("is_normal_up_to: bound must be >= 0");
    const Lattice lattice(h);
    MembershipOracle oracle(h);
    NormalityResult res{bound, true, std::nullopt};
    for (std::int64_t s = 0; s <= bound && res.normal_up_to_bound; ++s) {
        for_each_level_point(h.dimension(), s * h.degree(), 0, [&](const ExponentVector& w) {
            if (lattice.contains(w) && !oracle.contains(w)) {
                res.normal_up_to_bound = false;
                res.witness = w;
                return false;
            }
            return true;
        });
    }
    return res;
}

TrungReport trung_cm_check(const AffineSemigroup& h, std::int64_t bound) {
    require_orthant_cone(h);
    if (bound < 0) throw PreconditionError("trung_cm_check: bound must be >= 0");
    const auto g = h.degree();
    const auto dim = h.dimension();

    TrungReport rep{};
    rep.bound = bound;
    rep.z = g;
    rep.status = TrungStatus::VerifiedUpToBound;
    std::vector<ExponentVector> fs;
    for (std::size_t a = 0; a < dim; ++a) {
        rep.f_indices.push_back(*h.axis_generator(a));
        fs.push_back(h.generators()[rep.f_indices.back()]);
    }

    IntegerMatrix fm;
    for (const auto& f : fs) fm.append_row(std::span<const std::int64_t>(f.values()));
    const bool independent = integer_rank(fm) == fs.size();
    // z*h lies in <f> iff every coordinate z*h_a is a multiple of f_a's entry.
    bool inside = true;
    for (const auto& gen : h.generators())
        for (std::size_t a = 0; a < dim; ++a)
            if ((rep.z * gen[a]) % fs[a][a] != 0) inside = false;
    rep.hypothesis_ok = independent && inside;

    const Lattice lattice(h);
    MembershipOracle oracle(h);
    for (std::int64_t s = 0; s <= bound && !rep.witness; ++s) {
        for_each_level_point(dim, s * g, -g, [&](const ExponentVector& w) {
            ++rep.candidates;
            if (!w.is_nonnegative() || !lattice.contains(w)) return true;
            ++rep.saturation_hits;
            int hits = 0;
            for (const auto& f : fs)
                if (oracle.contains(w + f) && ++hits >= 2) break;
            if (hits < 2) return true;
            ++rep.h1_elements;
            if (oracle.contains(w)) return true;
            rep.status = TrungStatus::Counterexample;
            rep.witness = w;
            return false;
        });
    }
    return rep;
}

bool lemma_two_zero_check(std::int64_t t, std::int64_t box) {
    if (t < 1) throw PreconditionError("lemma_two_zero_check: t must be >= 1");
    const AffineSemigroup h3 = make_h3t(1);
    const AffineSemigroup h3t = make_h3t(t);
    MembershipOracle in_h3(h3), in_h3t(h3t);
    const std::int64_t step = 3 * t;
    for (std::size_t zero = 0; zero < 3; ++zero) {
        for (std::int64_t p = 1; p <= box; ++p) {
            for (std::int64_t q = 1; q <= box; ++q) {
                std::vector<std::int64_t> v(3);
                const std::size_t i = zero == 0 ? 1 : 0;
                const std::size_t j = zero == 2 ? 1 : 2;
                v[i] = p;
                v[j] = q;
                const ExponentVector w(v);
                if (!in_h3.contains(w)) continue;
                const bool expected = p % step == 0 && q % step == 0;
                if (in_h3t.contains(w) != expected) return false;
            }
        }
    }
    return true;
}

const char* to_string(TrungStatus s) {
    return s == TrungStatus::VerifiedUpToBound ? "verified-up-to-bound" : "counterexample";
}

}  // namespace gtsys
