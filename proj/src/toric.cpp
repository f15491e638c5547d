#include "gtsys/toric.hpp"

#include <algorithm>
#include <numeric>

#include "gtsys/hilbert.hpp"

namespace gtsys {

namespace {

void enumerate_multisets(std::size_t count, std::size_t size, std::size_t start, Multiset& cur,
                         std::vector<Multiset>& out) {
    if (cur.size() == size) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < count; ++i) {
        cur.push_back(i);
        enumerate_multisets(count, size, i, cur, out);
        cur.pop_back();
    }
}

Multiset with_index(Multiset m, std::size_t v) {
    m.insert(std::upper_bound(m.begin(), m.end(), v), v);
    return m;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

// Position of each multiset of a partition: fiber ordinal and column within it.
struct FiberIndex {
    std::vector<const std::vector<Multiset>*> fibers;
    std::map<Multiset, std::pair<std::size_t, std::size_t>> where;

    explicit FiberIndex(const FiberPartition& p) {
        for (const auto& [image, members] : p.fibers) {
            for (std::size_t c = 0; c < members.size(); ++c) where.emplace(members[c], std::pair{fibers.size(), c});
            fibers.push_back(&members);
        }
    }
};

// One spanning set of the degree-j piece: first member minus each other one.
std::vector<Binomial> spanning_differences(const FiberPartition& p) {
    std::vector<Binomial> out;
    for (const auto& [image, members] : p.fibers)
        for (std::size_t k = 1; k < members.size(); ++k) out.push_back({members[0], members[k]});
    return out;
}

// Rows w_v * b for every variable v and every b in `lower`, bucketed by the
// fiber of the next degree they land in.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> product_rows(
    const std::vector<Binomial>& lower, std::size_t variables, const FiberIndex& upper) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rows(upper.fibers.size());
    for (const auto& b : lower) {
        for (std::size_t v = 0; v < variables; ++v) {
            const auto& [fl, cl] = upper.where.at(with_index(b.lhs, v));
            const auto& [fr, cr] = upper.where.at(with_index(b.rhs, v));
            if (fl != fr) throw ConsistencyError("product of a binomial left its fiber");
            rows[fl].emplace_back(cl, cr);
        }
    }
    return rows;
}

IntegerMatrix difference_matrix(const std::vector<std::pair<std::size_t, std::size_t>>& rows,
                                std::size_t cols) {
    IntegerMatrix m(0, 0);
    std::vector<BigInt> row(cols);
    for (const auto& [plus, minus] : rows) {
        std::fill(row.begin(), row.end(), BigInt(0));
        row[plus] += 1;
        row[minus] -= 1;
        m.append_row(row);
    }
    return m;
}

std::int64_t total_product_rank(const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& rows,
                                const FiberIndex& upper) {
    std::int64_t rank = 0;
    for (std::size_t f = 0; f < upper.fibers.size(); ++f) {
        if (rows[f].empty()) continue;
        rank += static_cast<std::int64_t>(integer_rank(difference_matrix(rows[f], upper.fibers[f]->size())));
    }
    return rank;
}

}  // namespace

std::int64_t FiberPartition::excess() const {
    std::int64_t e = 0;
    for (const auto& [image, members] : fibers) e += static_cast<std::int64_t>(members.size()) - 1;
    return e;
}

std::size_t FiberPartition::multiset_count() const {
    std::size_t n = 0;
    for (const auto& [image, members] : fibers) n += members.size();
    return n;
}

ExponentVector multiset_product(const std::vector<ExponentVector>& generators, const Multiset& m) {
    if (generators.empty()) throw PreconditionError("multiset_product: no generators");
    ExponentVector p(std::vector<std::int64_t>(generators.front().size(), 0));
    for (auto i : m) p += generators.at(i);
    return p;
}

FiberPartition fiber_partition(const CyclicAction& action, std::int64_t j) {
    if (j < 1) throw PreconditionError("fiber_partition: degree must be >= 1");
    FiberPartition p{j, invariant_monomials(action, 1).monomials, {}};
    std::vector<Multiset> all;
    Multiset cur;
    enumerate_multisets(p.generators.size(), static_cast<std::size_t>(j), 0, cur, all);
    for (auto& m : all) p.fibers[multiset_product(p.generators, m)].push_back(std::move(m));
    return p;
}

std::int64_t ideal_dimension(const CyclicAction& action, std::int64_t j) {
    if (j < 0) throw PreconditionError("ideal_dimension: degree must be >= 0");
    return binomial_i64(mu_d(action) + j - 1, j) - hf_by_counting(action, j);
}

BinomialGeneratorSet minimal_generators(const CyclicAction& action, bool check_degree_four) {
    BinomialGeneratorSet out{};
    const auto deg2 = fiber_partition(action, 2);
    const auto deg3 = fiber_partition(action, 3);
    out.generators = deg2.generators;
    const std::size_t vars = out.generators.size();

    out.quadrics = spanning_differences(deg2);
    out.quadric_count = ideal_dimension(action, 2);
    if (out.quadric_count != static_cast<std::int64_t>(out.quadrics.size()))
        throw ConsistencyError("quadric span size differs from dim I_2");

    const FiberIndex idx3(deg3);
    const auto rows3 = product_rows(out.quadrics, vars, idx3);
    out.cubic_count = ideal_dimension(action, 3) - total_product_rank(rows3, idx3);

    // Greedy completion: a set of differences e_u - e_v spans exactly the
    // classes of the graph they define, so extend by first-minus-member
    // whenever that member is still in another component.
    for (std::size_t f = 0; f < idx3.fibers.size(); ++f) {
        const auto& members = *idx3.fibers[f];
        if (members.size() < 2) continue;
        UnionFind uf(members.size());
        for (const auto& [a, b] : rows3[f]) uf.unite(a, b);
        auto rows = rows3[f];
        for (std::size_t k = 1; k < members.size(); ++k) {
            if (uf.find(k) == uf.find(0)) continue;
            uf.unite(k, 0);
            out.cubics.push_back({members[0], members[k]});
            rows.emplace_back(0, k);
        }
        if (integer_rank(difference_matrix(rows, members.size())) != members.size() - 1)
            throw ConsistencyError("cubic witnesses do not complete the degree-3 fiber");
    }
    if (out.cubic_count != static_cast<std::int64_t>(out.cubics.size()))
        throw ConsistencyError("cubic witness count differs from dim I_3 - rank(S_1 I_2)");

    out.verified_through_degree = 3;
    if (check_degree_four) {
        const auto deg4 = fiber_partition(action, 4);
        const FiberIndex idx4(deg4);
        const auto rows4 = product_rows(spanning_differences(deg3), vars, idx4);
        out.degree_four = DegreeFourCheck{ideal_dimension(action, 4), total_product_rank(rows4, idx4)};
        out.verified_through_degree = 4;
    }
    return out;
}

}  // namespace gtsys
