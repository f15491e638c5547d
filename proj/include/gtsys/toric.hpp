#pragma once

// Low-degree pieces of the toric ideal I(X_d) in S = k[w_1..w_mu].
//
// A degree-j monomial of S is a multiset of j generator indices; its image
// in R is the product of the corresponding invariant monomials. Grouping
// multisets by image ("fibers") splits every graded piece of I(X_d) into
// independent blocks spanned by differences within a fiber.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gtsys/action.hpp"

namespace gtsys {

/// Sorted generator indices (0-based, into the canonical generator list).
using Multiset = std::vector<std::size_t>;

struct FiberPartition {
    std::int64_t degree;
    std::vector<ExponentVector> generators;
    /// image monomial -> multisets mapping to it, each list in lex order.
    std::map<ExponentVector, std::vector<Multiset>, CanonicalOrder> fibers;

    /// sum over fibers of (size - 1) = dim of the degree-j piece of I(X_d).
    std::int64_t excess() const;
    std::size_t multiset_count() const;
};

struct Binomial {
    Multiset lhs, rhs;
    bool operator==(const Binomial&) const = default;
};

struct DegreeFourCheck {
    std::int64_t ideal_dimension;  ///< dim I_4
    std::int64_t product_rank;     ///< dim (S_1 * I_3)_4
    bool no_new_generators() const { return ideal_dimension == product_rank; }
};

struct BinomialGeneratorSet {
    std::vector<ExponentVector> generators;  ///< invariant monomials, w_i <-> generators[i]
    std::vector<Binomial> quadrics;
    std::vector<Binomial> cubics;
    std::int64_t quadric_count;
    std::int64_t cubic_count;
    int verified_through_degree;  ///< 3, or 4 when the degree-4 check ran
    std::optional<DegreeFourCheck> degree_four;
};

/// All degree-j multisets of the mu_d generators grouped by their product.
FiberPartition fiber_partition(const CyclicAction& action, std::int64_t j);

/// binomial(mu_d + j - 1, j) - HF(X_d, j).
std::int64_t ideal_dimension(const CyclicAction& action, std::int64_t j);

/// Image of a multiset in R (sum of generator exponent vectors).
ExponentVector multiset_product(const std::vector<ExponentVector>& generators, const Multiset& m);

/// Minimal binomial generators in degrees 2 and 3. Quadrics: one spanning
/// set of fiber differences. Cubics: dim I_3 - rank(S_1 * I_2), with a
/// witness set chosen greedily in basis order within each fiber.
BinomialGeneratorSet minimal_generators(const CyclicAction& action, bool check_degree_four = true);

}  // namespace gtsys
