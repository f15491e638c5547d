#pragma once

// Diagonal cyclic group actions on k[x0..xn] and their invariant monomials.
//
// The action of order d with weights (w0..wn) sends x_i to e^{w_i} x_i for a
// primitive d-th root of unity e. A monomial x^a is invariant exactly when
// sum_i w_i a_i == 0 (mod d), so everything below is residue arithmetic.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gtsys/exact.hpp"

namespace gtsys {

/// Exponent tuple of a monomial (or an element of an affine semigroup).
/// Coordinates may be negative when the vector is used as a lattice point.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {}
    ExponentVector(std::initializer_list<std::int64_t> exps) : exps_(exps) {}

    std::size_t size() const { return exps_.size(); }
    std::int64_t operator[](std::size_t i) const { return exps_[i]; }
    std::int64_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::int64_t>& values() const { return exps_; }

    std::int64_t degree() const;
    bool is_nonnegative() const;
    /// Componentwise <=.
    bool divides(const ExponentVector& other) const;

    ExponentVector& operator+=(const ExponentVector& o);
    ExponentVector& operator-=(const ExponentVector& o);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
    friend ExponentVector operator*(std::int64_t s, ExponentVector v);

    auto operator<=>(const ExponentVector&) const = default;
    bool operator==(const ExponentVector&) const = default;

private:
    std::vector<std::int64_t> exps_;
};

/// Canonical order: lexicographic descending on the exponent tuple.
struct CanonicalOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return a > b; }
};

/// Renders x0^2*x1*x2^3 style text ("1" for the zero vector).
std::string monomial_string(const ExponentVector& v);

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& v) const noexcept;
};

/// The group <diag(e^{w0}, ..., e^{wn})> of order d. Weights are stored
/// reduced mod d in the order given (not sorted).
class CyclicAction {
public:
    /// Throws PreconditionError unless d >= 2, at least two weights, and
    /// gcd(w0..wn, d) == 1.
    CyclicAction(std::int64_t order, std::vector<std::int64_t> weights);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::size_t variables() const { return weights_.size(); }
    std::int64_t max_weight() const;

    /// Same group with weights sorted ascending (permutes the variables).
    CyclicAction sorted() const;

    std::string to_string() const;
    bool operator==(const CyclicAction&) const = default;

private:
    std::int64_t order_;
    std::vector<std::int64_t> weights_;
};

/// Degree-(t*d) invariant monomials, canonically ordered.
struct InvariantBasis {
    CyclicAction action;
    std::int64_t t;
    std::vector<ExponentVector> monomials;

    std::size_t count() const { return monomials.size(); }
};

bool is_invariant(const CyclicAction& action, const ExponentVector& v);

InvariantBasis invariant_monomials(const CyclicAction& action, std::int64_t t);

/// Number of degree-d invariant monomials (generators of I_d).
std::int64_t mu_d(const CyclicAction& action);

/// Splits a degree-(t*d) invariant monomial into t invariant monomials of
/// degree d (zero-sum subsequence search, guaranteed by Erdos-Ginzburg-Ziv).
/// Parts are returned in the order they were extracted.
std::vector<ExponentVector> egz_factor(const CyclicAction& action, const ExponentVector& v);

}  // namespace gtsys
