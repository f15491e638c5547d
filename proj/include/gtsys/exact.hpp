#pragma once

// Exact integer primitives: gcd chains, big binomials, the floor-sum identity
// and fraction-free rank of integer matrices. Nothing here touches floating
// point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gtsys {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for inputs the library deliberately does not handle (e.g.
/// saturation tests for semigroups whose cone is not the orthant).
class UnsupportedConfiguration : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when two routes that must agree do not. Carries both values.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

std::int64_t gcd_all(std::span<const std::int64_t> values);
std::int64_t gcd_all(std::initializer_list<std::int64_t> values);

/// sum_{i=1}^{n-1} floor(i*m/n), checked against ((m-1)(n-1) + gcd(m,n) - 1)/2.
std::int64_t floor_sum(std::int64_t m, std::int64_t n);

/// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Same, narrowed to int64 (throws ConsistencyError on overflow).
std::int64_t binomial_i64(std::int64_t n, std::int64_t k);

/// Modular inverse of a mod m for gcd(a, m) = 1, result in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Euclidean remainder in [0, m).
constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    /// Appends a row; the first row fixes the column count when cols() == 0.
    void append_row(std::span<const BigInt> row);
    void append_row(std::span<const std::int64_t> row);

    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t r, const BigInt& factor);

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

/// Rank over Q by Bareiss fraction-free elimination. Pivot: first nonzero
/// entry in the current column, scanning rows top-down.
std::size_t integer_rank(IntegerMatrix m);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace gtsys
