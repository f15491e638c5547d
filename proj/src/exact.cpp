#include "gtsys/exact.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace gtsys {

std::int64_t gcd_all(std::span<const std::int64_t> values) {
    if (values.empty()) throw PreconditionError("gcd_all: empty list");
    std::int64_t g = 0;
    for (auto v : values) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

std::int64_t gcd_all(std::initializer_list<std::int64_t> values) {
    return gcd_all(std::span<const std::int64_t>(values.begin(), values.size()));
}

std::int64_t floor_sum(std::int64_t m, std::int64_t n) {
    if (m < 1 || n < 1) throw PreconditionError("floor_sum: m and n must be positive");
    std::int64_t direct = 0;
    for (std::int64_t i = 1; i < n; ++i) direct += (i * m) / n;
    const std::int64_t closed = ((m - 1) * (n - 1) + std::gcd(m, n) - 1) / 2;
    if (direct != closed)
        throw ConsistencyError("floor_sum: direct sum " + std::to_string(direct) +
                               " != closed form " + std::to_string(closed));
    return direct;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
    BigInt b = binomial(n, k);
    if (!b.fits_slong_p()) throw ConsistencyError("binomial does not fit in 64 bits");
    return b.get_si();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw PreconditionError("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) throw PreconditionError("mod_inverse: argument not invertible");
    return mod_floor(old_s, m);
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    for (const auto& row : rows) {
        std::vector<BigInt> r;
        for (long v : row) r.emplace_back(v);
        append_row(r);
    }
}

void IntegerMatrix::append_row(std::span<const BigInt> row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw PreconditionError("IntegerMatrix: row length mismatch");
    entries_.insert(entries_.end(), row.begin(), row.end());
    ++rows_;
}

void IntegerMatrix::append_row(std::span<const std::int64_t> row) {
    std::vector<BigInt> r;
    r.reserve(row.size());
    for (auto v : row) r.emplace_back(static_cast<long>(v));
    append_row(r);
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntegerMatrix::scale_row(std::size_t r, const BigInt& factor) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) *= factor;
}

std::size_t integer_rank(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    BigInt prev = 1;
    BigInt tmp;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && sgn(m.at(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, rank);
        const BigInt& p = m.at(rank, c);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const BigInt lead = m.at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                // Every intermediate value is a minor of the input, so the
                // division by the previous pivot is exact.
                tmp = p * m.at(i, j) - lead * m.at(rank, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::string to_string(const BigInt& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace gtsys
