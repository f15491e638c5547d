#pragma once

// Graded Betti numbers of GT-surfaces from the closed-form resolutions, and
// the consistency checks that tie them back to the Hilbert series.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gtsys/hilbert.hpp"

namespace gtsys {

enum class ResolutionCase { ThetaThree, ThetaAtLeastFour };

/// b_{l,i} is the rank of the free module S(-(l+i)) in homological degree l.
/// Only nonzero entries are stored.
struct BettiTable {
    std::int64_t mu_d;
    std::int64_t c;  ///< codimension = projective dimension
    std::int64_t h;  ///< cm_type - 1
    ResolutionCase which;
    std::map<std::pair<std::int64_t, std::int64_t>, BigInt> entries;

    BigInt at(std::int64_t l, std::int64_t i) const;
    std::int64_t projective_dimension() const;
    /// max (l + i) - l over nonzero entries, plus one.
    std::int64_t regularity() const;
};

struct GeneratorCounts {
    BigInt quadrics;
    BigInt cubics;
    bool operator==(const GeneratorCounts&) const = default;
};

struct FiberBetti {
    BigInt binomial_minus_hf;  ///< binom(mu_d + i, i + 1) - HF(X_d, i + 1)
    BigInt fiber_sum;          ///< sum over degree-(i+1) fibers of (size - 1)
    bool agree() const { return binomial_minus_hf == fiber_sum; }
};

/// N(z) / (1 - z)^k with integer coefficients, lowest degree first.
struct RationalSeries {
    std::vector<BigInt> numerator;
    std::int64_t denominator_power;

    /// Divides out (1 - z) while N(1) = 0.
    RationalSeries reduced() const;
    bool operator==(const RationalSeries&) const = default;
};

BettiTable betti_table(const SurfaceProfile& profile);

GeneratorCounts generator_counts(const SurfaceProfile& profile);

/// Both sides of the first-Betti-number identity in degree i + 1. Throws
/// ConsistencyError if they differ.
FiberBetti first_betti_via_fibers(const CyclicAction& action, std::int64_t i);

/// (1 + sum (-1)^l b_{l,i} z^{l+i}) / (1 - z)^{mu_d}, reduced.
RationalSeries series_from_betti(const BettiTable& table);

/// The closed-form Hilbert series as a RationalSeries, reduced.
RationalSeries closed_form_series(const SurfaceProfile& profile);

const char* to_string(ResolutionCase c);

}  // namespace gtsys
