#pragma once

// Homogeneous affine semigroups: membership, the generated lattice,
// saturation, bounded normality scans, and a bounded search for violations
// of the Goto-Watanabe / Trung Cohen-Macaulay criterion.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gtsys/action.hpp"
#include "gtsys/toric.hpp"

namespace gtsys {

/// Semigroup generated by vectors that all share the coordinate sum g >= 1.
/// Generators are deduplicated and stored in canonical (lex-descending) order.
class AffineSemigroup {
public:
    AffineSemigroup(std::size_t dimension, std::vector<ExponentVector> generators);

    std::size_t dimension() const { return dim_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    std::int64_t degree() const { return degree_; }

    /// Index of the generator lying on coordinate axis `axis`, if any.
    std::optional<std::size_t> axis_generator(std::size_t axis) const;
    bool has_axis_multiples() const;

    bool operator==(const AffineSemigroup&) const = default;

private:
    std::size_t dim_;
    std::vector<ExponentVector> gens_;
    std::int64_t degree_;
};

/// The subgroup L(H) of Z^dim generated by H, kept in row-echelon form.
class Lattice {
public:
    explicit Lattice(const AffineSemigroup& h);
    bool contains(const ExponentVector& w) const;
    std::size_t rank() const { return basis_.size(); }

private:
    std::vector<std::vector<std::int64_t>> basis_;
    std::vector<std::size_t> pivots_;
};

struct Membership {
    bool member;
    std::optional<Multiset> decomposition;  ///< generator indices, sorted
};

/// Memoized depth-first membership search. One instance caches results for
/// a single semigroup (held by value); it is not meant to be shared between threads.
class MembershipOracle {
public:
    explicit MembershipOracle(AffineSemigroup h) : h_(std::move(h)) {}
    bool contains(const ExponentVector& w);
    Membership query(const ExponentVector& w);
    std::size_t cache_size() const { return memo_.size(); }

private:
    static constexpr std::int32_t kNotMember = -1;
    std::int32_t search(const ExponentVector& w);

    AffineSemigroup h_;
    // Generator index that starts a decomposition, or kNotMember.
    std::unordered_map<ExponentVector, std::int32_t, ExponentVectorHash> memo_;
};

struct NormalityResult {
    std::int64_t bound;
    bool normal_up_to_bound;
    std::optional<ExponentVector> witness;  ///< in the saturation but not in H
};

enum class TrungStatus { VerifiedUpToBound, Counterexample };

struct TrungReport {
    std::vector<std::size_t> f_indices;  ///< axis generators used as f_1..f_m
    std::int64_t bound;
    bool hypothesis_ok;
    std::int64_t z;  ///< multiplier with z*H inside <f_1..f_m>
    TrungStatus status;
    std::optional<ExponentVector> witness;
    std::int64_t candidates = 0;        ///< lattice-level candidates enumerated
    std::int64_t saturation_hits = 0;   ///< candidates in the saturation
    std::int64_t h1_elements = 0;       ///< candidates satisfying the two-f condition
};

AffineSemigroup semigroup_of_action(const CyclicAction& action);

/// H_3 = <(3,0,0),(0,3,0),(0,0,3),(1,1,1)>,
/// H_{3t} = <3t e_1, 3t e_2, 3t e_3, m + gens(H_{3(t-1)})> with m = (1,1,1).
AffineSemigroup make_h3t(std::int64_t t);

/// H^k_{3(1+t'k)} = <axis multiples, k m + gens(H^k_{3(1+(t'-1)k)})>, base H_3.
AffineSemigroup make_hk(std::int64_t k, std::int64_t t_prime);

Membership member(const AffineSemigroup& h, const ExponentVector& w);

bool lattice_member(const AffineSemigroup& h, const ExponentVector& w);

/// w in L(H) and w >= 0. Requires axis multiples in H (cone = orthant).
bool saturation_member(const AffineSemigroup& h, const ExponentVector& w);

/// Scans lattice points with coordinate sum <= bound * g, level by level
/// and lex-descending inside a level; reports the first one missing from H.
NormalityResult is_normal_up_to(const AffineSemigroup& h, std::int64_t bound);

/// Searches w in L(H) with coordinates >= -g and sum in g*{0..bound} such
/// that w is in the saturation, w + f_i and w + f_j lie in H for some i != j,
/// yet w is not in H. Absence of such w is reported as verified up to bound;
/// a found w is an unconditional counterexample.
TrungReport trung_cm_check(const AffineSemigroup& h, std::int64_t bound = 6);

/// For every w in H_3 with exactly one zero coordinate and the others in
/// 1..box: w in H_{3t} iff both nonzero coordinates are multiples of 3t.
bool lemma_two_zero_check(std::int64_t t, std::int64_t box);

const char* to_string(TrungStatus s);

}  // namespace gtsys
