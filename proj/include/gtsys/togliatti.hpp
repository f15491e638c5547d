#pragma once

// Togliatti / GT-system classification of the invariant ideal I_d.

#include <cstdint>

#include "gtsys/action.hpp"

namespace gtsys {

/// Which maximal-rank condition a multiplication map was tested for.
enum class RankMode { Injectivity, Surjectivity };

struct WlpResult {
    std::int64_t degree;            ///< source degree j of x L: (R/I_d)_j -> (R/I_d)_{j+1}
    std::int64_t source_dimension;
    std::int64_t target_dimension;
    std::int64_t rank;
    RankMode mode;
    bool fails;                     ///< map does not have maximal rank
    std::int64_t kernel_dimension;  ///< source_dimension - rank
};

struct GtClassification {
    CyclicAction action;
    std::int64_t mu_d;
    BigInt bound;  ///< binomial(d+n-1, n-1)
    bool is_togliatti_candidate;
    bool wlp_fails_at_d_minus_1;  ///< x L at degree d-1 is not injective
    std::int64_t kernel_dimension;
    bool is_gt_system;
};

/// mu_d <= binomial(d+n-1, n-1).
bool togliatti_bound_ok(const CyclicAction& action);

/// Multiplication by L = x0+...+xn between consecutive pieces of R/I_d,
/// ranked exactly. Monomials of I_d are dropped from both bases.
WlpResult wlp_fails_in_degree(const CyclicAction& action, std::int64_t j);

GtClassification classify(const CyclicAction& action);

const char* to_string(RankMode mode);

}  // namespace gtsys
