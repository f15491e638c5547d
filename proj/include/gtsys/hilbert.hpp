#pragma once

// Hilbert functions of GT-varieties. Three independent routes for surfaces
// (direct counting, the reduced two-equation system, the closed form in
// theta) plus counting for any number of variables.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtsys/action.hpp"

namespace gtsys {

/// Two computations of the same quantity that disagree.
struct Discrepancy {
    std::string what;
    std::int64_t expected;  ///< value from the authoritative (counting) route
    std::int64_t actual;    ///< value from the formula route
};

/// Scalars attached to the surface action (d; 0, a, b).
///
/// lambda and mu are the unique integers with 0 < lambda <= d' and
/// b = lambda*a' + mu*d'. theta is the closed-form linear coefficient; the
/// counted number of degree-d invariants is kept alongside it and any
/// disagreement is carried in `discrepancy` rather than thrown.
struct SurfaceProfile {
    std::int64_t a, b, d;
    std::int64_t gcd_ad, gcd_bd;
    std::int64_t a_prime, b_prime;  ///< a/(a,d), b/(b,d)
    std::int64_t d_prime, d_second; ///< d/(a,d), d/(b,d)
    std::int64_t lambda, mu;
    std::int64_t theta;
    std::int64_t mu_d;          ///< counted
    std::int64_t degree;        ///< = d
    std::int64_t codim;         ///< (d + theta - 4) / 2
    std::int64_t cm_type;       ///< (d - theta + 2) / 2
    std::int64_t reg = 3;
    std::optional<Discrepancy> discrepancy;

    CyclicAction action() const { return CyclicAction(d, {0, a, b}); }
};

struct HilbertData {
    /// HP(t) = c2 t^2 + c1 t + c0.
    std::array<Rational, 3> polynomial;
    /// HS(z) = (n0 + n1 z + n2 z^2) / (1 - z)^3.
    std::array<BigInt, 3> series_numerator;
    std::vector<std::int64_t> table;  ///< HF(0..T)
    std::optional<Discrepancy> discrepancy;
};

struct SurfaceInvariants {
    std::int64_t mu_d, degree, codim, cm_type, reg;
};

/// |(*)_{t,r}|: nonnegative solutions of y0+..+yn = t d, w.y = r d.
std::int64_t count_system_solutions(const CyclicAction& action, std::int64_t t, std::int64_t r);

/// HF(X_d, t) = sum_{r=0}^{max_w t} |(*)_{t,r}|.
std::int64_t hf_by_counting(const CyclicAction& action, std::int64_t t);

/// Counts the reduced systems y0 + y1 + k = t d, y1 + lambda k = r d' with
/// y2 = (a,d) k and y1 + y2 <= t d.
std::int64_t hf_reduced(std::int64_t a, std::int64_t b, std::int64_t d, std::int64_t t);

/// Throws PreconditionError unless 0 < a < b < d and gcd(a,b,d) = 1.
SurfaceProfile surface_profile(std::int64_t a, std::int64_t b, std::int64_t d);

/// d/2 t^2 + theta/2 t + 1, evaluated exactly.
std::int64_t hf_closed_form(const SurfaceProfile& profile, std::int64_t t);

HilbertData hilbert_series(const SurfaceProfile& profile, std::int64_t horizon = 6);

SurfaceInvariants surface_invariants(const SurfaceProfile& profile);

/// The linear coefficient theta as printed in the published d = 4, 6, 8
/// catalogue, when (a, b, d) is covered by it.
std::optional<std::int64_t> catalogue_theta(std::int64_t a, std::int64_t b, std::int64_t d);

}  // namespace gtsys
