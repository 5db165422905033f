// Restriction of weights from SU(n) to the maximal torus: exact infimum
// search with certified finite bounds, plus the two-sided equivalence checks.
#pragma once

#include <optional>
#include <vector>

#include "beurling/lie_repr.hpp"
#include "beurling/weights.hpp"

namespace beurling {

// Constants in the equivalence between the restricted dimension weight and
// the polynomial weight of order (n-1):
//   c_n = 1 / ((n^2)^(n-1) 2^(n-2) prod_{i<j} (j-i)),   d_n = (n+1)^(n-1)/(n-1)!
struct EquivalenceConstants {
    int n = 0;
    double c_n = 0.0;
    double d_n = 0.0;
};
EquivalenceConstants equivalence_constants(int n);

// One-row dominant weight guaranteed to contain chi_p: sort p nonincreasing,
// then first part = sum(p) + n*|min(p)|.
DominantWeight witness_lambda(int n, const TorusCharacter& p);

// inf of the weight over every irreducible containing chi_p, attained.
struct RestrictedWeightValue {
    TorusCharacter character;
    double log_value = 0.0;
    DominantWeight minimizer;
    int search_bound = 0;  // first parts searched up to this value
};
RestrictedWeightValue restricted_weight(int n, const WeightFamily& family,
                                        const TorusCharacter& p);

// Every torus character with |p|_1 <= max_abs_sum, lexicographic order.
std::vector<TorusCharacter> enumerate_characters(int n, int max_abs_sum);

// Two-sided bound check of a restricted weight against a polynomial weight on
// the torus; margins are log-domain distances to the bounds (>= 0 means the
// bound holds).
struct RestrictionBoundReport {
    int n = 0;
    double alpha = 0.0;
    int p_range = 0;
    long long checked = 0;
    long long violations = 0;
    double worst_lower_margin = 0.0;
    double worst_upper_margin = 0.0;
    TorusCharacter worst_lower_p;
    TorusCharacter worst_upper_p;
    bool pass() const { return violations == 0; }
};

// Restricted dimension weight vs c_n^a rho_{(n-1)a} .. d_n^a rho_{(n-1)a}.
RestrictionBoundReport check_dim_restriction_bounds(int n, double alpha, int p_range);

// Restricted polynomial weight vs n^{-2a} rho_a .. (n+1)^a rho_a.
RestrictionBoundReport check_poly_restriction_bounds(int n, double alpha, int p_range);

// Restriction of the order-1 exponential weight to characters (p, 0, ..., 0):
// the log-value equals |p| exactly, by integer arithmetic on first parts.
struct ExpRestrictionReport {
    int n = 0;
    int p_range = 0;
    long long checked = 0;
    long long violations = 0;
    bool pass() const { return violations == 0; }
};
ExpRestrictionReport check_exp_restriction(int n, int p_range);

}  // namespace beurling
