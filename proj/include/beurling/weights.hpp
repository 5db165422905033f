// Weight families on the dual of SU(n), evaluated in the log domain, together
// with the scans that verify submultiplicativity, the dimension-ratio bound
// and the exponential/polynomial domination constants.
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "beurling/lie_repr.hpp"

namespace beurling {

// One of the three standard weight families on the dual object.
//   dimension(a):           w(pi) = dim(pi)^a,            a >= 0
//   polynomial_length(a):   w(pi) = (1 + len(pi))^a,      a >= 0
//   exponential_length(b):  w(pi) = exp(len(pi)^b),       0 < b <= 1
struct WeightFamily {
    enum class Kind { dimension, polynomial_length, exponential_length };

    Kind kind = Kind::polynomial_length;
    double param = 0.0;

    static WeightFamily dimension(double alpha);
    static WeightFamily polynomial_length(double alpha);
    static WeightFamily exponential_length(double beta);
    static WeightFamily parse(const std::string& kind, double param);

    std::string to_string() const;  // "poly(2)" etc.
    std::string kind_name() const;
};

// ln w(pi_lambda); always >= 0 and finite.
double log_weight(const WeightFamily& family, const DominantWeight& lambda);

// Pluggable source of tensor decompositions so scans can run against a cache.
using TensorSource =
    std::function<TensorDecomposition(const DominantWeight&, const DominantWeight&)>;
TensorSource plain_tensor_source(const EnumerationBudget& budget = {});

struct TripleWitness {
    DominantWeight lambda;
    DominantWeight mu;
    DominantWeight nu;
};

// Extremal log-slack ln w(nu) - ln w(lambda) - ln w(mu) over every nu occurring
// in lambda (x) mu with first parts up to `bound`. Slack <= 0 is the weight
// axiom.
struct SubmultReport {
    WeightFamily family;
    int n = 0;
    int bound = 0;
    long long triples = 0;
    double worst_slack = 0.0;
    std::optional<TripleWitness> witness;
    bool pass() const { return worst_slack <= 0.0; }
};
SubmultReport submultiplicativity_scan(const WeightFamily& family, int n, int bound,
                                       const TensorSource& source = plain_tensor_source());

// Largest value of [dim(nu)/(dim(lambda) dim(mu))] / [1/(l1+1) + 1/(m1+1)]
// over the scanned triples, with the lexicographically first maximizer.
struct Condition1Report {
    int n = 0;
    int bound = 0;
    long long triples = 0;
    double empirical_c = 0.0;
    std::optional<TripleWitness> witness;
};
Condition1Report condition1_scan(int n, int bound,
                                 const TensorSource& source = plain_tensor_source());

// Constants for the exponential-vs-polynomial comparison with
// p(x) = c x^alpha - beta ln(1+x):
//   k_threshold = (beta^2 / (alpha (1 - alpha)))^(1/alpha)
//   ln_m = max p(t) - 2 min p(s) over integers in [0, 2 k_threshold]
struct ExpDominationConstants {
    double alpha = 0.0;
    double beta = 0.0;
    double c = 1.0;
    double k_threshold = 0.0;
    double ln_m = 0.0;
    long long argmax_t = 0;
    long long argmin_s = 0;
};
// Requires 0 < alpha < 1 and beta >= max(1, 6/(alpha(1-alpha))).
ExpDominationConstants exp_domination_constants(double alpha, double beta, double c = 1.0);

double exp_poly_log_gap(double alpha, double beta, double x, double c = 1.0);

// max p(t) - 2 min p(s) over integers in [0, t_max]; exposed so tests can
// check monotonicity in the range.
double exp_domination_ln_m_over(double alpha, double beta, long long t_max, double c = 1.0,
                            long long* argmax_t = nullptr, long long* argmin_s = nullptr);

// Grid check that p is nondecreasing and q(x) = p(x)/x nonincreasing on
// [k_threshold, 10 k_threshold].
struct PQMonotonicityReport {
    double alpha = 0.0;
    double beta = 0.0;
    int gridpoints = 0;
    bool pass = false;
    double first_violation_x = 0.0;  // meaningful only when !pass
    std::string violation;           // "p" or "q", empty when pass
};
PQMonotonicityReport pq_monotonicity_check(double alpha, double beta, int gridpoints);

// Checks, over every scanned decomposition, that the exponential-weight
// log-slack exceeds the polynomial-weight log-slack by at most 2 ln_m.
struct ExpDominationReport {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
    int bound = 0;
    long long triples = 0;
    double ln_m = 0.0;
    double worst_margin = 0.0;  // max over triples of lhs - 2 ln_m
    std::optional<TripleWitness> witness;
    bool pass() const { return worst_margin <= 0.0; }
};
ExpDominationReport exp_domination_check(int n, double alpha, double beta, int bound,
                                         const TensorSource& source = plain_tensor_source());

}  // namespace beurling
