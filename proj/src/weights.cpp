#include "beurling/weights.hpp"

#include <cmath>
#include <limits>

namespace beurling {

WeightFamily WeightFamily::dimension(double alpha) {
    if (alpha < 0) throw std::invalid_argument("dimension weight needs alpha >= 0");
    return {Kind::dimension, alpha};
}

WeightFamily WeightFamily::polynomial_length(double alpha) {
    if (alpha < 0) throw std::invalid_argument("polynomial weight needs alpha >= 0");
    return {Kind::polynomial_length, alpha};
}

WeightFamily WeightFamily::exponential_length(double beta) {
    if (!(beta > 0) || beta > 1)
        throw std::invalid_argument("exponential weight needs beta in (0, 1]");
    return {Kind::exponential_length, beta};
}

WeightFamily WeightFamily::parse(const std::string& kind, double param) {
    if (kind == "dimension" || kind == "dim") return dimension(param);
    if (kind == "polynomial" || kind == "poly") return polynomial_length(param);
    if (kind == "exponential" || kind == "exp") return exponential_length(param);
    throw std::invalid_argument("unknown weight family '" + kind + "'");
}

std::string WeightFamily::kind_name() const {
    switch (kind) {
        case Kind::dimension: return "dimension";
        case Kind::polynomial_length: return "polynomial";
        case Kind::exponential_length: return "exponential";
    }
    return "?";
}

std::string WeightFamily::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s(%g)", kind_name().c_str(), param);
    return buf;
}

double log_weight(const WeightFamily& family, const DominantWeight& lambda) {
    if (!lambda.is_normalized())
        throw std::invalid_argument("log_weight requires a normalized weight");
    switch (family.kind) {
        case WeightFamily::Kind::dimension:
            return family.param * log_weyl_dimension(lambda);
        case WeightFamily::Kind::polynomial_length:
            return family.param * std::log1p(static_cast<double>(lambda.first()));
        case WeightFamily::Kind::exponential_length:
            return std::pow(static_cast<double>(lambda.first()), family.param);
    }
    return 0.0;
}

TensorSource plain_tensor_source(const EnumerationBudget& budget) {
    return [budget](const DominantWeight& a, const DominantWeight& b) {
        return tensor_decompose(a, b, budget);
    };
}

namespace {

// Visits every (lambda, mu, nu) with first parts bounded and c^nu > 0,
// in lexicographic order of (lambda, mu, nu).
void for_each_triple(int n, int bound, const TensorSource& source,
                     const std::function<void(const DominantWeight&, const DominantWeight&,
                                              const DominantWeight&, long long)>& fn) {
    const auto all = enumerate_dominant(n, bound);
    for (const auto& lambda : all)
        for (const auto& mu : all) {
            const TensorDecomposition dec = source(lambda, mu);
            for (const auto& [nu, c] : dec.terms) fn(lambda, mu, nu, c);
        }
}

}  // namespace

SubmultReport submultiplicativity_scan(const WeightFamily& family, int n, int bound,
                                       const TensorSource& source) {
    SubmultReport report;
    report.family = family;
    report.n = n;
    report.bound = bound;
    report.worst_slack = -std::numeric_limits<double>::infinity();
    for_each_triple(n, bound, source,
                    [&](const DominantWeight& lambda, const DominantWeight& mu,
                        const DominantWeight& nu, long long) {
                        ++report.triples;
                        const double slack = log_weight(family, nu) - log_weight(family, lambda) -
                                             log_weight(family, mu);
                        if (slack > report.worst_slack) {
                            report.worst_slack = slack;
                            report.witness = TripleWitness{lambda, mu, nu};
                        }
                    });
    return report;
}

Condition1Report condition1_scan(int n, int bound, const TensorSource& source) {
    Condition1Report report;
    report.n = n;
    report.bound = bound;
    report.empirical_c = -std::numeric_limits<double>::infinity();
    for_each_triple(n, bound, source,
                    [&](const DominantWeight& lambda, const DominantWeight& mu,
                        const DominantWeight& nu, long long) {
                        ++report.triples;
                        const double dl = static_cast<double>(weyl_dimension(lambda));
                        const double dm = static_cast<double>(weyl_dimension(mu));
                        const double dn = static_cast<double>(weyl_dimension(nu));
                        const double denom = 1.0 / (lambda.first() + 1.0) + 1.0 / (mu.first() + 1.0);
                        const double ratio = dn / (dl * dm) / denom;
                        if (ratio > report.empirical_c) {
                            report.empirical_c = ratio;
                            report.witness = TripleWitness{lambda, mu, nu};
                        }
                    });
    return report;
}

double exp_poly_log_gap(double alpha, double beta, double x, double c) {
    return c * std::pow(x, alpha) - beta * std::log1p(x);
}

namespace {

void check_exp_domination_domain(double alpha, double beta) {
    if (!(alpha > 0) || !(alpha < 1))
        throw std::invalid_argument("exp-domination constants need alpha in (0, 1)");
    const double min_beta = std::max(1.0, 6.0 / (alpha * (1.0 - alpha)));
    if (beta < min_beta)
        throw std::invalid_argument("exp-domination constants need beta >= " +
                                    std::to_string(min_beta));
}

// (beta^2/(alpha(1-alpha)))^(1/alpha), taking the integer-exponent route when
// 1/alpha is integral so values like alpha = 1/2 come out exact.
double threshold_k(double alpha, double beta) {
    const double base = beta * beta / (alpha * (1.0 - alpha));
    const double e = 1.0 / alpha;
    const double rounded = std::round(e);
    if (std::abs(e - rounded) < 1e-12 && rounded >= 1 && rounded <= 64) {
        double r = 1.0;
        for (int i = 0; i < static_cast<int>(rounded); ++i) r *= base;
        return r;
    }
    return std::pow(base, e);
}

}  // namespace

double exp_domination_ln_m_over(double alpha, double beta, long long t_max, double c,
                            long long* argmax_t, long long* argmin_s) {
    double pmax = 0.0, pmin = 0.0;  // p(0) = 0
    long long tmax = 0, smin = 0;
    for (long long t = 1; t <= t_max; ++t) {
        const double p = exp_poly_log_gap(alpha, beta, static_cast<double>(t), c);
        if (p > pmax) {
            pmax = p;
            tmax = t;
        }
        if (p < pmin) {
            pmin = p;
            smin = t;
        }
    }
    if (argmax_t) *argmax_t = tmax;
    if (argmin_s) *argmin_s = smin;
    return pmax - 2.0 * pmin;
}

ExpDominationConstants exp_domination_constants(double alpha, double beta, double c) {
    check_exp_domination_domain(alpha, beta);
    ExpDominationConstants out;
    out.alpha = alpha;
    out.beta = beta;
    out.c = c;
    out.k_threshold = threshold_k(alpha, beta);
    const auto t_max = static_cast<long long>(std::floor(2.0 * out.k_threshold));
    out.ln_m = exp_domination_ln_m_over(alpha, beta, t_max, c, &out.argmax_t, &out.argmin_s);
    return out;
}

PQMonotonicityReport pq_monotonicity_check(double alpha, double beta, int gridpoints) {
    check_exp_domination_domain(alpha, beta);
    if (gridpoints < 2) throw std::invalid_argument("gridpoints must be >= 2");
    PQMonotonicityReport report;
    report.alpha = alpha;
    report.beta = beta;
    report.gridpoints = gridpoints;
    report.pass = true;
    const double k = threshold_k(alpha, beta);
    double prev_p = 0.0, prev_q = 0.0;
    for (int i = 0; i < gridpoints; ++i) {
        const double x = k * (1.0 + 9.0 * i / (gridpoints - 1.0));
        const double p = exp_poly_log_gap(alpha, beta, x);
        const double q = p / x;
        if (i > 0 && report.pass) {
            if (p < prev_p) {
                report.pass = false;
                report.first_violation_x = x;
                report.violation = "p";
            } else if (q > prev_q) {
                report.pass = false;
                report.first_violation_x = x;
                report.violation = "q";
            }
        }
        prev_p = p;
        prev_q = q;
    }
    return report;
}

ExpDominationReport exp_domination_check(int n, double alpha, double beta, int bound,
                                         const TensorSource& source) {
    const ExpDominationConstants constants = exp_domination_constants(alpha, beta);
    ExpDominationReport report;
    report.n = n;
    report.alpha = alpha;
    report.beta = beta;
    report.bound = bound;
    report.ln_m = constants.ln_m;
    report.worst_margin = -std::numeric_limits<double>::infinity();
    // The two log-slacks collapse to p(nu_1) - p(lambda_1) - p(mu_1).
    auto p_of = [&](const DominantWeight& w) {
        return exp_poly_log_gap(alpha, beta, static_cast<double>(w.first()));
    };
    for_each_triple(n, bound, source,
                    [&](const DominantWeight& lambda, const DominantWeight& mu,
                        const DominantWeight& nu, long long) {
                        ++report.triples;
                        const double lhs = p_of(nu) - p_of(lambda) - p_of(mu);
                        const double margin = lhs - 2.0 * constants.ln_m;
                        if (margin > report.worst_margin) {
                            report.worst_margin = margin;
                            report.witness = TripleWitness{lambda, mu, nu};
                        }
                    });
    return report;
}

}  // namespace beurling
