#include "beurling/restriction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace beurling {

namespace {

long long superfactorial(int n) {
    long long r = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r *= j - i;
    return r;
}

void check_character(int n, const TorusCharacter& p) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    if (p.size() != n - 1)
        throw std::invalid_argument("torus character " + p.to_string() + " does not match rank " +
                                    std::to_string(n));
}

}  // namespace

EquivalenceConstants equivalence_constants(int n) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    EquivalenceConstants out;
    out.n = n;
    out.c_n = 1.0 / (std::pow(static_cast<double>(n) * n, n - 1) * std::pow(2.0, n - 2) *
                     static_cast<double>(superfactorial(n)));
    double fact = 1.0;
    for (int i = 2; i < n; ++i) fact *= i;
    out.d_n = std::pow(n + 1.0, n - 1) / fact;
    return out;
}

DominantWeight witness_lambda(int n, const TorusCharacter& p) {
    check_character(n, p);
    std::vector<int> sorted = p.exponents;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    long long first = 0;
    for (int x : sorted) first += x;
    first += static_cast<long long>(n) * std::abs(sorted.back());
    std::vector<int> parts(static_cast<std::size_t>(n), 0);
    parts[0] = static_cast<int>(first);
    return DominantWeight(std::move(parts));
}

namespace {

// Smallest first part whose weights can still undercut the witness dimension:
// dim >= (l1+1)^(n-1) / (2^(n-2) sf(n)) for every dominant weight, so first
// parts beyond the cutoff cannot improve on the witness.
int dimension_search_cutoff(int n, std::int64_t witness_dim) {
    const unsigned __int128 lim = static_cast<unsigned __int128>(witness_dim) *
                                  static_cast<unsigned __int128>(superfactorial(n))
                                  << (n - 2);
    int cutoff = 0;
    auto pw = [&](long long b) {
        unsigned __int128 r = 1;
        for (int i = 0; i < n - 1; ++i) r *= static_cast<unsigned __int128>(b);
        return r;
    };
    while (pw(cutoff + 2) <= lim) ++cutoff;
    return cutoff;
}

}  // namespace

RestrictedWeightValue restricted_weight(int n, const WeightFamily& family,
                                        const TorusCharacter& p) {
    check_character(n, p);
    const DominantWeight witness = witness_lambda(n, p);

    RestrictedWeightValue out{p, 0.0, DominantWeight::zero(n), 0};

    if (family.kind == WeightFamily::Kind::dimension) {
        // The weight is monotone in the dimension; search every first part up
        // to the certified cutoff and keep the smallest dimension.
        const std::int64_t witness_dim = weyl_dimension(witness);
        const int cutoff = dimension_search_cutoff(n, witness_dim);
        out.search_bound = cutoff;
        std::int64_t best = -1;
        std::optional<DominantWeight> best_w;
        for (int first = 0; first <= cutoff; ++first) {
            for_each_with_first_part(n, first, [&](const DominantWeight& lam) {
                if (!contains_character(lam, p)) return;
                const std::int64_t d = weyl_dimension(lam);
                if (best < 0 || d < best) {
                    best = d;
                    best_w = lam;
                }
            });
        }
        if (best < 0)
            throw std::logic_error("no containing weight found below certified cutoff for " +
                                   p.to_string());
        out.log_value = family.param * log_weyl_dimension(*best_w);
        out.minimizer = *best_w;
        return out;
    }

    // Length-based families are nondecreasing in the first part, so the first
    // containing weight in lexicographic order is a minimizer.
    out.search_bound = witness.first();
    for (int first = 0; first <= witness.first(); ++first) {
        std::optional<DominantWeight> hit;
        for_each_with_first_part(n, first, [&](const DominantWeight& lam) {
            if (!hit && contains_character(lam, p)) hit = lam;
        });
        if (hit) {
            out.log_value = log_weight(family, *hit);
            out.minimizer = *hit;
            return out;
        }
    }
    throw std::logic_error("witness weight does not contain its character: " + p.to_string());
}

std::vector<TorusCharacter> enumerate_characters(int n, int max_abs_sum) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    if (max_abs_sum < 0) throw std::invalid_argument("max_abs_sum must be >= 0");
    std::vector<TorusCharacter> out;
    std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            out.emplace_back(e);
            return;
        }
        for (int v = -left; v <= left; ++v) {
            e[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - std::abs(v));
        }
        e[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, max_abs_sum);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RestrictionBoundReport run_bound_check(int n, double alpha, int p_range,
                                       const WeightFamily& family, double log_lower_const,
                                       double log_upper_const, double rho_order) {
    RestrictionBoundReport report;
    report.n = n;
    report.alpha = alpha;
    report.p_range = p_range;
    report.worst_lower_margin = std::numeric_limits<double>::infinity();
    report.worst_upper_margin = std::numeric_limits<double>::infinity();
    for (const TorusCharacter& p : enumerate_characters(n, p_range)) {
        ++report.checked;
        const double value = restricted_weight(n, family, p).log_value;
        const double log_rho = rho_order * std::log1p(static_cast<double>(p.abs_sum()));
        const double lower_margin = value - (log_lower_const + log_rho);
        const double upper_margin = (log_upper_const + log_rho) - value;
        if (lower_margin < report.worst_lower_margin) {
            report.worst_lower_margin = lower_margin;
            report.worst_lower_p = p;
        }
        if (upper_margin < report.worst_upper_margin) {
            report.worst_upper_margin = upper_margin;
            report.worst_upper_p = p;
        }
        if (lower_margin < 0 || upper_margin < 0) ++report.violations;
    }
    return report;
}

}  // namespace

RestrictionBoundReport check_dim_restriction_bounds(int n, double alpha, int p_range) {
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    const EquivalenceConstants k = equivalence_constants(n);
    return run_bound_check(n, alpha, p_range, WeightFamily::dimension(alpha),
                           alpha * std::log(k.c_n), alpha * std::log(k.d_n), (n - 1) * alpha);
}

RestrictionBoundReport check_poly_restriction_bounds(int n, double alpha, int p_range) {
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    return run_bound_check(n, alpha, p_range, WeightFamily::polynomial_length(alpha),
                           -2.0 * alpha * std::log(static_cast<double>(n)),
                           alpha * std::log(n + 1.0), alpha);
}

ExpRestrictionReport check_exp_restriction(int n, int p_range) {
    if (n < 2) throw std::invalid_argument("rank must be at least 2");
    ExpRestrictionReport report;
    report.n = n;
    report.p_range = p_range;
    const WeightFamily family = WeightFamily::exponential_length(1.0);
    for (int p = -p_range; p <= p_range; ++p) {
        ++report.checked;
        std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
        e[0] = p;
        const RestrictedWeightValue value = restricted_weight(n, family, TorusCharacter(e));
        // An order-1 exponential weight makes the log-value the minimal first
        // part; equality with |p| is exact integer arithmetic.
        if (value.minimizer.first() != std::abs(p)) ++report.violations;
    }
    return report;
}

}  // namespace beurling
