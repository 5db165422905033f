#include <algorithm>
#include <cmath>

#include "beurling/restriction.hpp"
#include "doctest.h"

using namespace beurling;

namespace {
TorusCharacter tc(std::vector<int> e) { return TorusCharacter(std::move(e)); }

// Direct infimum over a generous window, independent of the certified-cutoff
// search path.
double brute_force_restricted(int n, const WeightFamily& family, const TorusCharacter& p,
                              int window) {
    double best = std::numeric_limits<double>::infinity();
    for_each_dominant(n, window, [&](const DominantWeight& lam) {
        if (!contains_character(lam, p)) return;
        best = std::min(best, log_weight(family, lam));
    });
    return best;
}
}  // namespace

TEST_CASE("witness lambda instantiates the one-row construction") {
    CHECK(witness_lambda(3, tc({0, 0})).first() == 0);
    CHECK(witness_lambda(3, tc({2, 1})).first() == 6);  // 3 + 3*1
    for (int p = 0; p <= 5; ++p) CHECK(witness_lambda(2, tc({p})).first() == 3 * p);
    CHECK(witness_lambda(2, tc({-4})).first() == 4);  // -4 + 2*4
    for (int p1 = -4; p1 <= 4; ++p1)
        for (int p2 = -4; p2 <= 4; ++p2) {
            const TorusCharacter p = tc({p1, p2});
            CHECK(contains_character(witness_lambda(3, p), p));
        }
}

TEST_CASE("restricted dimension weight on su(2) is |p|+1") {
    const WeightFamily family = WeightFamily::dimension(1.0);
    for (int p = -6; p <= 6; ++p) {
        const auto value = restricted_weight(2, family, tc({p}));
        CHECK(value.log_value == doctest::Approx(std::log(std::abs(p) + 1.0)).epsilon(1e-14));
        CHECK(value.minimizer == DominantWeight({std::abs(p), 0}));
    }
}

TEST_CASE("restricted weight of the trivial character is one") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& family :
             {WeightFamily::dimension(1.0), WeightFamily::polynomial_length(2.0),
              WeightFamily::exponential_length(1.0)}) {
            const auto value = restricted_weight(n, family, TorusCharacter::zero(n));
            CHECK(value.log_value == 0.0);
            CHECK(value.minimizer == DominantWeight::zero(n));
        }
}

TEST_CASE("order-one exponential restriction is exactly |p|") {
    const WeightFamily family = WeightFamily::exponential_length(1.0);
    for (int n : {3, 4})
        for (int p = -5; p <= 5; ++p) {
            std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
            e[0] = p;
            const auto value = restricted_weight(n, family, TorusCharacter(e));
            CHECK(value.minimizer.first() == std::abs(p));
            CHECK(value.log_value == static_cast<double>(std::abs(p)));
        }
    CHECK(check_exp_restriction(3, 6).pass());
    CHECK(check_exp_restriction(4, 5).pass());
}

TEST_CASE("restricted values agree with a brute-force infimum") {
    for (int n : {2, 3})
        for (const auto& family :
             {WeightFamily::dimension(0.5), WeightFamily::dimension(1.0),
              WeightFamily::polynomial_length(1.0)}) {
            for (const TorusCharacter& p : enumerate_characters(n, 4)) {
                const auto value = restricted_weight(n, family, p);
                const double reference =
                    brute_force_restricted(n, family, p, value.search_bound + 6);
                CHECK(value.log_value == doctest::Approx(reference).epsilon(1e-14));
            }
        }
}

TEST_CASE("restriction search invariants") {
    const WeightFamily family = WeightFamily::dimension(1.0);
    for (const TorusCharacter& p : enumerate_characters(3, 6)) {
        const auto value = restricted_weight(3, family, p);
        CHECK(contains_character(value.minimizer, p));
        CHECK(value.log_value <= log_weight(family, witness_lambda(3, p)) + 1e-12);
        // the containment chain bounds |p|_1 by the minimizer's first part
        CHECK(p.abs_sum() + 1 <= 9LL * (value.minimizer.first() + 1));
    }
}

TEST_CASE("restricted values are symmetric in the character entries") {
    const WeightFamily family = WeightFamily::dimension(1.0);
    for (int p1 = -3; p1 <= 3; ++p1)
        for (int p2 = -3; p2 <= 3; ++p2) {
            const double a = restricted_weight(3, family, tc({p1, p2})).log_value;
            const double b = restricted_weight(3, family, tc({p2, p1})).log_value;
            CHECK(a == doctest::Approx(b).epsilon(1e-14));
        }
}

TEST_CASE("equivalence constants") {
    const auto k2 = equivalence_constants(2);
    CHECK(k2.c_n == doctest::Approx(0.25));
    CHECK(k2.d_n == doctest::Approx(3.0));
    const auto k3 = equivalence_constants(3);
    CHECK(k3.c_n == doctest::Approx(1.0 / 324.0));
    CHECK(k3.d_n == doctest::Approx(8.0));
}

TEST_CASE("two-sided bound checks pass on a small window") {
    for (int n : {2, 3})
        for (double alpha : {0.5, 1.0}) {
            const auto dim_report = check_dim_restriction_bounds(n, alpha, 6);
            CHECK(dim_report.pass());
            CHECK(dim_report.worst_lower_margin >= 0.0);
            CHECK(dim_report.worst_upper_margin >= 0.0);
            const auto poly_report = check_poly_restriction_bounds(n, alpha, 6);
            CHECK(poly_report.pass());
        }
}

TEST_CASE("character enumeration respects the l1 ball") {
    const auto chars = enumerate_characters(3, 2);
    CHECK(chars.size() == 13);  // 1 + 4 + 8
    for (const auto& p : chars) CHECK(p.abs_sum() <= 2);
    CHECK(std::is_sorted(chars.begin(), chars.end()));
}
