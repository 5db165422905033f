#include <cmath>

#include "beurling/weights.hpp"
#include "doctest.h"

using namespace beurling;

namespace {
DominantWeight w(std::vector<int> parts) { return DominantWeight(std::move(parts)); }
}  // namespace

TEST_CASE("log weights of the three families") {
    CHECK(log_weight(WeightFamily::dimension(1.0), w({1, 0, 0})) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(log_weight(WeightFamily::polynomial_length(2.0), w({3, 1, 0})) ==
          doctest::Approx(2.0 * std::log(4.0)).epsilon(1e-14));
    CHECK(log_weight(WeightFamily::exponential_length(0.5), w({4, 0})) == doctest::Approx(2.0));
    for (const auto& family :
         {WeightFamily::dimension(0.7), WeightFamily::polynomial_length(1.3),
          WeightFamily::exponential_length(0.4)})
        CHECK(log_weight(family, w({0, 0, 0})) == 0.0);
}

TEST_CASE("log-domain evaluation matches direct evaluation") {
    for_each_dominant(3, 5, [&](const DominantWeight& lam) {
        const double direct_dim = std::pow(static_cast<double>(weyl_dimension(lam)), 0.75);
        CHECK(std::exp(log_weight(WeightFamily::dimension(0.75), lam)) ==
              doctest::Approx(direct_dim).epsilon(1e-12));
        const double direct_poly = std::pow(1.0 + lam.first(), 1.5);
        CHECK(std::exp(log_weight(WeightFamily::polynomial_length(1.5), lam)) ==
              doctest::Approx(direct_poly).epsilon(1e-12));
        const double direct_exp = std::exp(std::pow(static_cast<double>(lam.first()), 0.5));
        CHECK(std::exp(log_weight(WeightFamily::exponential_length(0.5), lam)) ==
              doctest::Approx(direct_exp).epsilon(1e-12));
    });
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(WeightFamily::dimension(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightFamily::exponential_length(0.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightFamily::exponential_length(1.5), std::invalid_argument);
    CHECK(WeightFamily::parse("poly", 2.0).kind == WeightFamily::Kind::polynomial_length);
}

TEST_CASE("submultiplicativity scans stay nonpositive") {
    for (const auto& family :
         {WeightFamily::dimension(0.5), WeightFamily::polynomial_length(1.0),
          WeightFamily::exponential_length(0.8)}) {
        const auto su2 = submultiplicativity_scan(family, 2, 10);
        CHECK(su2.pass());
        CHECK(su2.worst_slack <= 0.0);
        const auto su3 = submultiplicativity_scan(family, 3, 4);
        CHECK(su3.pass());
    }
    // the trivial family has zero slack everywhere
    const auto trivial = submultiplicativity_scan(WeightFamily::dimension(0.0), 2, 6);
    CHECK(trivial.worst_slack == 0.0);
}

TEST_CASE("dimension-ratio scan") {
    // dim(1,1,0)/(dim(1,0,0)^2) over (1/2 + 1/2) is exactly 1/3
    const double ratio = (3.0 / 9.0) / (1.0 / 2 + 1.0 / 2);
    CHECK(ratio == doctest::Approx(1.0 / 3));

    const auto su2 = condition1_scan(2, 10);
    CHECK(su2.empirical_c <= 1.0);
    CHECK(su2.empirical_c > 0.9);  // attained near the top of the scan window

    const auto su3 = condition1_scan(3, 4);
    CHECK(su3.empirical_c <= 3.0);
    REQUIRE(su3.witness.has_value());
    CHECK(weyl_dimension(su3.witness->nu) > 0);
}

TEST_CASE("exp-domination constants at the calibration point") {
    const auto constants = exp_domination_constants(0.5, 24.0);
    CHECK(constants.k_threshold == 5308416.0);  // (24^2 / (1/4))^2, exact
    CHECK(constants.ln_m >= 0.0);
    // frozen scan results: p peaks at the right endpoint, dips at 2302
    CHECK(constants.ln_m == doctest::Approx(3145.7333509706855).epsilon(1e-12));
    CHECK(constants.argmax_t == static_cast<long long>(2 * 5308416));
    CHECK(constants.argmin_s == 2302);
    CHECK_THROWS_AS(exp_domination_constants(0.5, 23.0), std::invalid_argument);
    CHECK_THROWS_AS(exp_domination_constants(1.0, 100.0), std::invalid_argument);
}

TEST_CASE("ln_m never decreases when the scan range grows") {
    double previous = -1.0;
    for (long long t_max : {10LL, 100LL, 1000LL, 10000LL, 100000LL}) {
        const double v = exp_domination_ln_m_over(0.5, 24.0, t_max);
        CHECK(v >= previous);
        previous = v;
    }
}

TEST_CASE("p/q monotonicity on the certified interval") {
    const auto report = pq_monotonicity_check(0.9, 67.0, 1000);
    CHECK(report.pass);
    // q is already decreasing across the endpoints
    const double k = exp_domination_constants(0.9, 67.0).k_threshold;
    CHECK(exp_poly_log_gap(0.9, 67.0, k) / k >= exp_poly_log_gap(0.9, 67.0, 2 * k) / (2 * k));
}

TEST_CASE("exponential domination margins stay within 2 ln M") {
    const auto report = exp_domination_check(2, 0.9, 67.0, 12);
    CHECK(report.pass());
    CHECK(report.worst_margin <= 0.0);
    CHECK(report.triples > 0);
    // trivial factors give slack zero against a nonnegative budget
    CHECK(exp_poly_log_gap(0.9, 67.0, 0.0) == 0.0);
}
