#include "trispec/error.hpp"
#include "trispec/models.hpp"
#include "trispec/recurrence.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace trispec;

TEST_CASE("classify: displaced oscillator profile is admissible with tau = 1") {
    const auto report = classify(dho_recurrence({0.7}).profile());
    CHECK(report.tau == 1.0);
    CHECK(report.two_delta_gt_upsilon);
    CHECK(report.tau_ok);
    CHECK(report.bargmann_ok);
}

TEST_CASE("classify: 2 delta <= upsilon fails") {
    const auto report = classify({1.0, 2.0, 3.0, -5.0});
    CHECK_FALSE(report.two_delta_gt_upsilon);
    CHECK_FALSE(report.bargmann_ok);
    CHECK_FALSE(report.notes.empty());
}

TEST_CASE("classify: tau = 1/2 needs |k| < 1") {
    const auto report = classify({0.5, 0.0, 1.0, -2.0});
    CHECK(report.tau == 0.5);
    CHECK(report.k == doctest::Approx(2.0));
    CHECK_FALSE(report.bargmann_ok);

    CHECK(classify({0.5, 0.0, 1.0, 0.5}).bargmann_ok);
}

TEST_CASE("classify: zero leading coefficient is rejected") {
    CHECK_THROWS_AS(classify({0.0, -1.0, 0.0, 1.0}), ModelError);
    CHECK_THROWS_WITH(classify({0.0, -1.0, 0.0, 1.0}), doctest::Contains("asymptotically degenerate"));
}

TEST_CASE("classify is a pure function") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        AsymptoticProfile p{u(rng), u(rng), u(rng), u(rng)};
        if (p.a_coef == 0.0) continue;
        const auto r1 = classify(p);
        const auto r2 = classify(p);
        CHECK(r1.tau == r2.tau);
        CHECK(r1.k == r2.k);
        CHECK(r1.bargmann_ok == r2.bargmann_ok);
        CHECK(r1.notes == r2.notes);
        CHECK(r1.tau == p.delta - p.upsilon);
    }
}

TEST_CASE("tail_ratio_estimate: direct substitution") {
    const auto dho = dho_recurrence({0.7});
    const long n = 10000;
    CHECK(tail_ratio_estimate(dho, n, 0.51) == doctest::Approx(-0.7 / (n + 1 - 0.51)).epsilon(1e-13));

    CHECK(tail_ratio_estimate(bessel_fixture(1.0), 100, 0.0) == doctest::Approx(1.0 / 202.0).epsilon(1e-15));

    // f_{n+1}(x) by hand for the displaced Rabi form
    const double kappa = 0.7, delta = 0.4, x = 0.3;
    const long m = 1001;
    const double f = 2 * kappa + (m - x - delta * delta / (m - x)) / (2 * kappa);
    const double expected = -(1.0 / (m + 1)) / (-f / (m + 1));
    CHECK(tail_ratio_estimate(rabi_schweber_recurrence({kappa, delta}), 1000, x) ==
          doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("tail_ratio_estimate: preconditions") {
    const auto dho = dho_recurrence({0.7});
    CHECK_THROWS_AS(tail_ratio_estimate(dho, 0, 0.5), std::invalid_argument);
    // a(11, 11) = 0
    CHECK_THROWS_AS(tail_ratio_estimate(dho, 10, 11.0), CoefficientPoleError);
    CHECK_THROWS_WITH(tail_ratio_estimate(dho, 10, 11.0), doctest::Contains("tail seed undefined"));
}

TEST_CASE("table-backed recurrence") {
    const auto rec = Recurrence::from_tables({1.0, 2.0, 3.0}, {0.0, 4.0, 5.0});
    CHECK(rec.a(2, 123.0) == 3.0);
    CHECK(rec.b(1, -7.0) == 4.0);
    CHECK_THROWS_AS(rec.a(3, 0.0), std::out_of_range);
    CHECK_FALSE(rec.has_explicit_poles());
    CHECK(rec.explicit_poles(-10, 10).empty());
    CHECK(rec.energy(0.25) == 0.25);
    CHECK(rec.parity() == Parity::None);
}

TEST_CASE("parity signs") {
    CHECK(parity_sign(Parity::Plus) == 1);
    CHECK(parity_sign(Parity::Minus) == -1);
    CHECK(parity_sign(Parity::None) == 0);
}
