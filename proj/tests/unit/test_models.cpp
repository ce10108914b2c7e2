#include "trispec/error.hpp"
#include "trispec/models.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace trispec;

TEST_CASE("displaced oscillator coefficients") {
    const auto rec = dho_recurrence({0.7});
    CHECK(rec.a(0, 0.51) == doctest::Approx(-0.51 / 0.7));
    CHECK(rec.b(3, 1.23) == doctest::Approx(0.25));
    CHECK(rec.profile().tau() == 1.0);
    CHECK(rec.parity() == Parity::None);
}

TEST_CASE("displaced oscillator levels") {
    const auto levels = dho_exact_levels({0.7}, 2);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0] == doctest::Approx(-0.49));
    CHECK(levels[1] == doctest::Approx(0.51));
    CHECK(levels[2] == doctest::Approx(1.51));
    const auto free = dho_exact_levels({0.0}, 4);
    for (int l = 0; l <= 4; ++l) CHECK(free[static_cast<std::size_t>(l)] == l);
    CHECK(dho_exact_levels({1.0}, 5)[5] == doctest::Approx(4.0));
}

TEST_CASE("displaced Rabi form") {
    const double kappa = 0.7, delta = 0.4;
    const auto rec = rabi_schweber_recurrence({kappa, delta});
    // f_1(0.5) = 1.4 + (1/1.4)(0.5 - 0.16/0.5)
    const double f1 = 1.4 + (1.0 / 1.4) * (0.5 - 0.16 / 0.5);
    CHECK(f1 == doctest::Approx(1.5285714285714285));
    CHECK(rec.a(1, 0.5) == doctest::Approx(-f1 / 2.0));
    CHECK(rec.b(4, 0.5) == doctest::Approx(0.2));
    CHECK(rec.explicit_poles(-1.0, 3.0) == std::vector<double>{0.0, 1.0, 2.0});
    CHECK(rec.energy(0.5) == doctest::Approx(0.5 - 0.49));
    CHECK_THROWS_AS(rec.a(1, 1.0), CoefficientPoleError);
    CHECK(rec.profile().a_coef == doctest::Approx(-1.0 / 1.4));

    // without the splitting there are no poles and f_n = 2 kappa + (n - x)/(2 kappa)
    const auto flat = rabi_schweber_recurrence({kappa, 0.0});
    CHECK_FALSE(flat.has_explicit_poles());
    CHECK(flat.a(3, 3.0) == doctest::Approx(-2 * kappa / 4.0));
}

TEST_CASE("parity-resolved Rabi coefficients") {
    const auto plus = parity_rabi_recurrence({0.7, 0.4, 1.0, Parity::Plus});
    const auto minus = parity_rabi_recurrence({0.7, 0.4, 1.0, Parity::Minus});
    CHECK(plus.a(1, 0.0) == doctest::Approx(0.6 / 1.4));
    CHECK(minus.a(0, 0.0) == doctest::Approx(-0.4 / 0.7));
    CHECK(plus.parity() == Parity::Plus);
    CHECK(minus.parity() == Parity::Minus);
}

TEST_CASE("property: parity forms at zero splitting equal the displaced oscillator exactly") {
    const auto dho = dho_recurrence({0.7});
    const auto plus = parity_rabi_recurrence({0.7, 0.0, 1.0, Parity::Plus});
    const auto minus = parity_rabi_recurrence({0.7, 0.0, 1.0, Parity::Minus});
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> xs(-1.0, 6.0);
    std::uniform_int_distribution<long> ns(0, 10000);
    for (int i = 0; i < 2000; ++i) {
        const double x = xs(rng);
        const long n = ns(rng);
        CHECK(plus.a(n, x) == dho.a(n, x));
        CHECK(minus.a(n, x) == dho.a(n, x));
        CHECK(plus.b(n, x) == dho.b(n, x));
    }
}

TEST_CASE("Jaynes-Cummings closed form") {
    const auto free = jc_exact_levels({1.0, 1.0, 0.0}, 2);
    const std::vector<double> expected{-0.5, 0.5, 0.5, 1.5, 1.5, 2.5, 2.5};
    REQUIRE(free.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(free[i] == doctest::Approx(expected[i]));

    const auto weak = jc_exact_levels({1.0, 1.0, 0.1}, 0);
    CHECK(weak[1] == doctest::Approx(0.4));
    CHECK(weak[2] == doctest::Approx(0.6));
}

TEST_CASE("property: Jaynes-Cummings pairs are the eigenvalues of their 2x2 blocks") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const JcParams p{u(rng), u(rng), u(rng)};
        const int n_max = 6;
        const auto levels = jc_exact_levels(p, n_max);
        // block {|n, up>, |n+1, down>}: [[omega n + mu, lambda sqrt(n+1)], [., omega (n+1) - mu]]
        std::vector<double> blocks{-0.5 * p.omega0};
        const double mu = 0.5 * p.omega0;
        for (int n = 0; n <= n_max; ++n) {
            const double d1 = p.omega * n + mu;
            const double d2 = p.omega * (n + 1) - mu;
            const double off = p.lambda * std::sqrt(n + 1.0);
            const double mean = 0.5 * (d1 + d2);
            const double rad = std::hypot(0.5 * (d1 - d2), off);
            blocks.push_back(mean - rad);
            blocks.push_back(mean + rad);
        }
        std::sort(blocks.begin(), blocks.end());
        REQUIRE(blocks.size() == levels.size());
        for (std::size_t i = 0; i < blocks.size(); ++i) CHECK(levels[i] == doctest::Approx(blocks[i]).epsilon(1e-13));
    }
}

TEST_CASE("Bessel fixture") {
    const auto rec = bessel_fixture(2.0);
    CHECK(rec.a(3, 99.0) == doctest::Approx(-3.0));
    CHECK(rec.b(7, 0.0) == 1.0);
    CHECK_THROWS_AS(bessel_fixture(0.0), ModelError);
}

TEST_CASE("model names and selection") {
    for (auto kind : {ModelKind::Dho, ModelKind::Rabi, ModelKind::RabiParity, ModelKind::Jc, ModelKind::RabiModified,
                      ModelKind::GenRabi}) {
        CHECK(parse_model(model_name(kind)) == kind);
    }
    CHECK_FALSE(parse_model("rabbi"));
    CHECK(parse_parity_selection("both") == ParitySelection::Both);
    CHECK_FALSE(parse_parity_selection("up"));

    CHECK(recurrences_for(ModelKind::RabiParity, {.kappa = 0.7, .delta = 0.4}).size() == 2);
    CHECK(recurrences_for(ModelKind::RabiParity, {.kappa = 0.7, .delta = 0.4, .parity = ParitySelection::Minus})
              .front()
              .parity() == Parity::Minus);
    CHECK(recurrences_for(ModelKind::Dho, {.kappa = 0.7}).size() == 1);
    CHECK_FALSE(has_recurrence(ModelKind::GenRabi));
    CHECK_THROWS_AS(recurrences_for(ModelKind::GenRabi, {.kappa = 0.7}), ModelError);
    CHECK_THROWS_AS(recurrences_for(ModelKind::RabiModified, {.kappa = 0.7}), ModelError);
    CHECK_THROWS_AS(recurrences_for(ModelKind::Dho, {.kappa = 0.0}), ModelError);
}
