#include "trispec/error.hpp"
#include "trispec/ffunc.hpp"
#include "trispec/models.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace trispec;

namespace {

// Continued fraction -b1/(a1 - b2/(a2 - ... - bk/ak)) evaluated top-down with
// fundamental recurrences, independent of the backward evaluation in the library.
double convergent_forward(const std::vector<double>& a, const std::vector<double>& b, int k) {
    // r0 = -b1 / (a1 + r1), r1 = -b2/(a2 + r2) ...: write as K(-b_l / a_l) with partial
    // numerators -b_l and denominators a_l, numerator A_k and denominator B_k.
    double a_prev = 1.0, a_cur = 0.0;   // A_{-1}, A_0
    double b_prev = 0.0, b_cur = 1.0;   // B_{-1}, B_0
    for (int l = 1; l <= k; ++l) {
        const double num = -b[static_cast<std::size_t>(l)];
        const double den = a[static_cast<std::size_t>(l)];
        const double a_next = den * a_cur + num * a_prev;
        const double b_next = den * b_cur + num * b_prev;
        a_prev = a_cur;
        a_cur = a_next;
        b_prev = b_cur;
        b_cur = b_next;
    }
    return a_cur / b_cur;
}

} // namespace

TEST_CASE("Euler series vanishes at the displaced-oscillator levels") {
    const auto rec = dho_recurrence({0.7});
    for (double x : {-0.49, 0.51, 1.51}) {
        const auto f = eval_F_euler(rec, x);
        CHECK(f.converged());
        CHECK(std::abs(f.value) < 1e-10);
    }
}

TEST_CASE("constant fixture: F is a_0 when b vanishes beyond the first level") {
    const auto rec = Recurrence::from_tables(std::vector<double>(200, 1.0), std::vector<double>(200, 0.0));
    const auto f = eval_F_euler(rec, 0.0);
    CHECK(f.converged());
    CHECK(f.value == 1.0);
}

TEST_CASE("Bessel fixture: F = J1/J0 from the standard library") {
    for (double z : {0.5, 1.0, 2.0, 3.7}) {
        const double expected = std::cyl_bessel_j(1.0, z) / std::cyl_bessel_j(0.0, z);
        const auto f = eval_F_euler(bessel_fixture(z), 0.0);
        CHECK(f.converged());
        CHECK(f.value == doctest::Approx(expected).epsilon(1e-12));
        CHECK(eval_r0_cf(bessel_fixture(z), 0.0) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("continued fraction: r_0 = -a_0 at a level") {
    const auto rec = dho_recurrence({0.7});
    CHECK(std::abs(eval_r0_cf(rec, 0.51) + rec.a(0, 0.51)) < 1e-10);
}

TEST_CASE("property: partial sums equal convergents on random contractive sequences") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::uniform_real_distribution<double> t(-0.25, 0.25);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> a(31), b(31, 0.0);
        a[0] = mag(rng) - 1.0;
        for (std::size_t l = 1; l < a.size(); ++l) a[l] = (rng() & 1u) ? mag(rng) : -mag(rng);
        b[1] = (rng() & 1u) ? mag(rng) : -mag(rng);
        for (std::size_t l = 2; l < b.size(); ++l) b[l] = t(rng) * a[l] * a[l - 1];
        const auto rec = Recurrence::from_tables(a, b);
        const auto sums = euler_partial_sums(rec, 0.0, 30);
        REQUIRE(sums.size() == 30);
        for (int k = 1; k <= 30; ++k) {
            const double expected = a[0] + convergent_forward(a, b, k);
            CHECK(std::abs(sums[static_cast<std::size_t>(k - 1)] - expected) <=
                  1e-12 * std::max(1.0, std::abs(expected)));
            CHECK(std::abs(cf_convergent(rec, 0.0, k) - convergent_forward(a, b, k)) <=
                  1e-12 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("property: Euler series agrees with the continued fraction for random admissible coefficients") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> kap(0.2, 1.5);
    std::uniform_real_distribution<double> del(0.0, 1.0);
    std::uniform_real_distribution<double> xs(-1.0, 5.0);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const double kappa = kap(rng);
        const double x = xs(rng);
        const auto rec = parity_rabi_recurrence({kappa, del(rng), 1.0, (trial & 1) ? Parity::Plus : Parity::Minus});
        const auto f = eval_F_euler(rec, x);
        if (!f.converged()) continue;
        const double cf = rec.a(0, x) + eval_r0_cf(rec, x);
        CHECK(std::abs(f.value - cf) <= 1e-10 * std::max(1.0, std::abs(f.value)));
        ++compared;
    }
    CHECK(compared > 350);
}

TEST_CASE("coefficient pole and configuration errors") {
    const auto rec = dho_recurrence({0.7});
    CHECK_THROWS_AS(eval_F_euler(rec, 1.0), CoefficientPoleError);
    try {
        eval_F_euler(rec, 2.0);
    } catch (const CoefficientPoleError& e) {
        CHECK(e.level() == 2);
    }
    SeriesConfig bad;
    bad.rel_tol = -1.0;
    CHECK_THROWS(eval_F_euler(rec, 0.3, bad));
}

TEST_CASE("term cap is reported") {
    SeriesConfig cfg;
    cfg.max_terms = 3;
    const auto f = eval_F_euler(dho_recurrence({0.7}), 0.3, cfg);
    CHECK(f.status == SeriesStatus::MaxTermsReached);
    CHECK(f.terms_used == 3);
    CHECK(std::string(to_string(f.status)) == "max_terms");
}

TEST_CASE("continued fraction that never settles reports both approximants") {
    // a_n = 0 beyond level 1 is avoided; b_n = -1, a_n = 0.5 oscillates without converging
    const auto rec = Recurrence::from_tables(std::vector<double>(5000, 0.5), std::vector<double>(5000, 1.0));
    CfConfig cfg;
    cfg.max_depth = 1024;
    try {
        eval_r0_cf(rec, 0.0, 16, cfg);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.previous() != e.last());
    }
}

TEST_CASE("minimal solution at a displaced-oscillator level") {
    const auto rec = dho_recurrence({0.7});
    const auto ms = minimal_solution(rec, 0.51, 60);
    REQUIRE(ms.m.size() == 61);
    CHECK(ms.m[0] == 1.0);
    CHECK(ms.m[1] == doctest::Approx(0.51 / 0.7).epsilon(1e-12));
    double scale = 0.0;
    for (double v : ms.m) scale = std::max(scale, std::abs(v));
    for (double r : ms.residuals) CHECK(r <= 1e-10 * scale);
}

TEST_CASE("minimal solution: boundary row at the positive-parity Rabi root") {
    const auto rec = parity_rabi_recurrence({0.7, 0.4, 1.0, Parity::Plus});
    const auto ms = minimal_solution(rec, -0.4270436745661, 40);
    CHECK(ms.residuals[0] <= 1e-6);
}

TEST_CASE("minimal-solution ratio decays like kappa/n") {
    CHECK(std::abs(eval_rn_cf(dho_recurrence({0.7}), 0.51, 200)) * 200 == doctest::Approx(0.7).epsilon(0.1));
    CHECK(std::abs(eval_rn_cf(dho_recurrence({1.3}), 2.0 - 1.69, 200)) * 200 == doctest::Approx(1.3).epsilon(0.1));
}
