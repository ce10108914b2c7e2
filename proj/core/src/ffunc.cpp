#include "trispec/ffunc.hpp"

#include "trispec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace trispec {

namespace {

double checked_a(const Recurrence& rec, long n, double x) {
    const double a = rec.a(n, x);
    if (a == 0.0 || !std::isfinite(a)) {
        throw CoefficientPoleError(n, x);
    }
    return a;
}

double checked_a0(const Recurrence& rec, double x) {
    const double a0 = rec.a(0, x);
    if (!std::isfinite(a0)) {
        throw CoefficientPoleError(0, x);
    }
    return a0;
}

// r_stop from a backward sweep starting at level `depth` with tail value `tail` for r_depth.
double backward_r(const Recurrence& rec, double x, long depth, double tail, long stop = 0) {
    double r = tail;
    for (long n = depth; n > stop; --n) {
        r = -rec.b(n, x) / (rec.a(n, x) + r);
    }
    return r;
}

bool agree(double p, double q, double rel_tol) {
    if (p == q) {
        return true;
    }
    return std::abs(p - q) <= rel_tol * std::max(std::abs(p), std::abs(q));
}

} // namespace

void SeriesConfig::validate() const {
    if (!(rel_tol > 0.0)) {
        throw std::invalid_argument("SeriesConfig.rel_tol must be > 0");
    }
    if (abs_tol < 0.0) {
        throw std::invalid_argument("SeriesConfig.abs_tol must be >= 0");
    }
    if (max_terms < 1) {
        throw std::invalid_argument("SeriesConfig.max_terms must be >= 1");
    }
    if (consecutive_small < 1) {
        throw std::invalid_argument("SeriesConfig.consecutive_small must be >= 1");
    }
    if (pole_guard < 0.0) {
        throw std::invalid_argument("SeriesConfig.pole_guard must be >= 0");
    }
}

const char* to_string(SeriesStatus s) noexcept {
    switch (s) {
    case SeriesStatus::Converged:
        return "converged";
    case SeriesStatus::MaxTermsReached:
        return "max_terms";
    case SeriesStatus::PoleDetected:
        return "pole";
    }
    return "unknown";
}

FEvaluation eval_F_euler(const Recurrence& rec, double x, const SeriesConfig& cfg) {
    cfg.validate();

    FEvaluation out;
    const double a0 = checked_a0(rec, x);
    double a_prev = checked_a(rec, 1, x);
    double prod = -rec.b(1, x) / a_prev;  // rho_1
    double sum = a0 + prod;
    double u = 1.0;
    int small = 0;

    auto is_small = [&](double term) { return std::abs(term) <= cfg.rel_tol * std::abs(sum) + cfg.abs_tol; };

    out.terms_used = 1;
    small = is_small(prod) ? 1 : 0;

    for (long l = 2; small < cfg.consecutive_small && l <= cfg.max_terms; ++l) {
        const double al = checked_a(rec, l, x);
        const double denom = 1.0 - u * rec.b(l, x) / (al * a_prev);
        if (std::abs(denom) < cfg.pole_guard) {
            out.value = sum;
            out.terms_used = l - 1;
            out.status = SeriesStatus::PoleDetected;
            out.last_term = std::abs(prod);
            return out;
        }
        u = 1.0 / denom;
        prod *= u - 1.0;
        sum += prod;
        a_prev = al;
        out.terms_used = l;
        small = is_small(prod) ? small + 1 : 0;
    }

    out.value = sum;
    out.last_term = std::abs(prod);
    if (!std::isfinite(sum)) {
        out.status = SeriesStatus::PoleDetected;
    } else if (small >= cfg.consecutive_small) {
        out.status = SeriesStatus::Converged;
    } else {
        out.status = SeriesStatus::MaxTermsReached;
    }
    return out;
}

std::vector<double> euler_partial_sums(const Recurrence& rec, double x, int terms) {
    if (terms < 1) {
        throw std::invalid_argument("euler_partial_sums needs terms >= 1");
    }
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(terms));
    double a_prev = checked_a(rec, 1, x);
    double prod = -rec.b(1, x) / a_prev;
    double sum = checked_a0(rec, x) + prod;
    double u = 1.0;
    sums.push_back(sum);
    for (long l = 2; l <= terms; ++l) {
        const double al = checked_a(rec, l, x);
        u = 1.0 / (1.0 - u * rec.b(l, x) / (al * a_prev));
        prod *= u - 1.0;
        sum += prod;
        a_prev = al;
        sums.push_back(sum);
    }
    return sums;
}

double cf_convergent(const Recurrence& rec, double x, int k) {
    if (k < 1) {
        throw std::invalid_argument("cf_convergent needs k >= 1");
    }
    return backward_r(rec, x, k, 0.0);
}

double eval_r0_cf(const Recurrence& rec, double x, long depth, const CfConfig& cfg) {
    return eval_rn_cf(rec, x, 0, depth, cfg);
}

double eval_rn_cf(const Recurrence& rec, double x, long n, long depth, const CfConfig& cfg) {
    if (n < 0) {
        throw std::invalid_argument("eval_rn_cf needs n >= 0");
    }
    if (depth < 2) {
        throw std::invalid_argument("continued-fraction depth must be >= 2");
    }
    // depth counts levels below the tail, measured from n.
    auto approximant = [&](long d) { return backward_r(rec, x, n + d, tail_ratio_estimate(rec, n + d, x), n); };

    double previous = std::numeric_limits<double>::quiet_NaN();
    double current = approximant(depth);
    while (2 * depth <= cfg.max_depth && std::isfinite(current)) {
        depth *= 2;
        previous = current;
        current = approximant(depth);
        if (agree(previous, current, cfg.rel_tol)) {
            return current;
        }
    }
    throw ConvergenceError("continued fraction for r_" + std::to_string(n) + " did not settle by depth " +
                               std::to_string(depth),
                           previous, current);
}

MinimalSolution minimal_solution(const Recurrence& rec, double x_root, int n_max, const CfConfig& cfg) {
    if (n_max < 1) {
        throw std::invalid_argument("minimal_solution needs N >= 1");
    }
    const auto n = static_cast<std::size_t>(n_max);

    // Ratios r_0..r_{N-1} from one backward sweep; redo with doubled depth until stable.
    auto sweep = [&](long depth) {
        std::vector<double> r(n);
        double rk = tail_ratio_estimate(rec, depth, x_root);
        for (long k = depth; k >= 1; --k) {
            rk = -rec.b(k, x_root) / (rec.a(k, x_root) + rk);
            if (static_cast<std::size_t>(k - 1) < n) {
                r[static_cast<std::size_t>(k - 1)] = rk;
            }
        }
        return r;
    };

    long depth = std::max<long>(32, 2L * n_max);
    std::vector<double> ratios = sweep(depth);
    for (;;) {
        if (2 * depth > cfg.max_depth) {
            throw ConvergenceError("minimal-solution ratios did not settle", ratios.front(), ratios.back());
        }
        depth *= 2;
        auto next = sweep(depth);
        const bool stable = std::equal(ratios.begin(), ratios.end(), next.begin(),
                                       [&](double p, double q) { return agree(p, q, cfg.rel_tol); });
        ratios = std::move(next);
        if (stable) {
            break;
        }
    }

    MinimalSolution sol;
    sol.m.resize(n + 1);
    sol.m[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        sol.m[k + 1] = ratios[k] * sol.m[k];
    }
    sol.residuals.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto lk = static_cast<long>(k);
        double defect = sol.m[k + 1] + rec.a(lk, x_root) * sol.m[k];
        if (k > 0) {
            defect += rec.b(lk, x_root) * sol.m[k - 1];
        }
        sol.residuals[k] = std::abs(defect);
    }
    return sol;
}

} // namespace trispec
