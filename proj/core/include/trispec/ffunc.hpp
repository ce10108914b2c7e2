#pragma once

#include "trispec/recurrence.hpp"

#include <vector>

namespace trispec {

/// Truncation policy for the Euler series of F(x).
struct SeriesConfig {
    double rel_tol = 1e-14;
    double abs_tol = 1e-300;
    int consecutive_small = 3;
    long max_terms = 20000;
    double pole_guard = 1e-12;

    /// Throws std::invalid_argument on a nonsensical configuration.
    void validate() const;
};

enum class SeriesStatus { Converged, MaxTermsReached, PoleDetected };

const char* to_string(SeriesStatus s) noexcept;

struct FEvaluation {
    double value = 0.0;
    long terms_used = 0;
    SeriesStatus status = SeriesStatus::MaxTermsReached;
    double last_term = 0.0;   // |rho_1 ... rho_k| of the final product added

    bool converged() const noexcept { return status == SeriesStatus::Converged; }
};

/// F(x) = a_0 + sum_k rho_1 rho_2 ... rho_k, with
///   rho_1 = -b_1/a_1,  u_1 = 1,  u_l = 1 / (1 - u_{l-1} b_l / (a_l a_{l-1})),  rho_l = u_l - 1.
///
/// The series stops once `consecutive_small` successive products fall below
/// rel_tol*|sum| + abs_tol. A denominator 1 - u_{l-1} b_l/(a_l a_{l-1}) smaller
/// than pole_guard in magnitude ends the evaluation with PoleDetected; F has genuine
/// poles wherever the minimal solution has m_0 = 0, and callers treat those points as
/// branch boundaries. A zero or non-finite a_l throws CoefficientPoleError.
FEvaluation eval_F_euler(const Recurrence& rec, double x, const SeriesConfig& cfg = {});

/// a_0 + (first k terms of the Euler series), for k = 1..terms. No truncation test.
std::vector<double> euler_partial_sums(const Recurrence& rec, double x, int terms);

/// k-th convergent of r_0 = -b_1/(a_1 - b_2/(a_2 - ... - b_k/a_k)), i.e. backward
/// evaluation from level k with a zero tail.
double cf_convergent(const Recurrence& rec, double x, int k);

struct CfConfig {
    double rel_tol = 1e-14;
    long max_depth = 1L << 18;
};

/// r_0 = m_1/m_0 of the minimal solution by backward continued-fraction evaluation.
///
/// Starts at `depth`, seeds the tail with tail_ratio_estimate, and doubles the depth
/// until two successive approximants agree to rel_tol. Throws ConvergenceError with
/// both approximants when max_depth is reached first.
double eval_r0_cf(const Recurrence& rec, double x, long depth = 16, const CfConfig& cfg = {});

/// r_n = m_{n+1}/m_n of the minimal solution, same procedure with the sweep ending at level n+1.
double eval_rn_cf(const Recurrence& rec, double x, long n, long depth = 16, const CfConfig& cfg = {});

struct MinimalSolution {
    std::vector<double> m;          // m_0..m_N, m_0 = 1
    std::vector<double> residuals;  // |m_{n+1} + a_n m_n + b_n m_{n-1}|, n = 0..N-1 (b_0 term absent)
};

/// Coefficients of the minimal solution at an accepted root of F, built from the
/// backward continued-fraction ratios r_n. Row n = 0 of the residuals is the
/// boundary condition m_1 + a_0 m_0 = 0, i.e. |F(x_root)|.
MinimalSolution minimal_solution(const Recurrence& rec, double x_root, int n_max, const CfConfig& cfg = {});

} // namespace trispec
