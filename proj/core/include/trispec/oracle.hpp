#pragma once

#include "trispec/error.hpp"
#include "trispec/models.hpp"

#include <Eigen/Dense>

#include <vector>

namespace trispec {

/// Real symmetric matrix of H/omega in a truncated number basis.
///
/// Spin models use the ordering |n, up> -> 2n, |n, down> -> 2n+1 with sigma_3 |up> = |up>;
/// Fock states n = 0..cutoff-1. The displaced oscillator is spinless.
struct TruncatedHamiltonian {
    ModelKind model = ModelKind::Dho;
    ModelParams params;
    int cutoff = 0;
    bool has_spin = false;
    Eigen::MatrixXd entries;

    Eigen::Index dimension() const noexcept { return entries.rows(); }
};

/// The modified (plane-wave) Rabi coupling i kappa sigma_1 (a^dagger - a) is made real by
/// the basis phase rotation |n> -> i^n |n>. RabiParity builds the plain Rabi matrix.
TruncatedHamiltonian build_hamiltonian(ModelKind model, const ModelParams& params, int cutoff);

struct OracleSpectrum {
    std::vector<double> eigenvalues;  // ascending, units of omega
    /// Eigenvalue of exp(i pi J), J = a^dagger a + (1 + sigma_3)/2: +1, -1, or 0 when the
    /// model has no such symmetry (spinless DHO, generalized Rabi).
    std::vector<int> parities;
    int converged_count = 0;
    int cutoff = 0;                   // cutoff of the spectrum returned
};

/// Parity label of the parity-resolved recurrence that carries a state with the given
/// exp(i pi J) eigenvalue. The recurrence labels are eigenvalues of g sigma_3 (g: a -> -a),
/// and exp(i pi J) = -g sigma_3, so the labels are opposite.
Parity recurrence_parity_for(int exchange_parity) noexcept;

class OracleConvergenceError : public ConvergenceError {
public:
    OracleConvergenceError(const std::string& what, std::vector<double> coarse, std::vector<double> fine)
        : ConvergenceError(what, coarse.empty() ? 0.0 : coarse.back(), fine.empty() ? 0.0 : fine.back()),
          coarse_(std::move(coarse)), fine_(std::move(fine)) {}

    const std::vector<double>& coarse() const noexcept { return coarse_; }
    const std::vector<double>& fine() const noexcept { return fine_; }

private:
    std::vector<double> coarse_;
    std::vector<double> fine_;
};

/// Lowest k eigenvalues, certified by doubling the cutoff until the lowest k move by
/// less than tol (at most three doublings). Requires k <= dimension/4.
OracleSpectrum eigen_lowest(const TruncatedHamiltonian& h, int k, double tol);

/// Full dense diagonalization of one matrix (no cutoff doubling); exposed for tests.
OracleSpectrum diagonalize(const TruncatedHamiltonian& h);

/// c_n = kappa^(alpha-n) L_n^(alpha-n)(kappa^2), alpha = x + kappa^2, from the finite sum
/// L_n^(alpha-n)(z) = sum_j binom(alpha, n-j) (-z)^j / j!. For kappa < 0 the common factor
/// kappa^alpha is replaced by |kappa|^alpha, which keeps c_1/c_0 = x/kappa.
double laguerre_dominant(const DhoParams& p, double x, int n);

/// Upward solution of the displaced-oscillator recurrence from (c_0, c_1); returns c_0..c_{n_max}.
/// Generic in the scalar so the same recursion can run in exact rational arithmetic.
template <class T>
std::vector<T> dho_upward(const T& kappa, const T& x, const T& c0, const T& c1, int n_max) {
    std::vector<T> c;
    c.reserve(static_cast<std::size_t>(n_max) + 1);
    c.push_back(c0);
    if (n_max >= 1) {
        c.push_back(c1);
    }
    for (int n = 1; n < n_max; ++n) {
        const T np1 = T(n + 1);
        const T next = -((T(n) - x) / (np1 * kappa)) * c[static_cast<std::size_t>(n)] -
                       c[static_cast<std::size_t>(n - 1)] / np1;
        c.push_back(next);
    }
    return c;
}

/// J_order(x) from the ascending power series; |x| <= 10, 0 <= order <= 60.
double bessel_series(int order, double x);

/// J_0..J_{n_max} at x by upward recursion J_{n+1} = (2n/x) J_n - J_{n-1}, seeded with the
/// series values of J_0 and J_1. Unstable by construction.
std::vector<double> bessel_upward(double x, int n_max);

} // namespace trispec
