#include "trispec/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace trispec {

namespace {

constexpr Eigen::Index up(int n) { return 2 * n; }
constexpr Eigen::Index down(int n) { return 2 * n + 1; }

void set_sym(Eigen::MatrixXd& m, Eigen::Index i, Eigen::Index j, double v) {
    m(i, j) = v;
    m(j, i) = v;
}

bool has_exchange_parity(const TruncatedHamiltonian& h) {
    return h.has_spin && h.model != ModelKind::GenRabi;
}

// Diagonal of exp(i pi J) in the spin basis.
Eigen::VectorXd exchange_parity_diagonal(int cutoff) {
    Eigen::VectorXd p(2 * cutoff);
    for (int n = 0; n < cutoff; ++n) {
        const double boson = (n % 2 == 0) ? 1.0 : -1.0;
        p(up(n)) = -boson;  // J = n + 1
        p(down(n)) = boson; // J = n
    }
    return p;
}

} // namespace

Parity recurrence_parity_for(int exchange_parity) noexcept {
    if (exchange_parity > 0) {
        return Parity::Minus;
    }
    if (exchange_parity < 0) {
        return Parity::Plus;
    }
    return Parity::None;
}

TruncatedHamiltonian build_hamiltonian(ModelKind model, const ModelParams& params, int cutoff) {
    if (cutoff < 4) {
        throw ModelError("cutoff must be >= 4");
    }
    if (!(params.omega > 0.0)) {
        throw ModelError("omega must be positive");
    }
    TruncatedHamiltonian h;
    h.model = model;
    h.params = params;
    h.cutoff = cutoff;

    const double kappa = params.kappa;
    const double delta = params.delta;

    if (model == ModelKind::Dho) {
        h.entries = Eigen::MatrixXd::Zero(cutoff, cutoff);
        for (int n = 0; n < cutoff; ++n) {
            h.entries(n, n) = n;
            if (n + 1 < cutoff) {
                set_sym(h.entries, n, n + 1, kappa * std::sqrt(n + 1.0));
            }
        }
        return h;
    }

    h.has_spin = true;
    h.entries = Eigen::MatrixXd::Zero(2 * cutoff, 2 * cutoff);
    auto& m = h.entries;

    switch (model) {
    case ModelKind::Rabi:
    case ModelKind::RabiParity:
    case ModelKind::RabiModified:
        // kappa sigma_1 (a^dagger + a) + delta sigma_3. For the plane-wave variant
        // i kappa sigma_1 (a^dagger - a) the rotation |n> -> i^n |n> yields the same
        // real elements: <n+1|.|n> = sqrt(n+1) and <n-1|.|n> = +sqrt(n).
        for (int n = 0; n < cutoff; ++n) {
            m(up(n), up(n)) = n + delta;
            m(down(n), down(n)) = n - delta;
            if (n + 1 < cutoff) {
                const double g = kappa * std::sqrt(n + 1.0);
                set_sym(m, up(n), down(n + 1), g);
                set_sym(m, down(n), up(n + 1), g);
            }
        }
        break;
    case ModelKind::Jc:
        // kappa (a sigma_+ + a^dagger sigma_-) + delta sigma_3
        for (int n = 0; n < cutoff; ++n) {
            m(up(n), up(n)) = n + delta;
            m(down(n), down(n)) = n - delta;
            if (n + 1 < cutoff) {
                set_sym(m, up(n), down(n + 1), kappa * std::sqrt(n + 1.0));
            }
        }
        break;
    case ModelKind::GenRabi:
        // kappa sigma_3 (a^dagger + a) + theta sigma_3 + delta sigma_1
        for (int n = 0; n < cutoff; ++n) {
            m(up(n), up(n)) = n + params.theta;
            m(down(n), down(n)) = n - params.theta;
            set_sym(m, up(n), down(n), delta);
            if (n + 1 < cutoff) {
                const double g = kappa * std::sqrt(n + 1.0);
                set_sym(m, up(n), up(n + 1), g);
                set_sym(m, down(n), down(n + 1), -g);
            }
        }
        break;
    case ModelKind::Dho:
        break;
    }
    return h;
}

OracleSpectrum diagonalize(const TruncatedHamiltonian& h) {
    OracleSpectrum out;
    out.cutoff = h.cutoff;
    const bool with_parity = has_exchange_parity(h);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        h.entries, with_parity ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("dense symmetric eigensolver failed");
    }
    const Eigen::VectorXd& evals = solver.eigenvalues();
    const Eigen::Index dim = evals.size();
    out.eigenvalues.assign(evals.data(), evals.data() + dim);
    out.parities.assign(static_cast<std::size_t>(dim), 0);
    out.converged_count = 0;
    if (!with_parity) {
        return out;
    }

    const Eigen::VectorXd p = exchange_parity_diagonal(h.cutoff);
    const Eigen::MatrixXd& vecs = solver.eigenvectors();

    // Degenerate clusters: an arbitrary basis of the cluster mixes parities, so rotate
    // to the eigenbasis of P restricted to the cluster before labelling.
    Eigen::Index i = 0;
    while (i < dim) {
        Eigen::Index j = i + 1;
        while (j < dim && evals(j) - evals(j - 1) <= 1e-9 * std::max(1.0, std::abs(evals(j)))) {
            ++j;
        }
        const Eigen::MatrixXd block = vecs.middleCols(i, j - i);
        const Eigen::MatrixXd restricted = block.transpose() * p.asDiagonal() * block;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> local(restricted);
        for (Eigen::Index c = 0; c < j - i; ++c) {
            const double expectation = local.eigenvalues()(c);
            int label = 0;
            if (expectation > 0.5) {
                label = 1;
            } else if (expectation < -0.5) {
                label = -1;
            }
            out.parities[static_cast<std::size_t>(i + c)] = label;
        }
        i = j;
    }
    return out;
}

OracleSpectrum eigen_lowest(const TruncatedHamiltonian& h, int k, double tol) {
    if (k < 1 || k > h.dimension() / 4) {
        throw std::invalid_argument("eigen_lowest needs 1 <= k <= dimension/4 (k = " + std::to_string(k) +
                                    ", dimension = " + std::to_string(h.dimension()) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> first(h.entries, Eigen::EigenvaluesOnly);
    std::vector<double> coarse(first.eigenvalues().data(), first.eigenvalues().data() + first.eigenvalues().size());

    int cutoff = h.cutoff;
    for (int doubling = 0; doubling < 3; ++doubling) {
        cutoff *= 2;
        OracleSpectrum fine = diagonalize(build_hamiltonian(h.model, h.params, cutoff));
        const std::size_t span = coarse.size() / 2;
        std::size_t stable = 0;
        while (stable < span && std::abs(fine.eigenvalues[stable] - coarse[stable]) < tol) {
            ++stable;
        }
        if (stable >= static_cast<std::size_t>(k)) {
            fine.converged_count = static_cast<int>(stable);
            fine.eigenvalues.resize(static_cast<std::size_t>(k));
            fine.parities.resize(static_cast<std::size_t>(k));
            return fine;
        }
        std::vector<double> next = fine.eigenvalues;
        if (doubling == 2) {
            coarse.resize(static_cast<std::size_t>(k));
            next.resize(static_cast<std::size_t>(k));
            throw OracleConvergenceError("truncated spectrum not stable after 3 cutoff doublings",
                                         std::move(coarse), std::move(next));
        }
        coarse = std::move(next);
    }
    throw Error("unreachable");
}

double laguerre_dominant(const DhoParams& p, double x, int n) {
    if (n < 0) {
        throw std::invalid_argument("laguerre_dominant needs n >= 0");
    }
    const double kappa = p.kappa;
    const double k2 = kappa * kappa;
    const double alpha = x + k2;

    // binom(alpha, m) for m = 0..n
    std::vector<double> binom(static_cast<std::size_t>(n) + 1);
    binom[0] = 1.0;
    for (int m = 1; m <= n; ++m) {
        binom[static_cast<std::size_t>(m)] = binom[static_cast<std::size_t>(m - 1)] * (alpha - m + 1) / m;
    }
    double sum = 0.0;
    double power = 1.0;  // (-kappa^2)^j / j!
    for (int j = 0; j <= n; ++j) {
        sum += binom[static_cast<std::size_t>(n - j)] * power;
        power *= -k2 / (j + 1);
    }
    return std::pow(std::abs(kappa), alpha) * std::pow(kappa, -n) * sum;
}

double bessel_series(int order, double x) {
    if (order < 0 || order > 60 || !(std::abs(x) <= 10.0)) {
        throw std::domain_error("bessel_series supports 0 <= order <= 60 and |x| <= 10");
    }
    using ld = long double;
    const ld half = static_cast<ld>(x) / 2;
    ld term = 1;
    for (int i = 1; i <= order; ++i) {
        term *= half / i;
    }
    const ld q = -half * half;
    ld sum = term;
    for (int k = 0; k < 400; ++k) {
        term *= q / (static_cast<ld>(k + 1) * static_cast<ld>(k + 1 + order));
        sum += term;
        if (k > std::abs(x) && std::abs(term) <= std::numeric_limits<ld>::epsilon() * std::abs(sum)) {
            break;
        }
        if (term == 0) {
            break;
        }
    }
    return static_cast<double>(sum);
}

std::vector<double> bessel_upward(double x, int n_max) {
    if (n_max < 1 || x == 0.0) {
        throw std::invalid_argument("bessel_upward needs n_max >= 1 and x != 0");
    }
    std::vector<double> j{bessel_series(0, x), bessel_series(1, x)};
    for (int n = 1; n < n_max; ++n) {
        j.push_back((2.0 * n / x) * j[static_cast<std::size_t>(n)] - j[static_cast<std::size_t>(n - 1)]);
    }
    return j;
}

} // namespace trispec
