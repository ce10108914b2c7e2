#pragma once

#include "trispec/recurrence.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace trispec {

/// Displaced harmonic oscillator, kappa = lambda/omega.
struct DhoParams {
    double kappa = 0.0;
    double omega = 1.0;
};

/// Rabi model, kappa = lambda/omega, delta = mu/omega.
struct RabiParams {
    double kappa = 0.0;
    double delta = 0.0;
    double omega = 1.0;
};

struct ParityRabiParams {
    double kappa = 0.0;
    double delta = 0.0;
    double omega = 1.0;
    Parity parity = Parity::Plus;
};

/// Generalized Rabi model with deformation theta (in units of omega).
struct GenRabiParams {
    double kappa = 0.0;
    double delta = 0.0;
    double omega = 1.0;
    double theta = 0.0;
};

/// Jaynes-Cummings model; the spin splitting is mu = omega0/2.
struct JcParams {
    double omega = 1.0;
    double omega0 = 1.0;
    double lambda = 0.0;
};

// c_{n+1} + (n - x)/((n+1) kappa) c_n + c_{n-1}/(n+1) = 0, x = E/omega.
Recurrence dho_recurrence(const DhoParams& p);

/// l - kappa^2 for l = 0..l_max.
std::vector<double> dho_exact_levels(const DhoParams& p, int l_max);

/// Rabi model in the displaced (Schweber) form:
/// a_n = -f_n(x)/(n+1), b_n = 1/(n+1),
/// f_n(x) = 2 kappa + (n - x - delta^2/(n - x)) / (2 kappa).
/// Poles of f_n at x = n are declared; E/omega = x - kappa^2.
Recurrence rabi_schweber_recurrence(const RabiParams& p);

/// Parity-resolved Rabi recurrence, a_n = [n - x +/- (-1)^n delta] / (kappa (n+1)),
/// b_n = 1/(n+1), x = E/omega.
Recurrence parity_rabi_recurrence(const ParityRabiParams& p);

/// Uncoupled level -mu followed by the dressed pairs
/// omega (n + 1/2) +/- sqrt((mu - omega/2)^2 + lambda^2 (n+1)), n = 0..n_max; sorted.
std::vector<double> jc_exact_levels(const JcParams& p, int n_max);

/// a_n = -2n/z, b_n = 1; the minimal solution is J_n(z). The evaluation variable is ignored.
Recurrence bessel_fixture(double z);

// ---------------------------------------------------------------------------
// Model catalog as seen by the spectrum driver, the oracle and the CLI.

enum class ModelKind { Dho, Rabi, RabiParity, Jc, RabiModified, GenRabi };

enum class ParitySelection { Plus, Minus, Both };

/// Physical parameters in units of omega. Fields a model does not use are ignored.
struct ModelParams {
    double kappa = 0.0;
    double delta = 0.0;
    double omega = 1.0;
    double theta = 0.0;
    ParitySelection parity = ParitySelection::Both;
};

std::string_view model_name(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model(std::string_view name) noexcept;
std::string_view parity_selection_name(ParitySelection p) noexcept;
std::optional<ParitySelection> parse_parity_selection(std::string_view name) noexcept;

/// Whether the model ships a three-term recurrence (as opposed to oracle-only models).
bool has_recurrence(ModelKind kind) noexcept;

/// Recurrence(s) for an F-based model: one for dho and rabi, one per selected
/// parity for rabi-parity. Throws ModelError for oracle-only models.
std::vector<Recurrence> recurrences_for(ModelKind kind, const ModelParams& params);

JcParams jc_params_from(const ModelParams& params);

} // namespace trispec
