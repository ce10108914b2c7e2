#include "trispec/models.hpp"

#include "trispec/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace trispec {

namespace {

void require_coupling(double kappa, double omega) {
    if (kappa == 0.0 || !std::isfinite(kappa)) {
        throw ModelError("kappa must be finite and nonzero");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw ModelError("omega must be positive");
    }
}

double inv_np1(long n, double) { return 1.0 / static_cast<double>(n + 1); }

} // namespace

Recurrence dho_recurrence(const DhoParams& p) {
    require_coupling(p.kappa, p.omega);
    const double kappa = p.kappa;
    auto a = [kappa](long n, double x) {
        const auto dn = static_cast<double>(n);
        return (dn - x) / ((dn + 1.0) * kappa);
    };
    return Recurrence("dho", a, inv_np1, AsymptoticProfile{0.0, -1.0, 1.0 / kappa, 1.0});
}

std::vector<double> dho_exact_levels(const DhoParams& p, int l_max) {
    if (l_max < 0) {
        throw ModelError("l_max must be >= 0");
    }
    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(l_max) + 1);
    const double shift = p.kappa * p.kappa;
    for (int l = 0; l <= l_max; ++l) {
        levels.push_back(static_cast<double>(l) - shift);
    }
    return levels;
}

Recurrence rabi_schweber_recurrence(const RabiParams& p) {
    require_coupling(p.kappa, p.omega);
    const double kappa = p.kappa;
    const double d2 = p.delta * p.delta;
    auto a = [kappa, d2](long n, double x) {
        const double s = static_cast<double>(n) - x;
        if (d2 == 0.0) {
            return -(2.0 * kappa + s / (2.0 * kappa)) / static_cast<double>(n + 1);
        }
        if (s == 0.0) {
            throw CoefficientPoleError(n, x, "displaced Rabi coefficient");
        }
        const double f = 2.0 * kappa + (s - d2 / s) / (2.0 * kappa);
        return -f / static_cast<double>(n + 1);
    };
    Recurrence::PoleLocator poles;
    if (d2 != 0.0) {
        poles = [](double lo, double hi) {
            std::vector<double> out;
            for (double n = std::max(0.0, std::ceil(lo)); n < hi; n += 1.0) {
                out.push_back(n);
            }
            return out;
        };
    }
    const double shift = kappa * kappa;
    return Recurrence("rabi", a, inv_np1, AsymptoticProfile{0.0, -1.0, -1.0 / (2.0 * kappa), 1.0},
                      std::move(poles), [shift](double x) { return x - shift; });
}

Recurrence parity_rabi_recurrence(const ParityRabiParams& p) {
    require_coupling(p.kappa, p.omega);
    if (p.parity == Parity::None) {
        throw ModelError("parity-resolved Rabi recurrence needs parity plus or minus");
    }
    const double kappa = p.kappa;
    const double signed_delta = p.parity == Parity::Plus ? p.delta : -p.delta;
    auto a = [kappa, signed_delta](long n, double x) {
        const auto dn = static_cast<double>(n);
        const double alt = (n % 2 == 0) ? signed_delta : -signed_delta;
        return (dn - x + alt) / (kappa * (dn + 1.0));
    };
    return Recurrence(p.parity == Parity::Plus ? "rabi-parity+" : "rabi-parity-", a, inv_np1,
                      AsymptoticProfile{0.0, -1.0, 1.0 / kappa, 1.0}, {}, {}, p.parity);
}

std::vector<double> jc_exact_levels(const JcParams& p, int n_max) {
    if (n_max < 0) {
        throw ModelError("n_max must be >= 0");
    }
    const double mu = 0.5 * p.omega0;
    const double detuning = mu - 0.5 * p.omega;
    std::vector<double> levels{-mu};
    for (int n = 0; n <= n_max; ++n) {
        const double centre = p.omega * (n + 0.5);
        const double split = std::sqrt(detuning * detuning + p.lambda * p.lambda * (n + 1));
        levels.push_back(centre - split);
        levels.push_back(centre + split);
    }
    std::sort(levels.begin(), levels.end());
    return levels;
}

Recurrence bessel_fixture(double z) {
    if (z == 0.0 || !std::isfinite(z)) {
        throw ModelError("bessel fixture needs a finite nonzero argument");
    }
    auto a = [z](long n, double) { return -2.0 * static_cast<double>(n) / z; };
    auto b = [](long, double) { return 1.0; };
    return Recurrence("bessel", a, b, AsymptoticProfile{1.0, 0.0, -2.0 / z, 1.0});
}

namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 6> kModelNames{{
    {ModelKind::Dho, "dho"},
    {ModelKind::Rabi, "rabi"},
    {ModelKind::RabiParity, "rabi-parity"},
    {ModelKind::Jc, "jc"},
    {ModelKind::RabiModified, "rabi-modified"},
    {ModelKind::GenRabi, "gen-rabi"},
}};

} // namespace

std::string_view model_name(ModelKind kind) noexcept {
    for (const auto& [k, name] : kModelNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

std::optional<ModelKind> parse_model(std::string_view name) noexcept {
    for (const auto& [k, n] : kModelNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view parity_selection_name(ParitySelection p) noexcept {
    switch (p) {
    case ParitySelection::Plus:
        return "plus";
    case ParitySelection::Minus:
        return "minus";
    case ParitySelection::Both:
        return "both";
    }
    return "both";
}

std::optional<ParitySelection> parse_parity_selection(std::string_view name) noexcept {
    if (name == "plus" || name == "+") {
        return ParitySelection::Plus;
    }
    if (name == "minus" || name == "-") {
        return ParitySelection::Minus;
    }
    if (name == "both") {
        return ParitySelection::Both;
    }
    return std::nullopt;
}

bool has_recurrence(ModelKind kind) noexcept {
    return kind == ModelKind::Dho || kind == ModelKind::Rabi || kind == ModelKind::RabiParity;
}

std::vector<Recurrence> recurrences_for(ModelKind kind, const ModelParams& params) {
    switch (kind) {
    case ModelKind::Dho:
        return {dho_recurrence({params.kappa, params.omega})};
    case ModelKind::Rabi:
        return {rabi_schweber_recurrence({params.kappa, params.delta, params.omega})};
    case ModelKind::RabiParity: {
        std::vector<Recurrence> out;
        if (params.parity != ParitySelection::Minus) {
            out.push_back(parity_rabi_recurrence({params.kappa, params.delta, params.omega, Parity::Plus}));
        }
        if (params.parity != ParitySelection::Plus) {
            out.push_back(parity_rabi_recurrence({params.kappa, params.delta, params.omega, Parity::Minus}));
        }
        return out;
    }
    case ModelKind::Jc:
    case ModelKind::RabiModified:
    case ModelKind::GenRabi:
        break;
    }
    throw ModelError("model '" + std::string(model_name(kind)) +
                     "' has no three-term recurrence; only oracle (truncated-diagonalization) operations apply");
}

JcParams jc_params_from(const ModelParams& params) {
    return JcParams{params.omega, 2.0 * params.delta * params.omega, params.kappa * params.omega};
}

} // namespace trispec
