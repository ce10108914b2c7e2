#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trispec {

/// Power-law tail of the coefficients: a_n ~ a_coef n^delta, b_n ~ b_coef n^upsilon.
struct AsymptoticProfile {
    double delta = 0.0;
    double upsilon = 0.0;
    double a_coef = 1.0;
    double b_coef = 1.0;

    double tau() const noexcept { return delta - upsilon; }
};

struct AdmissibilityReport {
    bool two_delta_gt_upsilon = false;
    bool tau_ok = false;     // tau >= 1/2
    double tau = 0.0;
    double k = 0.0;          // -b_coef / a_coef
    bool bargmann_ok = false;
    std::string notes;
};

/// Label of a parity-resolved recurrence. None for recurrences that carry no parity.
enum class Parity { None, Plus, Minus };

inline int parity_sign(Parity p) noexcept {
    return p == Parity::Plus ? 1 : p == Parity::Minus ? -1 : 0;
}

/// The three-term recurrence c_{n+1} + a(n,x) c_n + b(n,x) c_{n-1} = 0, n >= 0.
///
/// Immutable once built. The coefficient callables must be pure; instances are
/// shared freely across threads. Besides the coefficients a recurrence carries
/// the abscissas where some a(n,.) is singular (declared by the model, never
/// detected) and the map from its x-variable to the physical energy E/omega.
class Recurrence {
public:
    using Coefficient = std::function<double(long n, double x)>;
    using PoleLocator = std::function<std::vector<double>(double lo, double hi)>;
    using EnergyMap = std::function<double(double x)>;

    Recurrence(std::string name, Coefficient a, Coefficient b, AsymptoticProfile profile,
               PoleLocator poles = {}, EnergyMap energy = {}, Parity parity = Parity::None);

    double a(long n, double x) const { return a_(n, x); }
    double b(long n, double x) const { return b_(n, x); }

    const AsymptoticProfile& profile() const noexcept { return profile_; }
    const std::string& name() const noexcept { return name_; }
    Parity parity() const noexcept { return parity_; }

    /// Sorted pole abscissas inside [lo, hi).
    std::vector<double> explicit_poles(double lo, double hi) const;
    bool has_explicit_poles() const noexcept { return static_cast<bool>(poles_); }

    /// E/omega for a value of the recurrence variable; identity unless the model says otherwise.
    double energy(double x) const { return energy_ ? energy_(x) : x; }

    /// Recurrence backed by finite tables; a(n,.) = a_table[n], b(n,.) = b_table[n]
    /// (b_table[0] is unused). Indices past the tables throw std::out_of_range.
    static Recurrence from_tables(std::vector<double> a_table, std::vector<double> b_table,
                                  AsymptoticProfile profile = {});

private:
    std::string name_;
    Coefficient a_;
    Coefficient b_;
    AsymptoticProfile profile_;
    PoleLocator poles_;
    EnergyMap energy_;
    Parity parity_;
};

/// Classify an asymptotic profile against the power-law admissibility conditions.
/// Advisory only: nothing downstream refuses a recurrence that fails here.
AdmissibilityReport classify(const AsymptoticProfile& profile);

/// Leading-order estimate of r_n = m_{n+1}/m_n for the minimal solution,
/// -b(n+1,x)/a(n+1,x). Seeds backward continued-fraction evaluation.
double tail_ratio_estimate(const Recurrence& rec, long n, double x);

} // namespace trispec
