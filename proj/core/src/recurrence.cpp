#include "trispec/recurrence.hpp"

#include "trispec/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace trispec {

Recurrence::Recurrence(std::string name, Coefficient a, Coefficient b, AsymptoticProfile profile,
                       PoleLocator poles, EnergyMap energy, Parity parity)
    : name_(std::move(name)),
      a_(std::move(a)),
      b_(std::move(b)),
      profile_(profile),
      poles_(std::move(poles)),
      energy_(std::move(energy)),
      parity_(parity) {
    if (!a_ || !b_) {
        throw ModelError("recurrence '" + name_ + "' needs both coefficient functions");
    }
}

std::vector<double> Recurrence::explicit_poles(double lo, double hi) const {
    if (!poles_ || hi < lo) {
        return {};
    }
    auto out = poles_(lo, hi);
    std::sort(out.begin(), out.end());
    return out;
}

Recurrence Recurrence::from_tables(std::vector<double> a_table, std::vector<double> b_table,
                                   AsymptoticProfile profile) {
    auto lookup = [](const std::vector<double>& t, long n) {
        if (n < 0 || static_cast<std::size_t>(n) >= t.size()) {
            throw std::out_of_range("tabulated recurrence has no coefficient at level " +
                                    std::to_string(n));
        }
        return t[static_cast<std::size_t>(n)];
    };
    return Recurrence(
        "tabulated",
        [a = std::move(a_table), lookup](long n, double) { return lookup(a, n); },
        [b = std::move(b_table), lookup](long n, double) { return lookup(b, n); },
        profile);
}

AdmissibilityReport classify(const AsymptoticProfile& profile) {
    if (profile.a_coef == 0.0) {
        throw ModelError("asymptotically degenerate leading coefficient");
    }
    AdmissibilityReport r;
    r.tau = profile.tau();
    r.k = -profile.b_coef / profile.a_coef;
    r.two_delta_gt_upsilon = 2.0 * profile.delta > profile.upsilon;
    r.tau_ok = r.tau >= 0.5;
    r.bargmann_ok = r.tau > 0.5 || (r.tau == 0.5 && std::abs(r.k) < 1.0);

    std::ostringstream notes;
    if (!r.two_delta_gt_upsilon) {
        notes << "2*delta > upsilon fails; b_n/a_n need not vanish. ";
    }
    if (!r.tau_ok) {
        notes << "tau = " << r.tau << " < 1/2; the minimal solution may not define an entire function"
              << (r.tau > 0.0 ? " (F is still defined when m_0 != 0). " : ". ");
    }
    if (r.tau == 0.5) {
        notes << "tau = 1/2: membership requires |k| < 1 (k = " << r.k << ")"
              << (r.bargmann_ok ? ". " : ", which fails. ");
    }
    r.notes = notes.str();
    if (!r.notes.empty() && r.notes.back() == ' ') {
        r.notes.pop_back();
    }
    return r;
}

double tail_ratio_estimate(const Recurrence& rec, long n, double x) {
    if (n < 1) {
        throw std::invalid_argument("tail_ratio_estimate needs n >= 1");
    }
    const double a = rec.a(n + 1, x);
    if (a == 0.0 || !std::isfinite(a)) {
        throw CoefficientPoleError(n + 1, x, "tail seed undefined; increase n");
    }
    return -rec.b(n + 1, x) / a;
}

} // namespace trispec
