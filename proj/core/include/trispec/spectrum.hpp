#pragma once

#include "trispec/ffunc.hpp"
#include "trispec/models.hpp"
#include "trispec/recurrence.hpp"

#include <string>
#include <utility>
#include <vector>

namespace trispec {

struct ScanOptions {
    /// One pass of midpoint insertion where |dF| between neighbours exceeds 10x the median.
    bool refine = true;
};

struct ScanResult {
    std::vector<double> xs;            // strictly increasing
    std::vector<FEvaluation> fs;
    std::vector<int> branch_ids;       // non-decreasing

    std::size_t size() const noexcept { return xs.size(); }
    int branch_count() const noexcept { return branch_ids.empty() ? 0 : branch_ids.back() + 1; }
};

/// Evaluate F on a uniform grid of `points` nodes over [x_lo, x_hi] and split it into
/// branches. A new branch starts at every declared pole, around every point that did
/// not converge, and at sign changes whose secant slope opposes the slope on both
/// sides (a jump through infinity rather than a passage through zero).
/// Nodes that sit on a declared pole or on a zero coefficient are nudged by
/// 1e-9*(x_hi - x_lo).
ScanResult scan(const Recurrence& rec, double x_lo, double x_hi, int points,
                const SeriesConfig& cfg = {}, const ScanOptions& opts = {});

enum class RootKind { Zero, PoleCrossing };

const char* to_string(RootKind k) noexcept;

struct Root {
    double x = 0.0;
    double energy = 0.0;      // E/omega through the recurrence's energy map
    double residual = 0.0;    // |F(x)|
    double lo = 0.0;
    double hi = 0.0;
    int branch_id = 0;
    Parity parity = Parity::None;
    RootKind classification = RootKind::Zero;
    std::string note;
};

struct RootOptions {
    double x_tol = 1e-12;
    double zero_tol_factor = 1e-6;
    SeriesConfig series;
};

/// Bisect every sign change of converged F values inside a branch down to x_tol.
///
/// A bracket is accepted as Zero when the refined |F| is at most zero_tol_factor times
/// the larger endpoint value of the original grid bracket and the larger endpoint value
/// of the shrinking bracket never grew over the last five steps. Everything else is a
/// PoleCrossing, kept for diagnostics; so is any root within 10*x_tol of a declared pole.
std::vector<Root> find_roots(const ScanResult& sr, const Recurrence& rec, const RootOptions& opts = {});

struct Window {
    double x_lo = -1.0;
    double x_hi = 6.0;
    int points = 4000;
};

struct SpectrumConfig {
    SeriesConfig series;
    double x_tol = 1e-12;
    double zero_tol_factor = 1e-6;
    bool refine = true;
};

/// Scan + root search for every recurrence of the model. The window is in the
/// recurrence variable x. Roots of all parities are merged in ascending energy.
std::vector<Root> resolve_spectrum(ModelKind model, const ModelParams& params, const Window& window,
                                   const SpectrumConfig& cfg = {});

/// Zeros only.
std::vector<Root> regular_levels(const std::vector<Root>& roots);

struct Sweep {
    std::string name;   // delta, kappa or theta
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;      // number of intervals; steps + 1 sweep values

    /// Parses "name:lo:hi:steps"; throws std::invalid_argument.
    static Sweep parse(const std::string& text);
    std::vector<double> values() const;
};

struct Track {
    int id = 0;
    /// (sweep index, index into FlowResult::levels[sweep index]), increasing sweep index.
    std::vector<std::pair<int, int>> points;
};

struct FlowResult {
    std::vector<double> sweep_values;
    std::vector<std::vector<Root>> levels;   // Zeros at each sweep value, ascending energy
    std::vector<Track> tracks;
};

struct FlowOptions {
    /// Largest energy change a track may make between adjacent sweep values.
    double max_jump = 0.5;
};

/// Spectrum at every sweep value, with levels linked into tracks by nearest energy
/// between neighbouring sweep values (parity-preserving on ties).
FlowResult flow(ModelKind model, const ModelParams& params, const Sweep& sweep, const Window& window,
                const SpectrumConfig& cfg = {}, const FlowOptions& opts = {});

} // namespace trispec
