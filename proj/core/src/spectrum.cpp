#include "trispec/spectrum.hpp"

#include "trispec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace trispec {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double median(std::vector<double> v) {
    if (v.empty()) {
        return 0.0;
    }
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

bool pole_between(const std::vector<double>& poles, double lo, double hi) {
    auto it = std::upper_bound(poles.begin(), poles.end(), lo);
    return it != poles.end() && *it < hi;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// Evaluates F at x, nudging off declared poles and zero coefficients.
class PointEvaluator {
public:
    PointEvaluator(const Recurrence& rec, const SeriesConfig& cfg, double x_lo, double x_hi,
                   std::vector<double> poles)
        : rec_(rec), cfg_(cfg), hi_(x_hi), nudge_(1e-9 * (x_hi - x_lo)), poles_(std::move(poles)) {}

    std::pair<double, FEvaluation> operator()(double x) const {
        if (on_pole(x)) {
            x = shifted(x);
        }
        for (int attempt = 0; attempt < 2; ++attempt) {
            try {
                return {x, eval_F_euler(rec_, x, cfg_)};
            } catch (const CoefficientPoleError&) {
                x = shifted(x);
            }
        }
        return {x, FEvaluation{kNaN, 0, SeriesStatus::PoleDetected, kNaN}};
    }

    const std::vector<double>& poles() const noexcept { return poles_; }

private:
    bool on_pole(double x) const {
        return std::any_of(poles_.begin(), poles_.end(),
                           [&](double p) { return std::abs(x - p) < 0.5 * nudge_; });
    }
    double shifted(double x) const { return x + nudge_ <= hi_ ? x + nudge_ : x - nudge_; }

    const Recurrence& rec_;
    const SeriesConfig& cfg_;
    double hi_;
    double nudge_;
    std::vector<double> poles_;
};

std::optional<double> converged_value(const Recurrence& rec, double x, const SeriesConfig& cfg) {
    try {
        const FEvaluation ev = eval_F_euler(rec, x, cfg);
        if (ev.converged()) {
            return ev.value;
        }
    } catch (const CoefficientPoleError&) {
    }
    return std::nullopt;
}

// Orders the samples by x and drops repeated abscissas (first one wins).
void sort_unique(std::vector<double>& xs, std::vector<FEvaluation>& fs) {
    std::vector<std::size_t> order(xs.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> x_out;
    std::vector<FEvaluation> f_out;
    x_out.reserve(xs.size());
    f_out.reserve(fs.size());
    for (std::size_t i : order) {
        if (!x_out.empty() && xs[i] == x_out.back()) {
            continue;
        }
        x_out.push_back(xs[i]);
        f_out.push_back(fs[i]);
    }
    xs = std::move(x_out);
    fs = std::move(f_out);
}

// A pole whose residue is small hides between two grid nodes without a sign change:
// the only trace is one interval whose slope runs against both neighbours. Bisect
// towards the reversed slope until the bracket is a few ulps wide. The samples are
// merged into the scan, which puts nodes on both sides of the pole and exposes a zero
// sitting right next to it. Returns the final (lo, hi) pole brackets, sorted.
template <class Evaluate, class Smooth>
std::vector<std::pair<double, double>> localize_hidden_poles(ScanResult& sr, const Evaluate& evaluate,
                                                             const Smooth& smooth_pair) {
    const std::size_t n = sr.size();
    auto slope = [&](std::size_t i) -> int {
        if (i + 1 >= n || !smooth_pair(i)) {
            return 0;
        }
        return sign_of(sr.fs[i + 1].value - sr.fs[i].value);
    };

    std::vector<std::pair<double, double>> brackets;
    std::vector<std::pair<double, FEvaluation>> extra;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int s = slope(i);
        const int left = i > 0 ? slope(i - 1) : 0;
        const int right = slope(i + 1);
        if (s == 0 || (left == 0 && right == 0) || (left != 0 && left != -s) || (right != 0 && right != -s)) {
            continue;
        }
        const int background = -s;
        double lo = sr.xs[i];
        double hi = sr.xs[i + 1];
        double flo = sr.fs[i].value;
        double fhi = sr.fs[i + 1].value;
        bool pole = false;
        for (int step = 0; step < 80; ++step) {
            if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lo))) {
                pole = true;
                break;
            }
            auto [xm, fm] = evaluate(0.5 * (lo + hi));
            if (!(xm > lo && xm < hi)) {
                break;
            }
            extra.emplace_back(xm, fm);
            if (!fm.converged()) {
                break;   // a failed node already separates the branches
            }
            if (sign_of(fm.value - flo) == -background) {
                hi = xm;
                fhi = fm.value;
            } else if (sign_of(fhi - fm.value) == -background) {
                lo = xm;
                flo = fm.value;
            } else {
                break;   // smooth after all
            }
        }
        if (pole) {
            brackets.emplace_back(lo, hi);
        }
    }
    if (extra.empty()) {
        return brackets;
    }

    for (auto& [x, f] : extra) {
        sr.xs.push_back(x);
        sr.fs.push_back(f);
    }
    sort_unique(sr.xs, sr.fs);
    std::sort(brackets.begin(), brackets.end());
    return brackets;
}

} // namespace

const char* to_string(RootKind k) noexcept {
    return k == RootKind::Zero ? "Zero" : "PoleCrossing";
}

ScanResult scan(const Recurrence& rec, double x_lo, double x_hi, int points, const SeriesConfig& cfg,
                const ScanOptions& opts) {
    if (!(x_lo < x_hi)) {
        throw std::invalid_argument("scan needs x_lo < x_hi");
    }
    if (points < 16) {
        throw std::invalid_argument("scan needs at least 16 points");
    }
    cfg.validate();

    const double width = x_hi - x_lo;
    const PointEvaluator evaluate(rec, cfg, x_lo, x_hi, rec.explicit_poles(x_lo, x_hi));
    const auto& poles = evaluate.poles();

    ScanResult sr;
    sr.xs.reserve(static_cast<std::size_t>(points));
    sr.fs.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double x = (i == points - 1) ? x_hi : x_lo + width * i / (points - 1);
        auto [xe, fe] = evaluate(x);
        sr.xs.push_back(xe);
        sr.fs.push_back(fe);
    }

    auto smooth_pair = [&](std::size_t i) {
        return sr.fs[i].converged() && sr.fs[i + 1].converged() && !pole_between(poles, sr.xs[i], sr.xs[i + 1]);
    };
    std::vector<std::pair<double, double>> pole_brackets;

    if (opts.refine) {
        std::vector<double> jumps;
        for (std::size_t i = 0; i + 1 < sr.size(); ++i) {
            if (smooth_pair(i)) {
                jumps.push_back(std::abs(sr.fs[i + 1].value - sr.fs[i].value));
            }
        }
        const double threshold = 10.0 * median(jumps);
        std::vector<double> xs;
        std::vector<FEvaluation> fs;
        xs.reserve(sr.size());
        fs.reserve(sr.size());
        for (std::size_t i = 0; i < sr.size(); ++i) {
            xs.push_back(sr.xs[i]);
            fs.push_back(sr.fs[i]);
            if (i + 1 < sr.size() && threshold > 0.0 && smooth_pair(i) &&
                std::abs(sr.fs[i + 1].value - sr.fs[i].value) > threshold) {
                auto [xm, fm] = evaluate(0.5 * (sr.xs[i] + sr.xs[i + 1]));
                if (xm > sr.xs[i] && xm < sr.xs[i + 1]) {
                    xs.push_back(xm);
                    fs.push_back(fm);
                }
            }
        }
        // A zero can sit closer to a declared pole than one grid step; approach each
        // pole geometrically from both sides.
        const double step = width / (points - 1);
        for (double p : poles) {
            for (double offset = 0.5 * step; offset > 2e-9 * width; offset *= 0.5) {
                for (double x : {p - offset, p + offset}) {
                    if (x > x_lo && x < x_hi) {
                        auto [xe, fe] = evaluate(x);
                        xs.push_back(xe);
                        fs.push_back(fe);
                    }
                }
            }
        }
        sort_unique(xs, fs);
        sr.xs = std::move(xs);
        sr.fs = std::move(fs);
        pole_brackets = localize_hidden_poles(sr, evaluate, smooth_pair);
    }

    std::vector<double> magnitudes;
    for (const auto& f : sr.fs) {
        if (f.converged()) {
            magnitudes.push_back(std::abs(f.value));
        }
    }
    const double blowup = median(magnitudes);

    const std::size_t n = sr.size();
    auto slope_sign = [&](std::size_t i) -> std::optional<int> {
        if (i + 1 >= n || !smooth_pair(i)) {
            return std::nullopt;
        }
        return sign_of(sr.fs[i + 1].value - sr.fs[i].value);
    };
    auto jump_through_infinity = [&](std::size_t i) {
        const double f0 = sr.fs[i].value;
        const double f1 = sr.fs[i + 1].value;
        if (!(f0 * f1 < 0.0) || std::max(std::abs(f0), std::abs(f1)) <= blowup) {
            return false;
        }
        const int gap = sign_of(f1 - f0);
        const auto left = i > 0 ? slope_sign(i - 1) : std::nullopt;
        const auto right = slope_sign(i + 1);
        if (!left && !right) {
            return false;
        }
        return (!left || *left == -gap) && (!right || *right == -gap);
    };

    sr.branch_ids.assign(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const bool hidden_pole = std::binary_search(pole_brackets.begin(), pole_brackets.end(),
                                                    std::make_pair(sr.xs[i], sr.xs[i + 1]));
        const bool boundary = !smooth_pair(i) || hidden_pole || jump_through_infinity(i);
        sr.branch_ids[i + 1] = sr.branch_ids[i] + (boundary ? 1 : 0);
    }
    return sr;
}

std::vector<Root> find_roots(const ScanResult& sr, const Recurrence& rec, const RootOptions& opts) {
    if (!(opts.x_tol > 0.0)) {
        throw std::invalid_argument("find_roots needs x_tol > 0");
    }
    std::vector<Root> roots;
    if (sr.size() < 2) {
        return roots;
    }
    const auto poles = rec.explicit_poles(sr.xs.front(), sr.xs.back());

    auto finish = [&](Root r) {
        const bool near_pole = std::any_of(poles.begin(), poles.end(),
                                           [&](double p) { return std::abs(r.x - p) <= 10.0 * opts.x_tol; });
        if (near_pole) {
            r.classification = RootKind::PoleCrossing;
            r.note = "possible exceptional point at a coefficient pole";
        }
        r.energy = rec.energy(r.x);
        r.parity = rec.parity();
        roots.push_back(std::move(r));
    };

    for (std::size_t i = 0; i < sr.size(); ++i) {
        if (sr.fs[i].converged() && sr.fs[i].value == 0.0) {
            Root r;
            r.x = r.lo = r.hi = sr.xs[i];
            r.branch_id = sr.branch_ids[i];
            finish(std::move(r));
        }
    }

    for (std::size_t i = 0; i + 1 < sr.size(); ++i) {
        if (sr.branch_ids[i] != sr.branch_ids[i + 1] || !sr.fs[i].converged() || !sr.fs[i + 1].converged()) {
            continue;
        }
        double lo = sr.xs[i];
        double hi = sr.xs[i + 1];
        double flo = sr.fs[i].value;
        double fhi = sr.fs[i + 1].value;
        if (!(flo * fhi < 0.0)) {
            continue;
        }

        Root r;
        r.branch_id = sr.branch_ids[i];
        const double reference = std::max(std::abs(flo), std::abs(fhi));
        std::vector<double> envelope{reference};
        bool usable = true;
        bool exact = false;

        while (hi - lo > opts.x_tol) {
            double mid = 0.5 * (lo + hi);
            auto fm = converged_value(rec, mid, opts.series);
            if (!fm) {
                mid = 0.5 * (lo + mid);
                fm = converged_value(rec, mid, opts.series);
            }
            if (!fm) {
                usable = false;
                r.note = "bisection hit non-converging evaluations twice";
                break;
            }
            if (*fm == 0.0) {
                lo = hi = mid;
                exact = true;
                break;
            }
            if (sign_of(*fm) == sign_of(flo)) {
                lo = mid;
                flo = *fm;
            } else {
                hi = mid;
                fhi = *fm;
            }
            envelope.push_back(std::max(std::abs(flo), std::abs(fhi)));
        }

        r.lo = lo;
        r.hi = hi;
        r.x = 0.5 * (lo + hi);
        const auto fx = converged_value(rec, r.x, opts.series);
        r.residual = fx ? std::abs(*fx) : std::numeric_limits<double>::infinity();

        // The bracket envelope shrinks towards a zero and grows towards a pole.
        const std::size_t window = std::min<std::size_t>(6, envelope.size());
        const auto tail = envelope.end() - static_cast<std::ptrdiff_t>(window);
        const bool shrinking = exact || (std::is_sorted(tail, envelope.end(), std::greater<>()) &&
                                         (window < 2 || envelope.back() < *tail));

        const bool zero = usable && fx && shrinking && r.residual <= opts.zero_tol_factor * reference;
        r.classification = zero ? RootKind::Zero : RootKind::PoleCrossing;
        if (!zero && r.note.empty()) {
            std::ostringstream note;
            note << "sign change without vanishing residual (|F| = " << r.residual << ")";
            r.note = note.str();
        }
        finish(std::move(r));
    }

    // Branches end at declared poles, so a zero sitting on one is never bracketed above.
    // F stays finite there only when the pole's residue vanishes; flag those.
    // The scale |F| is compared against is read off samples well away from the pole,
    // since refinement puts nodes within a few ulps-of-width of it.
    const double h = 10.0 * opts.x_tol;
    const double away = 1e-4 * (sr.xs.back() - sr.xs.front());
    auto scale_near = [&](double p) {
        double scale = 0.0;
        const auto below = std::upper_bound(sr.xs.begin(), sr.xs.end(), p - away);
        if (below != sr.xs.begin()) {
            const auto& f = sr.fs[static_cast<std::size_t>(below - sr.xs.begin()) - 1];
            if (f.converged()) {
                scale = std::max(scale, std::abs(f.value));
            }
        }
        const auto above = std::lower_bound(sr.xs.begin(), sr.xs.end(), p + away);
        if (above != sr.xs.end()) {
            const auto& f = sr.fs[static_cast<std::size_t>(above - sr.xs.begin())];
            if (f.converged()) {
                scale = std::max(scale, std::abs(f.value));
            }
        }
        return scale;
    };
    for (std::size_t i = 0; i + 1 < sr.size(); ++i) {
        if (!sr.fs[i].converged() || !sr.fs[i + 1].converged()) {
            continue;
        }
        for (double p : poles) {
            if (!(sr.xs[i] < p && p < sr.xs[i + 1])) {
                continue;
            }
            const double reference = scale_near(p);
            const auto left = converged_value(rec, p - h, opts.series);
            const auto right = converged_value(rec, p + h, opts.series);
            if (!left || !right) {
                continue;
            }
            const double residual = std::max(std::abs(*left), std::abs(*right));
            if (residual <= opts.zero_tol_factor * reference) {
                Root r;
                r.x = p;
                r.lo = p - h;
                r.hi = p + h;
                r.residual = residual;
                r.branch_id = sr.branch_ids[i];
                r.classification = RootKind::PoleCrossing;
                finish(std::move(r));
            }
        }
    }

    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.x < b.x; });
    return roots;
}

std::vector<Root> resolve_spectrum(ModelKind model, const ModelParams& params, const Window& window,
                                   const SpectrumConfig& cfg) {
    const RootOptions ropts{cfg.x_tol, cfg.zero_tol_factor, cfg.series};
    std::vector<Root> all;
    for (const auto& rec : recurrences_for(model, params)) {
        const ScanResult sr = scan(rec, window.x_lo, window.x_hi, window.points, cfg.series, ScanOptions{cfg.refine});
        auto roots = find_roots(sr, rec, ropts);
        all.insert(all.end(), roots.begin(), roots.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
        return std::tie(a.energy, a.x) < std::tie(b.energy, b.x) ||
               (a.energy == b.energy && a.x == b.x && parity_sign(a.parity) > parity_sign(b.parity));
    });
    return all;
}

std::vector<Root> regular_levels(const std::vector<Root>& roots) {
    std::vector<Root> out;
    std::copy_if(roots.begin(), roots.end(), std::back_inserter(out),
                 [](const Root& r) { return r.classification == RootKind::Zero; });
    return out;
}

Sweep Sweep::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 4) {
        throw std::invalid_argument("sweep must look like name:lo:hi:steps, got '" + text + "'");
    }
    Sweep s;
    s.name = parts[0];
    std::size_t used = 0;
    try {
        s.lo = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("lo");
        s.hi = std::stod(parts[2], &used);
        if (used != parts[2].size()) throw std::invalid_argument("hi");
        s.steps = std::stoi(parts[3], &used);
        if (used != parts[3].size()) throw std::invalid_argument("steps");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed sweep '" + text + "'");
    }
    if (s.name != "delta" && s.name != "kappa" && s.name != "theta") {
        throw std::invalid_argument("sweep parameter must be delta, kappa or theta, got '" + s.name + "'");
    }
    if (s.steps < 1 || s.hi < s.lo) {
        throw std::invalid_argument("sweep needs steps >= 1 and lo <= hi");
    }
    return s;
}

std::vector<double> Sweep::values() const {
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        v.push_back(i == steps ? hi : lo + (hi - lo) * i / steps);
    }
    return v;
}

FlowResult flow(ModelKind model, const ModelParams& params, const Sweep& sweep, const Window& window,
                const SpectrumConfig& cfg, const FlowOptions& opts) {
    FlowResult fr;
    fr.sweep_values = sweep.values();

    for (double value : fr.sweep_values) {
        ModelParams p = params;
        if (sweep.name == "delta") {
            p.delta = value;
        } else if (sweep.name == "kappa") {
            p.kappa = value;
        } else if (sweep.name == "theta") {
            if (model != ModelKind::GenRabi) {
                throw ModelError("theta only applies to gen-rabi");
            }
            p.theta = value;
        } else {
            throw std::invalid_argument("unknown sweep parameter '" + sweep.name + "'");
        }
        fr.levels.push_back(regular_levels(resolve_spectrum(model, p, window, cfg)));
    }

    // open[t] = index into levels[s-1] currently continued by track t, or -1 once ended.
    std::vector<int> open;
    auto start_track = [&](int s, int j) {
        fr.tracks.push_back(Track{static_cast<int>(fr.tracks.size()), {{s, j}}});
        open.push_back(j);
    };
    for (int j = 0; j < static_cast<int>(fr.levels[0].size()); ++j) {
        start_track(0, j);
    }

    for (int s = 1; s < static_cast<int>(fr.levels.size()); ++s) {
        const auto& prev = fr.levels[static_cast<std::size_t>(s - 1)];
        const auto& cur = fr.levels[static_cast<std::size_t>(s)];

        struct Candidate {
            double cost;
            int track;
            int j;
        };
        std::vector<Candidate> candidates;
        for (int t = 0; t < static_cast<int>(open.size()); ++t) {
            if (open[static_cast<std::size_t>(t)] < 0) {
                continue;
            }
            const Root& from = prev[static_cast<std::size_t>(open[static_cast<std::size_t>(t)])];
            for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
                const Root& to = cur[static_cast<std::size_t>(j)];
                const double d = std::abs(to.energy - from.energy);
                if (d > opts.max_jump) {
                    continue;
                }
                const bool switches_parity = from.parity != to.parity;
                candidates.push_back({d + (switches_parity ? opts.max_jump : 0.0), t, j});
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            return std::tie(a.cost, a.track, a.j) < std::tie(b.cost, b.track, b.j);
        });

        std::vector<int> next(open.size(), -1);
        std::vector<bool> taken(cur.size(), false);
        for (const auto& c : candidates) {
            if (next[static_cast<std::size_t>(c.track)] >= 0 || taken[static_cast<std::size_t>(c.j)]) {
                continue;
            }
            next[static_cast<std::size_t>(c.track)] = c.j;
            taken[static_cast<std::size_t>(c.j)] = true;
            fr.tracks[static_cast<std::size_t>(c.track)].points.emplace_back(s, c.j);
        }
        open = std::move(next);
        for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
            if (!taken[static_cast<std::size_t>(j)]) {
                start_track(s, j);
            }
        }
    }
    return fr;
}

} // namespace trispec
