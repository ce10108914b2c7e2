#include "trispec_cli/cli.hpp"

#include "trispec/error.hpp"
#include "trispec/ffunc.hpp"
#include "trispec/models.hpp"
#include "trispec/oracle.hpp"
#include "trispec/spectrum.hpp"
#include "trispec/validation.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace trispec::cli {

namespace {

using nlohmann::json;

struct CliConfig {
    std::string command;
    std::string model;
    double kappa = 0.0;
    double delta = 0.0;
    double theta = 0.0;
    double omega = 1.0;
    std::string parity = "both";
    double x_min = -1.0;
    double x_max = 6.0;
    int points = 4000;
    double rel_tol = 1e-14;
    double x_tol = 1e-12;
    int max_terms = 20000;
    std::string sweep;
    std::string out;
    std::string format;
};

/// Bad flag combinations found after parsing.
class ArgumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// JSON numbers cannot be NaN; null stands in for an undefined F.
json jnum(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Plus: return "plus";
        case Parity::Minus: return "minus";
        case Parity::None: break;
    }
    return "none";
}

void add_common(CLI::App* sub, CliConfig& c, bool model_required) {
    auto* model = sub->add_option("--model", c.model, "dho, rabi, rabi-parity, jc, rabi-modified, gen-rabi");
    if (model_required) model->required();
    sub->add_option("--kappa", c.kappa, "coupling lambda/omega");
    sub->add_option("--delta", c.delta, "level splitting mu/omega");
    sub->add_option("--theta", c.theta, "deformation (gen-rabi)");
    sub->add_option("--omega", c.omega, "oscillator frequency")->check(CLI::PositiveNumber);
    sub->add_option("--parity", c.parity, "plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}));
    sub->add_option("--x-min", c.x_min, "window start");
    sub->add_option("--x-max", c.x_max, "window end");
    sub->add_option("--points", c.points, "grid points")->check(CLI::Range(16, 100000000));
    sub->add_option("--rel-tol", c.rel_tol, "series relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--x-tol", c.x_tol, "root bracket width")->check(CLI::PositiveNumber);
    sub->add_option("--max-terms", c.max_terms, "series term cap")->check(CLI::PositiveNumber);
    sub->add_option("--sweep", c.sweep, "name:lo:hi:steps");
    sub->add_option("--out", c.out, "output file (stdout if absent)");
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

struct Resolved {
    ModelKind model = ModelKind::Dho;
    ModelParams params;
    SpectrumConfig spectrum;
};

Resolved resolve(const CliConfig& c) {
    Resolved r;
    const auto kind = parse_model(c.model);
    if (!kind) throw ArgumentError("unknown model '" + c.model + "'");
    r.model = *kind;
    r.params.kappa = c.kappa;
    r.params.delta = c.delta;
    r.params.theta = c.theta;
    r.params.omega = c.omega;
    r.params.parity = *parse_parity_selection(c.parity);
    r.spectrum.series.rel_tol = c.rel_tol;
    r.spectrum.series.max_terms = c.max_terms;
    r.spectrum.x_tol = c.x_tol;
    if (!(c.x_min < c.x_max)) throw ArgumentError("--x-min must be below --x-max");
    return r;
}

void require_recurrence(const Resolved& r, const std::string& command) {
    if (!has_recurrence(r.model)) {
        throw ArgumentError("model '" + std::string(model_name(r.model)) + "' has no three-term recurrence; '" +
                            command + "' needs F(x). Use 'validate --model " + std::string(model_name(r.model)) +
                            "' for its truncated-matrix spectrum");
    }
}

json params_json(const Resolved& r) {
    return json{{"kappa", r.params.kappa},
                {"delta", r.params.delta},
                {"theta", r.params.theta},
                {"omega", r.params.omega},
                {"parity", std::string(parity_selection_name(r.params.parity))}};
}

json root_json(const Root& root) {
    json j{{"x", root.x},
           {"energy", root.energy},
           {"parity", parity_name(root.parity)},
           {"residual", jnum(root.residual)},
           {"bracket", json::array({root.lo, root.hi})},
           {"classification", to_string(root.classification)}};
    if (!root.note.empty()) j["note"] = root.note;
    return j;
}

void cmd_scan(const CliConfig& c, std::ostream& os) {
    const Resolved r = resolve(c);
    require_recurrence(r, "scan");
    if (r.model == ModelKind::RabiParity && r.params.parity == ParitySelection::Both) {
        throw ArgumentError("scan of rabi-parity needs --parity plus or --parity minus");
    }
    const auto recs = recurrences_for(r.model, r.params);
    const ScanResult sr = scan(recs.front(), c.x_min, c.x_max, c.points, r.spectrum.series,
                               ScanOptions{r.spectrum.refine});
    if (c.format == "json") {
        json pts = json::array();
        for (std::size_t i = 0; i < sr.size(); ++i) {
            pts.push_back({{"x", sr.xs[i]}, {"F", jnum(sr.fs[i].value)}, {"status", to_string(sr.fs[i].status)},
                           {"branch_id", sr.branch_ids[i]}});
        }
        os << json{{"model", c.model}, {"params", params_json(r)}, {"points", pts}}.dump(2) << '\n';
        return;
    }
    os << "x,F,status,branch_id\n";
    for (std::size_t i = 0; i < sr.size(); ++i) {
        os << num(sr.xs[i]) << ',' << num(sr.fs[i].value) << ',' << to_string(sr.fs[i].status) << ','
           << sr.branch_ids[i] << '\n';
    }
}

void cmd_roots(const CliConfig& c, std::ostream& os) {
    const Resolved r = resolve(c);
    require_recurrence(r, "roots");
    const auto roots = resolve_spectrum(r.model, r.params, Window{c.x_min, c.x_max, c.points}, r.spectrum);
    if (c.format == "csv") {
        os << "x,energy,parity,residual,lo,hi,classification\n";
        for (const auto& root : roots) {
            os << num(root.x) << ',' << num(root.energy) << ',' << parity_name(root.parity) << ','
               << num(root.residual) << ',' << num(root.lo) << ',' << num(root.hi) << ','
               << to_string(root.classification) << '\n';
        }
        return;
    }
    json list = json::array();
    for (const auto& root : roots) list.push_back(root_json(root));
    os << json{{"model", c.model}, {"params", params_json(r)}, {"roots", list}}.dump(2) << '\n';
}

void cmd_flow(const CliConfig& c, std::ostream& os) {
    const Resolved r = resolve(c);
    require_recurrence(r, "flow");
    if (c.sweep.empty()) throw ArgumentError("flow needs --sweep name:lo:hi:steps");
    Sweep sweep;
    try {
        sweep = Sweep::parse(c.sweep);
    } catch (const std::invalid_argument& e) {
        throw ArgumentError(e.what());
    }
    const FlowResult fr = flow(r.model, r.params, sweep, Window{c.x_min, c.x_max, c.points}, r.spectrum);

    struct Row {
        int sweep_index;
        int track_id;
        const Root* root;
    };
    std::vector<Row> rows;
    for (const auto& t : fr.tracks) {
        for (const auto& [s, j] : t.points) {
            rows.push_back({s, t.id, &fr.levels[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.sweep_index != b.sweep_index ? a.sweep_index < b.sweep_index : a.track_id < b.track_id;
    });

    if (c.format == "json") {
        json list = json::array();
        for (const auto& row : rows) {
            list.push_back({{"sweep_value", fr.sweep_values[static_cast<std::size_t>(row.sweep_index)]},
                            {"track_id", row.track_id},
                            {"x_root", row.root->x},
                            {"energy", row.root->energy},
                            {"parity", parity_name(row.root->parity)},
                            {"residual", jnum(row.root->residual)}});
        }
        os << json{{"model", c.model}, {"params", params_json(r)}, {"sweep", sweep.name}, {"levels", list}}.dump(2)
           << '\n';
        return;
    }
    os << "sweep_value,track_id,x_root,energy,parity,residual\n";
    for (const auto& row : rows) {
        os << num(fr.sweep_values[static_cast<std::size_t>(row.sweep_index)]) << ',' << row.track_id << ','
           << num(row.root->x) << ',' << num(row.root->energy) << ',' << parity_name(row.root->parity) << ','
           << num(row.root->residual) << '\n';
    }
}

// Truncated-matrix levels up to e_hi, growing the cutoff until the converged prefix reaches it.
OracleSpectrum oracle_levels_up_to(const Resolved& r, double e_hi) {
    for (int cutoff = 200; cutoff <= 1600; cutoff *= 2) {
        const auto h = build_hamiltonian(r.model, r.params, cutoff);
        const int k = static_cast<int>(h.dimension() / 4);
        OracleSpectrum s = eigen_lowest(h, k, 1e-10);
        if (s.eigenvalues.back() > e_hi) return s;
    }
    throw ConvergenceError("truncated-matrix spectrum does not reach the window top", e_hi, e_hi);
}

int cmd_validate(const CliConfig& c, std::ostream& os, std::ostream& err) {
    if (c.model.empty()) {
        bool ok = true;
        json report = json::array();
        std::ostringstream text;
        for (const auto& suite : {run_acceptance_suite(), run_property_suite()}) {
            for (const auto& check : suite) {
                ok = ok && check.passed;
                text << (check.passed ? "PASS " : "FAIL ") << check.id << "  " << check.title << "  ["
                     << check.detail << "]\n";
                report.push_back({{"id", check.id},
                                  {"title", check.title},
                                  {"passed", check.passed},
                                  {"detail", check.detail},
                                  {"seconds", check.seconds}});
            }
        }
        if (c.format == "json") {
            os << json{{"passed", ok}, {"checks", report}}.dump(2) << '\n';
        } else {
            os << text.str();
        }
        return ok ? kOk : kValidationFailure;
    }

    const Resolved r = resolve(c);
    std::optional<Recurrence> rec;
    if (has_recurrence(r.model)) rec = recurrences_for(r.model, r.params).front();
    const double e_lo = rec ? rec->energy(c.x_min) : c.x_min;
    const double e_hi = rec ? rec->energy(c.x_max) : c.x_max;
    const OracleSpectrum oracle = oracle_levels_up_to(r, e_hi);

    const double tol = 1e-6;
    std::vector<std::size_t> wanted;
    for (std::size_t i = 0; i < oracle.eigenvalues.size(); ++i) {
        const double e = oracle.eigenvalues[i];
        if (e < e_lo + tol || e > e_hi - tol) continue;
        if (r.model == ModelKind::RabiParity && r.params.parity != ParitySelection::Both) {
            const Parity want = r.params.parity == ParitySelection::Plus ? Parity::Plus : Parity::Minus;
            if (recurrence_parity_for(oracle.parities[i]) != want) continue;
        }
        if (rec && rec->has_explicit_poles()) {
            const double x = e - rec->energy(0.0);
            const auto poles = rec->explicit_poles(x - tol, x + tol);
            if (!poles.empty()) continue;   // exceptional level; F has a pole there
        }
        wanted.push_back(i);
    }

    json levels = json::array();
    bool ok = true;
    if (!rec) {
        for (std::size_t i : wanted) {
            levels.push_back({{"energy", oracle.eigenvalues[i]}, {"exchange_parity", oracle.parities[i]}});
        }
    } else {
        const auto zeros =
            regular_levels(resolve_spectrum(r.model, r.params, Window{c.x_min, c.x_max, c.points}, r.spectrum));
        std::vector<bool> used(oracle.eigenvalues.size(), false);
        for (const auto& z : zeros) {
            if (z.energy < e_lo + tol || z.energy > e_hi - tol) continue;
            json entry{{"x", z.x}, {"energy", z.energy}, {"parity", parity_name(z.parity)}};
            bool found = false;
            for (std::size_t i : wanted) {
                const bool parity_ok = oracle.parities[i] == 0 || z.parity == Parity::None ||
                                       recurrence_parity_for(oracle.parities[i]) == z.parity;
                if (!used[i] && parity_ok && std::abs(oracle.eigenvalues[i] - z.energy) <= tol) {
                    used[i] = true;
                    found = true;
                    entry["oracle_energy"] = oracle.eigenvalues[i];
                    break;
                }
            }
            if (!found) {
                ok = false;
                err << "spurious zero at energy " << num(z.energy) << '\n';
                entry["oracle_energy"] = nullptr;
            }
            levels.push_back(entry);
        }
        for (std::size_t i : wanted) {
            if (!used[i]) {
                ok = false;
                err << "missing level at energy " << num(oracle.eigenvalues[i]) << '\n';
                levels.push_back({{"energy", nullptr}, {"oracle_energy", oracle.eigenvalues[i]}});
            }
        }
    }
    if (c.format == "csv") {
        os << "energy,oracle_energy\n";
        for (const auto& l : levels) {
            const auto field = [&](const char* key) {
                return l.contains(key) && l[key].is_number() ? num(l[key].get<double>()) : std::string();
            };
            os << field("energy") << ',' << (rec ? field("oracle_energy") : field("energy")) << '\n';
        }
    } else {
        os << json{{"model", c.model},
                   {"params", params_json(r)},
                   {"oracle_cutoff", oracle.cutoff},
                   {"passed", ok},
                   {"levels", levels}}
                  .dump(2)
           << '\n';
    }
    return ok ? kOk : kValidationFailure;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig c;
    CLI::App app{"Spectra of three-term-recurrence quantum models as zeros of F(x)", "trispec"};
    app.require_subcommand(1, 1);
    auto* scan_cmd = app.add_subcommand("scan", "tabulate F(x) on a grid");
    auto* roots_cmd = app.add_subcommand("roots", "zeros of F(x) in a window");
    auto* flow_cmd = app.add_subcommand("flow", "roots along a parameter sweep, linked into tracks");
    auto* validate_cmd = app.add_subcommand("validate", "acceptance suite, or F zeros vs truncated diagonalization");
    add_common(scan_cmd, c, true);
    add_common(roots_cmd, c, true);
    add_common(flow_cmd, c, true);
    add_common(validate_cmd, c, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (scan_cmd->parsed()) {
            if (c.format.empty()) c.format = "csv";
            cmd_scan(c, buffer);
        } else if (roots_cmd->parsed()) {
            if (c.format.empty()) c.format = "json";
            cmd_roots(c, buffer);
        } else if (flow_cmd->parsed()) {
            if (c.format.empty()) c.format = "csv";
            cmd_flow(c, buffer);
        } else {
            if (c.format.empty()) c.format = c.model.empty() ? "csv" : "json";
            code = cmd_validate(c, buffer, err);
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }

    if (c.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(c.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << c.out << "' for writing\n";
            return kArgumentError;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace trispec::cli
