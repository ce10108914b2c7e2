#pragma once

#include <string>
#include <vector>

namespace trispec {

struct CheckResult {
    std::string id;       // e.g. "AC1"
    std::string title;
    bool passed = false;
    std::string detail;   // measured values and tolerances
    double seconds = 0.0;
};

/// The eight end-to-end criteria (DHO spectrum, quoted Rabi roots, oracle
/// equivalence, Euler/continued-fraction identity, degeneracy at delta = 0,
/// dominant-solution demonstration, Bessel fixture, plane-wave Rabi).
std::vector<CheckResult> run_acceptance_suite();

/// Cross-module invariants: sign symmetry in kappa, monotone DHO branches,
/// Schweber/parity consistency, minimal-solution decay, JC closed form vs matrix,
/// coefficient asymptotics and admissibility of the shipped models.
std::vector<CheckResult> run_property_suite();

} // namespace trispec
