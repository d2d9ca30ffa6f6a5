// Machine verification: the ten acceptance checks of the toolkit and the
// config-parameterized property checks behind `rotorsym verify`. Every
// check reports its measured defect next to its tolerance so reports stay
// auditable; nothing is asserted without a number.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rotorsym/problem.hpp"

namespace rotorsym::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
};

// The ten toolkit-wide acceptance checks (fixed seeds throughout).
// data_dir locates the stored regression loop CSV; pass "" to fall back to
// the embedded copy of the same samples.
std::vector<CheckResult> acceptance_checks(const std::string& data_dir);

// Checks that make sense for one user-supplied problem: twist-periodicity
// of the vector potential, canonical/force picture agreement, the defining
// identities of the Hamiltonian and Euler fields, and the Hamiltonian
// elimination identity. `label` prefixes the check names in reports.
std::vector<CheckResult> spec_checks(const domain::ProblemSpec& spec,
                                     const std::string& label);

struct NamedSpec {
    std::string name;
    domain::ProblemSpec spec;
};

// Built-in copies of the shipped preset configurations.
std::vector<NamedSpec> shipped_presets();

// Fixed 64-sample phase loop of the byte-identity regression check, parsed
// from an embedded CSV snapshot (no libm calls involved).
domain::DiscreteLoop regression_loop();
// Symplectic action of regression_loop() on the eliminated wobble preset,
// frozen as a hexfloat; the regression check compares for bit equality.
double regression_expected();

void write_report(std::ostream& out, const std::vector<CheckResult>& checks);
bool all_pass(const std::vector<CheckResult>& checks);

} // namespace rotorsym::verify
