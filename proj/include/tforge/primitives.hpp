// SPDX-License-Identifier: MIT
#pragma once

#include "tforge/circuit.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace tforge {

enum class MacroName { CCX, CCiX, CCiX_dg, C3iX, C3iX_dg, CCiZ, CSdg };

struct MacroGate {
    MacroName name = MacroName::CCX;
    std::vector<int> controls;
    int target = 0;
    bool operator==(const MacroGate&) const = default;
};

struct MacroCost {
    int cx = 0;
    int t_count = 0;
    int t_depth = 0;
    bool operator==(const MacroCost&) const = default;
};

struct MacroReport {
    MacroName name;
    bool block_ok = false;     // all-ones control block
    bool diagonal_ok = false;  // other blocks diagonal, unit modulus
    bool inverse_ok = false;
    bool cost_ok = false;
    double block_error = 0.0;
    double diagonal_error = 0.0;
    double inverse_error = 0.0;
    MacroCost counted;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

const char* macro_label(MacroName name);
int macro_controls(MacroName name);
// named inverse where the macro family has one (CCX is its own)
std::optional<MacroName> macro_inverse(MacroName name);
const std::vector<MacroName>& all_macros();

std::vector<Instruction> expand(const MacroGate& m);
MacroCost macro_cost(MacroName name);

// exact CC(-iZ) on (a,b;t), the M_H=1 correction of the mixed ladder
std::vector<Instruction> cc_minus_iz(int a, int b, int t);

// cost of a flat primitive sequence; t_depth by per-qubit layering
MacroCost sequence_cost(const std::vector<Instruction>& seq);

// dense unitary of a measurement-free sequence, qubit 0 least significant
Eigen::MatrixXcd dense_unitary(const std::vector<Instruction>& seq, int num_qubits);

// defining matrix on controls 0..k-1 and target k
Eigen::MatrixXcd macro_unitary(MacroName name);

MacroReport verify_macro(MacroName name, double tol = 1e-12);

}  // namespace tforge
