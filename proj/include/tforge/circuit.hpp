// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tforge {

enum class GateKind { X, H, S, Sdg, T, Tdg, CX, CZ, MeasureH, Reset };

struct Condition {
    int clbit = 0;
    int value = 1;
    bool operator==(const Condition&) const = default;
};

struct Instruction {
    GateKind kind = GateKind::X;
    std::vector<int> qubits;
    std::optional<int> writes;
    std::optional<Condition> condition;
    bool operator==(const Instruction&) const = default;
};

enum class Role { Control, Target, Ancilla };

struct QubitRole {
    Role role = Role::Control;
    int index = 0;  // 1-based control number, ignored otherwise
    bool operator==(const QubitRole&) const = default;
};

class CircuitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

int arity(GateKind kind);
const char* kind_name(GateKind kind);
std::optional<GateKind> kind_from_name(const std::string& name);
bool is_t_gate(GateKind kind);

// builders
Instruction gate(GateKind kind, std::vector<int> qubits);
Instruction measure_h(int qubit, int clbit);
Instruction conditioned(Instruction instr, int clbit, int value);

// reversed, daggered copy; throws on MeasureH/Reset
std::vector<Instruction> inverse(const std::vector<Instruction>& seq);

class Circuit {
  public:
    Circuit(int num_qubits, int num_clbits);

    // no invariant checks, run validate() afterwards
    static Circuit from_parts(int num_qubits, int num_clbits, std::vector<Instruction> instrs,
                              std::vector<std::optional<QubitRole>> roles);

    int num_qubits() const { return num_qubits_; }
    int num_clbits() const { return num_clbits_; }
    const std::vector<Instruction>& instructions() const { return instrs_; }
    std::size_t size() const { return instrs_.size(); }

    // throws CircuitError if instr would break an invariant
    Circuit& append(const Instruction& instr);
    Circuit& append(const std::vector<Instruction>& seq);

    const std::vector<std::optional<QubitRole>>& roles() const { return roles_; }
    void set_role(int qubit, QubitRole role);
    void clear_role(int qubit);
    // controls 0..n-1, then target, then ancilla when present
    void set_standard_roles(int n);

    std::vector<std::string> validate() const;

  private:
    std::optional<std::string> check(const Instruction& instr, const std::vector<bool>& written) const;

    int num_qubits_;
    int num_clbits_;
    std::vector<Instruction> instrs_;
    std::vector<std::optional<QubitRole>> roles_;
    std::vector<bool> written_;
};

std::string to_canonical(const Circuit& c);
Circuit from_canonical(const std::string& text);
std::string to_qasm(const Circuit& c);

}  // namespace tforge
