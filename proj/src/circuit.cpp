// SPDX-License-Identifier: MIT
#include "tforge/circuit.hpp"

#include <algorithm>
#include <array>

namespace tforge {

namespace {

struct KindInfo {
    GateKind kind;
    const char* name;
    int arity;
};

constexpr std::array<KindInfo, 10> kKinds{{
    {GateKind::X, "X", 1},
    {GateKind::H, "H", 1},
    {GateKind::S, "S", 1},
    {GateKind::Sdg, "SDG", 1},
    {GateKind::T, "T", 1},
    {GateKind::Tdg, "TDG", 1},
    {GateKind::CX, "CX", 2},
    {GateKind::CZ, "CZ", 2},
    {GateKind::MeasureH, "MEASUREH", 1},
    {GateKind::Reset, "RESET", 1},
}};

const KindInfo& info(GateKind kind) {
    return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

int arity(GateKind kind) { return info(kind).arity; }

const char* kind_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> kind_from_name(const std::string& name) {
    for (const auto& k : kKinds)
        if (name == k.name) return k.kind;
    return std::nullopt;
}

bool is_t_gate(GateKind kind) { return kind == GateKind::T || kind == GateKind::Tdg; }

Instruction gate(GateKind kind, std::vector<int> qubits) {
    Instruction in;
    in.kind = kind;
    in.qubits = std::move(qubits);
    return in;
}

Instruction measure_h(int qubit, int clbit) {
    Instruction in = gate(GateKind::MeasureH, {qubit});
    in.writes = clbit;
    return in;
}

Instruction conditioned(Instruction instr, int clbit, int value) {
    instr.condition = Condition{clbit, value};
    return instr;
}

std::vector<Instruction> inverse(const std::vector<Instruction>& seq) {
    std::vector<Instruction> out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        Instruction in = *it;
        switch (in.kind) {
        case GateKind::S: in.kind = GateKind::Sdg; break;
        case GateKind::Sdg: in.kind = GateKind::S; break;
        case GateKind::T: in.kind = GateKind::Tdg; break;
        case GateKind::Tdg: in.kind = GateKind::T; break;
        case GateKind::MeasureH:
        case GateKind::Reset: throw CircuitError("inverse of non-unitary instruction");
        default: break;
        }
        out.push_back(std::move(in));
    }
    return out;
}

Circuit::Circuit(int num_qubits, int num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits) {
    if (num_qubits < 1) throw CircuitError("circuit needs at least one qubit");
    if (num_clbits < 0) throw CircuitError("negative clbit count");
    roles_.resize(num_qubits);
    for (int q = 0; q < num_qubits; ++q) roles_[q] = QubitRole{Role::Control, q + 1};
    written_.assign(num_clbits, false);
}

Circuit Circuit::from_parts(int num_qubits, int num_clbits, std::vector<Instruction> instrs,
                           std::vector<std::optional<QubitRole>> roles) {
    Circuit c(num_qubits, num_clbits);
    if (static_cast<int>(roles.size()) != num_qubits) throw CircuitError("role count does not match register");
    for (const auto& in : instrs)
        if (in.writes && *in.writes >= 0 && *in.writes < num_clbits) c.written_[*in.writes] = true;
    c.instrs_ = std::move(instrs);
    c.roles_ = std::move(roles);
    return c;
}

std::optional<std::string> Circuit::check(const Instruction& in, const std::vector<bool>& written) const {
    if (static_cast<int>(in.qubits.size()) != arity(in.kind))
        return std::string("wrong arity for ") + kind_name(in.kind);
    for (std::size_t i = 0; i < in.qubits.size(); ++i) {
        int q = in.qubits[i];
        if (q < 0 || q >= num_qubits_) return "qubit index out of range: " + std::to_string(q);
        for (std::size_t j = 0; j < i; ++j)
            if (in.qubits[j] == q) return "duplicate qubit " + std::to_string(q);
    }
    if (in.kind == GateKind::MeasureH) {
        if (!in.writes) return std::string("measurement without clbit");
        if (*in.writes < 0 || *in.writes >= num_clbits_)
            return "clbit index out of range: " + std::to_string(*in.writes);
        if (written[*in.writes]) return "duplicate clbit write c" + std::to_string(*in.writes);
        if (in.condition) return std::string("conditioned measurement");
    } else if (in.writes) {
        return std::string("only MeasureH writes a clbit");
    }
    if (in.condition) {
        int c = in.condition->clbit;
        if (c < 0 || c >= num_clbits_) return "clbit index out of range: " + std::to_string(c);
        if (!written[c]) return "condition on unwritten clbit c" + std::to_string(c);
        if (in.condition->value != 0 && in.condition->value != 1) return std::string("condition value not a bit");
    }
    return std::nullopt;
}

Circuit& Circuit::append(const Instruction& instr) {
    if (auto err = check(instr, written_)) throw CircuitError(*err);
    if (instr.writes) written_[*instr.writes] = true;
    instrs_.push_back(instr);
    return *this;
}

Circuit& Circuit::append(const std::vector<Instruction>& seq) {
    for (const auto& in : seq) append(in);
    return *this;
}

void Circuit::set_role(int qubit, QubitRole role) {
    if (qubit < 0 || qubit >= num_qubits_) throw CircuitError("role for qubit out of range");
    roles_[qubit] = role;
}

void Circuit::clear_role(int qubit) {
    if (qubit < 0 || qubit >= num_qubits_) throw CircuitError("role for qubit out of range");
    roles_[qubit].reset();
}

void Circuit::set_standard_roles(int n) {
    if (n + 1 > num_qubits_) throw CircuitError("register too small for roles");
    for (int q = 0; q < n; ++q) roles_[q] = QubitRole{Role::Control, q + 1};
    roles_[n] = QubitRole{Role::Target, 0};
    for (int q = n + 1; q < num_qubits_; ++q) roles_[q] = QubitRole{Role::Ancilla, 0};
}

std::vector<std::string> Circuit::validate() const {
    std::vector<std::string> out;
    std::vector<bool> written(num_clbits_, false);
    for (std::size_t i = 0; i < instrs_.size(); ++i) {
        const auto& in = instrs_[i];
        if (auto err = check(in, written)) out.push_back("instruction " + std::to_string(i) + ": " + *err);
        if (in.writes && *in.writes >= 0 && *in.writes < num_clbits_) written[*in.writes] = true;
    }
    bool incomplete = false;
    int targets = 0;
    std::vector<int> ctl;
    for (const auto& r : roles_) {
        if (!r) {
            incomplete = true;
            continue;
        }
        if (r->role == Role::Target) ++targets;
        if (r->role == Role::Control) ctl.push_back(r->index);
    }
    if (incomplete) out.emplace_back("role_map incomplete");
    if (targets > 1) out.emplace_back("role_map has more than one target");
    std::sort(ctl.begin(), ctl.end());
    if (std::adjacent_find(ctl.begin(), ctl.end()) != ctl.end())
        out.emplace_back("role_map repeats a control index");
    return out;
}

}  // namespace tforge
