// SPDX-License-Identifier: MIT
#include "tforge/circuit.hpp"

#include <cctype>
#include <sstream>

namespace tforge {

namespace {

std::string role_token(const std::optional<QubitRole>& r) {
    if (!r) return "?";
    switch (r->role) {
    case Role::Control: return "c" + std::to_string(r->index);
    case Role::Target: return "t";
    case Role::Ancilla: return "anc";
    }
    return "?";
}

std::optional<QubitRole> parse_role(const std::string& tok) {
    if (tok == "t") return QubitRole{Role::Target, 0};
    if (tok == "anc") return QubitRole{Role::Ancilla, 0};
    if (tok.size() > 1 && tok[0] == 'c') return QubitRole{Role::Control, std::stoi(tok.substr(1))};
    if (tok == "?") return std::nullopt;
    throw CircuitError("bad role token: " + tok);
}

int parse_index(const std::string& tok, char prefix) {
    if (tok.size() < 2 || tok[0] != prefix) throw CircuitError("expected " + std::string(1, prefix) + "<i>, got " + tok);
    for (std::size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw CircuitError("bad index: " + tok);
    return std::stoi(tok.substr(1));
}

const char* qasm_name(GateKind k) {
    switch (k) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::MeasureH: return "measure";
    case GateKind::Reset: return "reset";
    }
    return "?";
}

void qasm_line(std::ostream& os, const Instruction& in, const std::string& indent) {
    if (in.kind == GateKind::MeasureH) {
        os << indent << "h q[" << in.qubits[0] << "];\n";
        os << indent << "c[" << *in.writes << "] = measure q[" << in.qubits[0] << "];\n";
        return;
    }
    os << indent << qasm_name(in.kind) << ' ';
    for (std::size_t i = 0; i < in.qubits.size(); ++i) os << (i ? ", " : "") << "q[" << in.qubits[i] << ']';
    os << ";\n";
}

}  // namespace

std::string to_canonical(const Circuit& c) {
    std::ostringstream os;
    os << "qubits " << c.num_qubits() << " clbits " << c.num_clbits() << '\n';
    os << "roles ";
    for (int q = 0; q < c.num_qubits(); ++q) os << (q ? "," : "") << role_token(c.roles()[q]);
    os << '\n';
    for (const auto& in : c.instructions()) {
        os << kind_name(in.kind);
        for (int q : in.qubits) os << " q" << q;
        if (in.writes) os << " -> c" << *in.writes;
        if (in.condition) os << " if c" << in.condition->clbit << "==" << in.condition->value;
        os << '\n';
    }
    return os.str();
}

Circuit from_canonical(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int nq = -1, nc = -1;
    std::vector<std::optional<QubitRole>> roles;
    bool have_roles = false;
    std::vector<Instruction> instrs;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw CircuitError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok[0] == "qubits") {
            if (tok.size() != 4 || tok[2] != "clbits") fail("bad header");
            nq = std::stoi(tok[1]);
            nc = std::stoi(tok[3]);
            continue;
        }
        if (nq < 0) fail("missing header");
        if (tok[0] == "roles") {
            if (tok.size() != 2) fail("bad roles line");
            std::istringstream rs(tok[1]);
            for (std::string r; std::getline(rs, r, ',');) roles.push_back(parse_role(r));
            if (static_cast<int>(roles.size()) != nq) fail("role count does not match qubits");
            have_roles = true;
            continue;
        }
        auto kind = kind_from_name(tok[0]);
        if (!kind) fail("unknown instruction " + tok[0]);
        Instruction in;
        in.kind = *kind;
        std::size_t i = 1;
        for (; i < tok.size() && tok[i][0] == 'q'; ++i) in.qubits.push_back(parse_index(tok[i], 'q'));
        if (i < tok.size() && tok[i] == "->") {
            if (i + 1 >= tok.size()) fail("missing clbit after ->");
            in.writes = parse_index(tok[i + 1], 'c');
            i += 2;
        }
        if (i < tok.size() && tok[i] == "if") {
            if (i + 1 >= tok.size()) fail("missing condition");
            const std::string& cond = tok[i + 1];
            auto eq = cond.find("==");
            if (eq == std::string::npos) fail("bad condition " + cond);
            in.condition = Condition{parse_index(cond.substr(0, eq), 'c'), std::stoi(cond.substr(eq + 2))};
            i += 2;
        }
        if (i != tok.size()) fail("trailing tokens");
        instrs.push_back(std::move(in));
    }
    if (nq < 0) throw CircuitError("missing header");
    if (!have_roles) {
        roles.resize(nq);
        for (int q = 0; q < nq; ++q) roles[q] = QubitRole{Role::Control, q + 1};
    }
    Circuit c = Circuit::from_parts(nq, nc, std::move(instrs), std::move(roles));
    auto bad = c.validate();
    if (!bad.empty()) throw CircuitError(bad.front());
    return c;
}

std::string to_qasm(const Circuit& c) {
    std::ostringstream os;
    os << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
    os << "qubit[" << c.num_qubits() << "] q;\n";
    if (c.num_clbits() > 0) os << "bit[" << c.num_clbits() << "] c;\n";
    const auto& ins = c.instructions();
    std::size_t i = 0;
    std::optional<Condition> open;
    bool used_else = false;
    auto close = [&] {
        if (open) os << "}\n";
        open.reset();
    };
    while (i < ins.size()) {
        const auto& in = ins[i];
        if (!in.condition) {
            close();
            qasm_line(os, in, "");
            ++i;
            continue;
        }
        const Condition cond = *in.condition;
        if (open && *open == cond) {
            qasm_line(os, in, "    ");
            ++i;
            continue;
        }
        if (open && open->clbit == cond.clbit && open->value != cond.value && !used_else) {
            os << "} else {\n";
            open = cond;
            used_else = true;
        } else {
            close();
            os << "if (c[" << cond.clbit << "] == " << cond.value << ") {\n";
            open = cond;
            used_else = false;
        }
        qasm_line(os, in, "    ");
        ++i;
    }
    close();
    return os.str();
}

}  // namespace tforge
