// SPDX-License-Identifier: MIT
#include "tforge/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace tforge {

namespace {

using cd = std::complex<double>;
using G = GateKind;

Instruction g1(G k, int q) { return gate(k, {q}); }
Instruction cx(int c, int t) { return gate(G::CX, {c, t}); }

// phase polynomial shared by CC(iX) and CC(iZ): T on t, t^b, t^a^b, t^a
std::vector<Instruction> ccix_body(int a, int b, int t) {
    return {g1(G::T, t), cx(b, t), g1(G::Tdg, t), cx(a, t), g1(G::T, t), cx(b, t), g1(G::Tdg, t)};
}

// exact CC(iZ), diagonal
std::vector<Instruction> cc_iz(int a, int b, int t) {
    return {cx(a, t), g1(G::T, t), cx(b, t), g1(G::Tdg, t), cx(a, t), g1(G::T, t), cx(b, t), g1(G::Tdg, t)};
}

std::vector<Instruction> ccix(int a, int b, int t) {
    std::vector<Instruction> s{g1(G::H, t), g1(G::X, t)};
    auto body = ccix_body(a, b, t);
    s.insert(s.end(), body.begin(), body.end());
    s.push_back(g1(G::H, t));
    return s;
}

std::vector<Instruction> c3ix(int a, int b, int c, int t) {
    // controlled-H-like frame on c, exact CC(iZ) inside
    std::vector<Instruction> frame{g1(G::S, t), g1(G::H, t), g1(G::T, t), cx(c, t), g1(G::Tdg, t), g1(G::H, t)};
    std::vector<Instruction> s = frame;
    auto mid = cc_iz(a, b, t);
    s.insert(s.end(), mid.begin(), mid.end());
    auto back = inverse(frame);
    s.insert(s.end(), back.begin(), back.end());
    return s;
}

std::vector<Instruction> ccx(int a, int b, int c) {
    return {g1(G::H, c),   g1(G::T, a),   g1(G::T, b),   g1(G::T, c),   cx(b, a),      cx(c, b),
            cx(a, c),      g1(G::Tdg, b), cx(a, b),      g1(G::Tdg, a), g1(G::Tdg, b), g1(G::T, c),
            cx(c, b),      cx(a, c),      cx(b, a),      g1(G::H, c)};
}

std::vector<Instruction> cciz(int a, int b, int t) {
    std::vector<Instruction> s{g1(G::X, t)};
    auto body = ccix_body(a, b, t);
    s.insert(s.end(), body.begin(), body.end());
    return s;
}

std::vector<Instruction> csdg(int c, int t) {
    return {g1(G::Tdg, c), g1(G::Tdg, t), cx(c, t), g1(G::T, t), cx(c, t)};
}

void apply_gate(Eigen::VectorXcd& v, const Instruction& in) {
    const Eigen::Index n = v.size();
    const cd w = std::polar(1.0, std::numbers::pi / 4);
    const double r = 1.0 / std::sqrt(2.0);
    if (in.kind == G::CX || in.kind == G::CZ) {
        const Eigen::Index mc = Eigen::Index(1) << in.qubits[0];
        const Eigen::Index mt = Eigen::Index(1) << in.qubits[1];
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!(i & mc) || (i & mt)) continue;
            if (in.kind == G::CX)
                std::swap(v[i], v[i | mt]);
            else
                v[i | mt] = -v[i | mt];
        }
        return;
    }
    const Eigen::Index m = Eigen::Index(1) << in.qubits[0];
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i & m) continue;
        cd& a = v[i];
        cd& b = v[i | m];
        switch (in.kind) {
        case G::X: std::swap(a, b); break;
        case G::H: {
            cd x = a, y = b;
            a = r * (x + y);
            b = r * (x - y);
            break;
        }
        case G::S: b *= cd(0, 1); break;
        case G::Sdg: b *= cd(0, -1); break;
        case G::T: b *= w; break;
        case G::Tdg: b *= std::conj(w); break;
        default: throw CircuitError("dense_unitary: unsupported instruction");
        }
    }
}

}  // namespace

const char* macro_label(MacroName name) {
    switch (name) {
    case MacroName::CCX: return "CCX";
    case MacroName::CCiX: return "CCiX";
    case MacroName::CCiX_dg: return "CCiX_dg";
    case MacroName::C3iX: return "C3iX";
    case MacroName::C3iX_dg: return "C3iX_dg";
    case MacroName::CCiZ: return "CCiZ";
    case MacroName::CSdg: return "CSdg";
    }
    return "?";
}

int macro_controls(MacroName name) {
    switch (name) {
    case MacroName::C3iX:
    case MacroName::C3iX_dg: return 3;
    case MacroName::CSdg: return 1;
    default: return 2;
    }
}

std::optional<MacroName> macro_inverse(MacroName name) {
    switch (name) {
    case MacroName::CCX: return MacroName::CCX;
    case MacroName::CCiX: return MacroName::CCiX_dg;
    case MacroName::CCiX_dg: return MacroName::CCiX;
    case MacroName::C3iX: return MacroName::C3iX_dg;
    case MacroName::C3iX_dg: return MacroName::C3iX;
    default: return std::nullopt;
    }
}

const std::vector<MacroName>& all_macros() {
    static const std::vector<MacroName> v{MacroName::CCX,     MacroName::CCiX, MacroName::CCiX_dg, MacroName::C3iX,
                                          MacroName::C3iX_dg, MacroName::CCiZ, MacroName::CSdg};
    return v;
}

std::vector<Instruction> expand(const MacroGate& m) {
    if (static_cast<int>(m.controls.size()) != macro_controls(m.name))
        throw CircuitError(std::string("wrong control count for ") + macro_label(m.name));
    std::vector<int> all = m.controls;
    all.push_back(m.target);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw CircuitError(std::string("repeated qubit in ") + macro_label(m.name));
    const auto& c = m.controls;
    const int t = m.target;
    switch (m.name) {
    case MacroName::CCX: return ccx(c[0], c[1], t);
    case MacroName::CCiX: return ccix(c[0], c[1], t);
    case MacroName::CCiX_dg: return inverse(ccix(c[0], c[1], t));
    case MacroName::C3iX: return c3ix(c[0], c[1], c[2], t);
    case MacroName::C3iX_dg: return inverse(c3ix(c[0], c[1], c[2], t));
    case MacroName::CCiZ: return cciz(c[0], c[1], t);
    case MacroName::CSdg: return csdg(c[0], t);
    }
    return {};
}

MacroCost macro_cost(MacroName name) {
    switch (name) {
    case MacroName::CCX: return {7, 7, 3};
    case MacroName::CCiX:
    case MacroName::CCiX_dg:
    case MacroName::CCiZ: return {3, 4, 4};
    case MacroName::C3iX:
    case MacroName::C3iX_dg: return {6, 8, 8};
    case MacroName::CSdg: return {2, 3, 2};
    }
    throw CircuitError("unknown macro");
}

std::vector<Instruction> cc_minus_iz(int a, int b, int t) { return inverse(cc_iz(a, b, t)); }

MacroCost sequence_cost(const std::vector<Instruction>& seq) {
    MacroCost c;
    std::vector<int> depth;
    for (const auto& in : seq) {
        if (in.kind == G::CX) ++c.cx;
        if (is_t_gate(in.kind)) ++c.t_count;
        int base = 0;
        for (int q : in.qubits) {
            if (q >= static_cast<int>(depth.size())) depth.resize(q + 1, 0);
            base = std::max(base, depth[q]);
        }
        if (is_t_gate(in.kind)) ++base;
        for (int q : in.qubits) depth[q] = base;
        c.t_depth = std::max(c.t_depth, base);
    }
    return c;
}

Eigen::MatrixXcd dense_unitary(const std::vector<Instruction>& seq, int num_qubits) {
    const Eigen::Index dim = Eigen::Index(1) << num_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Eigen::VectorXcd v = u.col(col);
        for (const auto& in : seq) {
            if (in.condition || in.kind == G::MeasureH || in.kind == G::Reset)
                throw CircuitError("dense_unitary needs a measurement-free sequence");
            for (int q : in.qubits)
                if (q < 0 || q >= num_qubits) throw CircuitError("dense_unitary: qubit out of range");
            apply_gate(v, in);
        }
        u.col(col) = v;
    }
    return u;
}

Eigen::MatrixXcd macro_unitary(MacroName name) {
    const int k = macro_controls(name);
    const Eigen::Index dim = Eigen::Index(1) << (k + 1);
    const Eigen::Index ones = (Eigen::Index(1) << k) - 1;
    const Eigen::Index tb = Eigen::Index(1) << k;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::Matrix2cd blk;
    const cd i(0, 1);
    switch (name) {
    case MacroName::CCX: blk << 0, 1, 1, 0; break;
    case MacroName::CCiX:
    case MacroName::C3iX: blk << 0, i, i, 0; break;
    case MacroName::CCiX_dg:
    case MacroName::C3iX_dg: blk << 0, -i, -i, 0; break;
    case MacroName::CCiZ: blk << i, 0, 0, -i; break;
    case MacroName::CSdg: blk << 1, 0, 0, -i; break;
    }
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) u(ones | (r ? tb : 0), ones | (c ? tb : 0)) = blk(r, c);
    return u;
}

MacroReport verify_macro(MacroName name, double tol) {
    MacroReport rep;
    rep.name = name;
    const int k = macro_controls(name);
    MacroGate m{name, {}, k};
    for (int q = 0; q < k; ++q) m.controls.push_back(q);
    const auto seq = expand(m);
    const Eigen::MatrixXcd u = dense_unitary(seq, k + 1);
    const Eigen::MatrixXcd ref = macro_unitary(name);
    const Eigen::Index ones = (Eigen::Index(1) << k) - 1;
    const Eigen::Index tb = Eigen::Index(1) << k;

    for (Eigen::Index cv = 0; cv <= ones; ++cv) {
        Eigen::Index idx[2] = {cv, cv | tb};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                const cd got = u(idx[r], idx[c]);
                if (cv == ones) {
                    rep.block_error = std::max(rep.block_error, std::abs(got - ref(idx[r], idx[c])));
                } else if (r != c) {
                    rep.diagonal_error = std::max(rep.diagonal_error, std::abs(got));
                } else {
                    rep.diagonal_error = std::max(rep.diagonal_error, std::abs(std::abs(got) - 1.0));
                }
            }
        }
    }
    // nothing may leak between distinct control values
    for (Eigen::Index r = 0; r < u.rows(); ++r)
        for (Eigen::Index c = 0; c < u.cols(); ++c)
            if ((r & ones) != (c & ones)) rep.diagonal_error = std::max(rep.diagonal_error, std::abs(u(r, c)));

    std::vector<Instruction> round = seq;
    std::vector<Instruction> back;
    if (auto inv = macro_inverse(name))
        back = expand(MacroGate{*inv, m.controls, m.target});
    else
        back = inverse(seq);
    round.insert(round.end(), back.begin(), back.end());
    const Eigen::MatrixXcd id = dense_unitary(round, k + 1);
    rep.inverse_error = (id - Eigen::MatrixXcd::Identity(id.rows(), id.cols())).norm();

    rep.counted = sequence_cost(seq);
    rep.block_ok = rep.block_error < tol;
    rep.diagonal_ok = rep.diagonal_error < tol;
    rep.inverse_ok = rep.inverse_error < tol;
    rep.cost_ok = rep.counted == macro_cost(name);
    if (!rep.block_ok) rep.failures.emplace_back("all-ones block mismatch");
    if (!rep.diagonal_ok) rep.failures.emplace_back("non-diagonal relative phase block");
    if (!rep.inverse_ok) rep.failures.emplace_back("inverse does not compose to identity");
    if (!rep.cost_ok) rep.failures.emplace_back("cost mismatch");
    return rep;
}

}  // namespace tforge
