// SPDX-License-Identifier: MIT
#include "tforge/synthesis.hpp"

#include <stdexcept>

namespace tforge {

namespace {

using G = GateKind;

// Writes AND(leaves) onto `target`, which must be clean under the current guard.
// `pool` holds further qubits clean under the same guard.
void and_into(const std::vector<int>& leaves, int target, const std::vector<int>& pool, bool mixed,
              std::vector<MacroGate>& out) {
    const std::size_t m = leaves.size();
    if (m == 2) {
        out.push_back({MacroName::CCiX, {leaves[0], leaves[1]}, target});
        return;
    }
    if (m == 3 && mixed) {
        out.push_back({MacroName::C3iX, {leaves[0], leaves[1], leaves[2]}, target});
        return;
    }
    if (!mixed) {
        const int p1 = pool.at(0);
        out.push_back({MacroName::CCiX, {leaves[0], leaves[1]}, p1});
        std::vector<int> rest(leaves.begin() + 2, leaves.end());
        if (rest.size() == 1) {
            out.push_back({MacroName::CCiX, {p1, rest[0]}, target});
            return;
        }
        // leaves[0] and leaves[1] are 1 whenever p1 is
        const int w = leaves[0];
        std::vector<int> sub{leaves[1]};
        sub.insert(sub.end(), pool.begin() + 1, pool.end());
        and_into(rest, w, sub, mixed, out);
        out.push_back({MacroName::CCiX, {p1, w}, target});
        return;
    }
    // greedy disjoint 3-blocks, the first two emitted side by side
    const int p1 = pool.at(0);
    const int p2 = pool.at(1);
    std::vector<int> b1(leaves.begin(), leaves.begin() + 3);
    out.push_back({MacroName::C3iX, b1, p1});
    std::vector<int> b2(leaves.begin() + 3, leaves.begin() + std::min<std::size_t>(6, m));
    int x2 = b2[0];
    if (b2.size() > 1) {
        out.push_back({b2.size() == 3 ? MacroName::C3iX : MacroName::CCiX, b2, p2});
        x2 = p2;
    }
    std::vector<int> rest(leaves.begin() + std::min<std::size_t>(6, m), leaves.end());
    if (rest.empty()) {
        out.push_back({MacroName::CCiX, {p1, x2}, target});
        return;
    }
    if (rest.size() == 1) {
        out.push_back({MacroName::C3iX, {p1, x2, rest[0]}, target});
        return;
    }
    const int w = b1[0];
    std::vector<int> sub{b1[1], b1[2]};
    if (b2.size() > 1) {
        sub.insert(sub.end(), b2.begin() + 1, b2.end());
        sub.push_back(b2[0]);
    }
    and_into(rest, w, sub, mixed, out);
    out.push_back({MacroName::C3iX, {p1, x2, w}, target});
}

MacroGate inverted(const MacroGate& g) {
    MacroGate r = g;
    r.name = *macro_inverse(g.name);
    return r;
}

class Builder {
  public:
    Builder(int n, int clbits) : res_() {
        res_.circuit = Circuit(n + 2, clbits);
        res_.circuit.set_standard_roles(n);
        res_.n = n;
        res_.target = n;
        res_.ancilla = n + 1;
    }

    void macro(const MacroGate& g) {
        push(TraceStep::Kind::Macro, g, macro_label(g.name), expand(g));
    }
    void flip(int q) { push(TraceStep::Kind::Flip, std::nullopt, "X", {gate(G::X, {q})}); }
    void step(TraceStep::Kind k, const std::string& label, std::vector<Instruction> body) {
        push(k, std::nullopt, label, std::move(body));
    }
    SynthesisResult finish(SynthesisMethod m) {
        res_.method = m;
        return std::move(res_);
    }

  private:
    void push(TraceStep::Kind k, std::optional<MacroGate> g, std::string label, std::vector<Instruction> body) {
        res_.circuit.append(body);
        res_.macro_trace.push_back({k, std::move(g), std::move(label), std::move(body)});
    }
    SynthesisResult res_;
};

std::vector<Instruction> when(std::vector<Instruction> seq, int clbit, int value) {
    for (auto& in : seq) in = conditioned(in, clbit, value);
    return seq;
}

}  // namespace

const char* method_name(SynthesisMethod m) {
    switch (m) {
    case SynthesisMethod::StaticBaseline: return "static";
    case SynthesisMethod::DynamicCCiX: return "ccix";
    case SynthesisMethod::DynamicMixed: return "mixed";
    }
    return "?";
}

std::optional<SynthesisMethod> method_from_name(const std::string& s) {
    if (s == "static") return SynthesisMethod::StaticBaseline;
    if (s == "ccix") return SynthesisMethod::DynamicCCiX;
    if (s == "mixed") return SynthesisMethod::DynamicMixed;
    return std::nullopt;
}

const char* mode_name(AccountingMode m) {
    switch (m) {
    case AccountingMode::WorstCase: return "worst";
    case AccountingMode::BestCase: return "best";
    case AccountingMode::StaticOnly: return "static";
    }
    return "?";
}

std::optional<AccountingMode> mode_from_name(const std::string& s) {
    if (s == "worst") return AccountingMode::WorstCase;
    if (s == "best") return AccountingMode::BestCase;
    if (s == "static") return AccountingMode::StaticOnly;
    return std::nullopt;
}

SynthesisResult synthesize(const SynthesisRequest& req) {
    const int n = req.n;
    if (n < 2) throw std::invalid_argument("synthesize: need at least 2 controls");
    const int t = n;
    const int anc = n + 1;

    if (n == 2) {
        Builder b(n, 0);
        b.macro({MacroName::CCX, {0, 1}, t});
        return b.finish(req.method);
    }

    const bool dynamic = req.method != SynthesisMethod::StaticBaseline;
    const bool mixed = req.method == SynthesisMethod::DynamicMixed && n >= 4;

    MacroGate first;
    std::vector<MacroGate> ladder;
    int y = 0;
    if (mixed) {
        first = {MacroName::C3iX, {0, 1, 2}, anc};
        if (n == 4) {
            y = 3;
        } else {
            std::vector<int> rest;
            for (int q = 3; q < n; ++q) rest.push_back(q);
            y = 2;
            and_into(rest, y, {0, 1}, true, ladder);
        }
    } else {
        first = {MacroName::CCiX, {0, 1}, anc};
        if (n == 3) {
            y = 2;
        } else {
            std::vector<int> rest;
            for (int q = 2; q < n; ++q) rest.push_back(q);
            y = 1;
            and_into(rest, y, {0}, false, ladder);
        }
    }

    Builder b(n, dynamic ? 1 : 0);
    b.macro(first);
    for (const auto& g : ladder) {
        b.flip(g.target);
        b.macro(g);
    }
    b.macro({MacroName::CCX, {anc, y}, t});
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
        b.macro(inverted(*it));
        b.flip(it->target);
    }

    if (!dynamic) {
        b.macro(inverted(first));
        return b.finish(req.method);
    }

    const int c0 = first.controls[0];
    const int c1 = first.controls[1];
    if (!mixed) {
        b.step(TraceStep::Kind::AncillaPhase, "Sdg", {gate(G::Sdg, {anc})});
        b.step(TraceStep::Kind::Measure, "MeasureH", {measure_h(anc, 0)});
        b.step(TraceStep::Kind::Reset, "Reset", {gate(G::Reset, {anc})});
        // CZ(c0,c1) executed as H.CX.H on c1
        b.step(TraceStep::Kind::Correction, "CZ",
               when({gate(G::H, {c1}), gate(G::CX, {c0, c1}), gate(G::H, {c1})}, 0, 1));
    } else {
        const int c2 = first.controls[2];
        b.step(TraceStep::Kind::Measure, "MeasureH", {measure_h(anc, 0)});
        b.step(TraceStep::Kind::Reset, "Reset", {gate(G::Reset, {anc})});
        b.step(TraceStep::Kind::Correction, "CC(-iZ)", when(cc_minus_iz(c0, c1, c2), 0, 1));
        b.step(TraceStep::Kind::Correction, "CSdg", when(expand({MacroName::CSdg, {c0}, c1}), 0, 0));
    }
    return b.finish(req.method);
}

MacroCost predicted_cost(int n, SynthesisMethod method, AccountingMode mode) {
    if (n < 4) throw std::invalid_argument("predicted_cost: closed forms need n >= 4");
    switch (method) {
    case SynthesisMethod::StaticBaseline: return {6 * n - 5, 8 * n - 9, 8 * n - 13};
    case SynthesisMethod::DynamicCCiX: {
        MacroCost c{(2 * n - 5) * 3 + 7, (2 * n - 5) * 4 + 7, (2 * n - 5) * 4 + 3};
        if (mode == AccountingMode::WorstCase) c.cx += 1;
        return c;
    }
    case SynthesisMethod::DynamicMixed: {
        MacroCost c{(2 * n - 6) * 3 + 7, (2 * n - 6) * 4 + 7, (2 * n - 6) * 4 + 3};
        if (mode == AccountingMode::WorstCase) {
            c.cx += 4;
            c.t_count += 4;
            c.t_depth += 4;
        } else if (mode == AccountingMode::BestCase) {
            c.cx += 2;
            c.t_count += 3;
            c.t_depth += 2;
        }
        const int m6 = n % 6;
        c.t_depth -= 2 * ((n - 3) / 6) * 8;
        if (m6 == 1 || m6 == 2) c.t_depth -= 2 * 4;
        return c;
    }
    }
    throw std::invalid_argument("predicted_cost: unknown method");
}

}  // namespace tforge
