// SPDX-License-Identifier: MIT
#pragma once

#include "tforge/circuit.hpp"
#include "tforge/primitives.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tforge {

enum class SynthesisMethod { StaticBaseline, DynamicCCiX, DynamicMixed };

// WorstCase: the M_H=1 path, BestCase: the M_H=0 path, StaticOnly: no conditioned gates
enum class AccountingMode { WorstCase, BestCase, StaticOnly };

const char* method_name(SynthesisMethod m);  // static, ccix, mixed
std::optional<SynthesisMethod> method_from_name(const std::string& s);
const char* mode_name(AccountingMode m);
std::optional<AccountingMode> mode_from_name(const std::string& s);

struct SynthesisRequest {
    int n = 2;
    SynthesisMethod method = SynthesisMethod::StaticBaseline;
};

struct TraceStep {
    enum class Kind { Macro, Flip, AncillaPhase, Measure, Reset, Correction };
    Kind kind = Kind::Macro;
    std::optional<MacroGate> macro;
    std::string label;
    std::vector<Instruction> body;
};

struct SynthesisResult {
    Circuit circuit{1, 0};
    std::vector<TraceStep> macro_trace;
    SynthesisMethod method = SynthesisMethod::StaticBaseline;
    int n = 0;
    int target = 0;
    int ancilla = 0;
};

// controls are qubits 0..n-1, target n, ancilla n+1
SynthesisResult synthesize(const SynthesisRequest& req);

// closed forms, n >= 4; t_depth is the serial (or reduced) bound
MacroCost predicted_cost(int n, SynthesisMethod method, AccountingMode mode);

}  // namespace tforge
