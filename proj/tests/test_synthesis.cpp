// SPDX-License-Identifier: MIT
#include "tforge/synthesis.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>

using namespace tforge;
using G = GateKind;
using K = TraceStep::Kind;

namespace {

const SynthesisMethod kMethods[] = {SynthesisMethod::StaticBaseline, SynthesisMethod::DynamicCCiX,
                                    SynthesisMethod::DynamicMixed};

std::map<MacroName, int> macro_counts(const SynthesisResult& r) {
    std::map<MacroName, int> out;
    for (const auto& s : r.macro_trace)
        if (s.kind == K::Macro) ++out[s.macro->name];
    return out;
}

int count_kind(const Circuit& c, G k) {
    int n = 0;
    for (const auto& in : c.instructions()) n += in.kind == k;
    return n;
}

}  // namespace

TEST_CASE("method and mode names") {
    for (auto m : kMethods) CHECK(method_from_name(method_name(m)) == m);
    for (auto m : {AccountingMode::WorstCase, AccountingMode::BestCase, AccountingMode::StaticOnly})
        CHECK(mode_from_name(mode_name(m)) == m);
    CHECK_FALSE(method_from_name("dynamic").has_value());
    CHECK_FALSE(mode_from_name("").has_value());
}

TEST_CASE("register layout") {
    for (auto m : kMethods)
        for (int n = 2; n <= 12; ++n) {
            auto r = synthesize({n, m});
            CAPTURE(n);
            CHECK(r.n == n);
            CHECK(r.target == n);
            CHECK(r.circuit.validate().empty());
            CHECK(r.ancilla == n + 1);
            CHECK(r.circuit.num_qubits() == n + 2);
            if (n == 2) continue;
            CHECK(r.circuit.num_clbits() == (m == SynthesisMethod::StaticBaseline ? 0 : 1));
            CHECK(r.circuit.roles()[n + 1]->role == Role::Ancilla);
        }
    CHECK_THROWS_AS(synthesize({1, SynthesisMethod::StaticBaseline}), std::invalid_argument);
}

TEST_CASE("two controls is a bare Toffoli") {
    for (auto m : kMethods) {
        auto r = synthesize({2, m});
        REQUIRE(r.macro_trace.size() == 1);
        CHECK(r.macro_trace[0].macro->name == MacroName::CCX);
        CHECK(r.circuit.size() == 16);
    }
}

TEST_CASE("macro counts") {
    auto c4 = macro_counts(synthesize({4, SynthesisMethod::DynamicCCiX}));
    CHECK(c4[MacroName::CCiX] == 2);
    CHECK(c4[MacroName::CCiX_dg] == 1);
    CHECK(c4[MacroName::CCX] == 1);

    auto c15 = macro_counts(synthesize({15, SynthesisMethod::DynamicCCiX}));
    CHECK(c15[MacroName::CCiX] + c15[MacroName::CCiX_dg] == 25);
    CHECK(c15[MacroName::CCX] == 1);

    auto m15 = macro_counts(synthesize({15, SynthesisMethod::DynamicMixed}));
    CHECK(m15[MacroName::C3iX] + m15[MacroName::C3iX_dg] == 11);
    CHECK(m15[MacroName::CCiX] + m15[MacroName::CCiX_dg] == 2);
    CHECK(m15[MacroName::CCX] == 1);

    for (int n = 3; n <= 16; ++n) {
        auto s = macro_counts(synthesize({n, SynthesisMethod::StaticBaseline}));
        CHECK(s[MacroName::CCiX] + s[MacroName::CCiX_dg] == 2 * (n - 2));
        auto d = macro_counts(synthesize({n, SynthesisMethod::DynamicCCiX}));
        CHECK(d[MacroName::CCiX] + d[MacroName::CCiX_dg] == 2 * (n - 2) - 1);
    }
}

TEST_CASE("trace bodies concatenate to the circuit") {
    for (auto m : kMethods)
        for (int n = 2; n <= 16; ++n) {
            auto r = synthesize({n, m});
            std::vector<Instruction> flat;
            for (const auto& s : r.macro_trace) {
                if (s.kind == K::Macro) CHECK(s.body == expand(*s.macro));
                flat.insert(flat.end(), s.body.begin(), s.body.end());
            }
            CHECK(flat == r.circuit.instructions());
        }
}

TEST_CASE("static ladder mirrors itself") {
    for (int n = 3; n <= 12; ++n) {
        auto r = synthesize({n, SynthesisMethod::StaticBaseline});
        const auto& tr = r.macro_trace;
        const std::size_t k = tr.size();
        REQUIRE(k % 2 == 1);
        CHECK(tr[k / 2].macro->name == MacroName::CCX);
        for (std::size_t i = 0; i < k / 2; ++i) {
            const auto& a = tr[i];
            const auto& b = tr[k - 1 - i];
            CHECK(a.kind == b.kind);
            CHECK(b.body == inverse(a.body));
        }
    }
}

TEST_CASE("compute targets are flipped before use") {
    for (auto m : kMethods)
        for (int n = 4; n <= 12; ++n) {
            auto r = synthesize({n, m});
            const auto& tr = r.macro_trace;
            const std::size_t mid = [&] {
                for (std::size_t i = 0; i < tr.size(); ++i)
                    if (tr[i].kind == K::Macro && tr[i].macro->name == MacroName::CCX) return i;
                return tr.size();
            }();
            REQUIRE(mid < tr.size());
            for (std::size_t i = 1; i < mid; ++i) {
                if (tr[i].kind != K::Macro) continue;
                REQUIRE(tr[i - 1].kind == K::Flip);
                CHECK(tr[i - 1].body[0].qubits[0] == tr[i].macro->target);
            }
            CHECK(tr[0].macro->target == r.ancilla);
            CHECK(tr[mid].macro->target == r.target);
        }
}

TEST_CASE("measurement and correction structure") {
    for (int n = 3; n <= 16; ++n) {
        CAPTURE(n);
        auto s = synthesize({n, SynthesisMethod::StaticBaseline});
        CHECK(count_kind(s.circuit, G::MeasureH) == 0);
        CHECK(count_kind(s.circuit, G::Reset) == 0);

        auto d = synthesize({n, SynthesisMethod::DynamicCCiX});
        CHECK(count_kind(d.circuit, G::MeasureH) == 1);
        CHECK(count_kind(d.circuit, G::Reset) == 1);
        int cond = 0;
        for (const auto& in : d.circuit.instructions())
            if (in.condition) {
                ++cond;
                CHECK(in.condition->value == 1);
            }
        CHECK(cond == 3);

        auto x = synthesize({n, SynthesisMethod::DynamicMixed});
        CHECK(count_kind(x.circuit, G::MeasureH) == 1);
        int ones = 0, zeros = 0;
        for (const auto& in : x.circuit.instructions())
            if (in.condition) (in.condition->value ? ones : zeros)++;
        if (n >= 4) {
            CHECK(ones == 8);
            CHECK(zeros == 5);
            for (const auto& st : x.macro_trace) CHECK(st.kind != K::AncillaPhase);
        }
    }
    // n = 3 under the mixed method uses the CC(iX) construction
    auto a = synthesize({3, SynthesisMethod::DynamicMixed});
    auto b = synthesize({3, SynthesisMethod::DynamicCCiX});
    CHECK(a.circuit.instructions() == b.circuit.instructions());
}

TEST_CASE("predicted costs") {
    CHECK(predicted_cost(4, SynthesisMethod::StaticBaseline, AccountingMode::StaticOnly) == MacroCost{19, 23, 19});
    CHECK(predicted_cost(16, SynthesisMethod::StaticBaseline, AccountingMode::StaticOnly) == MacroCost{91, 119, 115});
    CHECK(predicted_cost(4, SynthesisMethod::DynamicCCiX, AccountingMode::WorstCase) == MacroCost{17, 19, 15});
    CHECK(predicted_cost(4, SynthesisMethod::DynamicCCiX, AccountingMode::BestCase) == MacroCost{16, 19, 15});
    CHECK(predicted_cost(15, SynthesisMethod::DynamicCCiX, AccountingMode::WorstCase).cx == 83);
    CHECK(predicted_cost(4, SynthesisMethod::DynamicMixed, AccountingMode::WorstCase).cx == 17);
    CHECK(predicted_cost(4, SynthesisMethod::DynamicMixed, AccountingMode::WorstCase).t_count == 19);
    CHECK(predicted_cost(15, SynthesisMethod::DynamicMixed, AccountingMode::WorstCase).cx == 83);
    CHECK(predicted_cost(15, SynthesisMethod::DynamicMixed, AccountingMode::WorstCase).t_count == 107);
    CHECK_THROWS_AS(predicted_cost(3, SynthesisMethod::DynamicCCiX, AccountingMode::WorstCase), std::invalid_argument);
}
