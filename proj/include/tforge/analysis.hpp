// SPDX-License-Identifier: MIT
#pragma once

#include "tforge/circuit.hpp"
#include "tforge/synthesis.hpp"

#include <array>
#include <string>
#include <vector>

namespace tforge {

struct ResourceReport {
    int cx = 0;
    int t_count = 0;
    int t_depth = 0;
    AccountingMode mode = AccountingMode::WorstCase;
    int n = 0;
    SynthesisMethod method = SynthesisMethod::StaticBaseline;
};

struct Triple {
    int cx = 0;
    int tc = 0;
    int td = 0;
    bool operator==(const Triple&) const = default;
};

// improvement in hundredths of a percent, rounded half-up
struct Improvement {
    std::array<long, 3> centi{};
    double value(int i) const { return static_cast<double>(centi[i]) / 100.0; }
    std::string text(int i) const;
};

struct ComparisonRow {
    int n = 0;
    Triple stat;
    Triple ccix;
    Improvement impr_ccix;
    Triple mixed;
    Improvement impr_mixed;
};

struct BoundReport {
    int n = 0;
    SynthesisMethod method = SynthesisMethod::StaticBaseline;
    ResourceReport measured;
    MacroCost predicted;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

bool included(const Instruction& in, AccountingMode mode);

// throws CircuitError on an invalid circuit
std::pair<int, int> count_resources(const Circuit& c, AccountingMode mode);
int t_depth(const Circuit& c, AccountingMode mode);

ResourceReport analyze(const SynthesisResult& r, AccountingMode mode);
std::string format_report(const ResourceReport& r);

long improvement_centi(int base, int value);
Improvement improvement(const Triple& base, const Triple& value);

ComparisonRow compare_row(int n);
// rows are computed on up to `threads` workers, ordered by n
std::vector<ComparisonRow> compare_table(int n_min, int n_max, int threads = 1);

BoundReport check_bounds(int n, SynthesisMethod method);

// published reference rows for n = 4..16, improvements in hundredths of a percent
struct ReferenceRow {
    int n;
    Triple stat, ccix;
    std::array<long, 3> impr_ccix;
    Triple mixed;
    std::array<long, 3> impr_mixed;
};
const std::vector<ReferenceRow>& reference_table();
const ReferenceRow* reference_row(int n);
// mismatching fields of a computed row against the reference, empty when equal
std::vector<std::string> diff_reference(const ComparisonRow& row);

std::string csv_header();
std::string csv_row(const ComparisonRow& row);
std::string to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace tforge
