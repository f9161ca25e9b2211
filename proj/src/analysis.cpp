// SPDX-License-Identifier: MIT
#include "tforge/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tforge {

namespace {

void require_valid(const Circuit& c) {
    auto bad = c.validate();
    if (!bad.empty()) throw CircuitError("invalid circuit: " + bad.front());
}

Triple measure(const SynthesisResult& r, AccountingMode mode) {
    auto [cx, tc] = count_resources(r.circuit, mode);
    return {cx, tc, t_depth(r.circuit, mode)};
}

}  // namespace

bool included(const Instruction& in, AccountingMode mode) {
    if (!in.condition) return true;
    switch (mode) {
    case AccountingMode::WorstCase: return in.condition->value == 1;
    case AccountingMode::BestCase: return in.condition->value == 0;
    case AccountingMode::StaticOnly: return false;
    }
    return false;
}

std::pair<int, int> count_resources(const Circuit& c, AccountingMode mode) {
    require_valid(c);
    int cx = 0, tc = 0;
    for (const auto& in : c.instructions()) {
        if (!included(in, mode)) continue;
        if (in.kind == GateKind::CX) ++cx;
        if (is_t_gate(in.kind)) ++tc;
    }
    return {cx, tc};
}

int t_depth(const Circuit& c, AccountingMode mode) {
    require_valid(c);
    std::vector<int> dq(c.num_qubits(), 0);
    std::vector<int> dc(c.num_clbits(), 0);
    int best = 0;
    for (const auto& in : c.instructions()) {
        if (!included(in, mode)) continue;
        int base = 0;
        for (int q : in.qubits) base = std::max(base, dq[q]);
        if (in.condition) base = std::max(base, dc[in.condition->clbit]);
        if (is_t_gate(in.kind)) ++base;
        for (int q : in.qubits) dq[q] = base;
        if (in.writes) dc[*in.writes] = base;
        best = std::max(best, base);
    }
    return best;
}

ResourceReport analyze(const SynthesisResult& r, AccountingMode mode) {
    ResourceReport rep;
    auto [cx, tc] = count_resources(r.circuit, mode);
    rep.cx = cx;
    rep.t_count = tc;
    rep.t_depth = t_depth(r.circuit, mode);
    rep.mode = mode;
    rep.n = r.n;
    rep.method = r.method;
    return rep;
}

std::string format_report(const ResourceReport& r) {
    std::ostringstream os;
    os << "n=" << r.n << " method=" << method_name(r.method) << " mode=" << mode_name(r.mode) << " cx=" << r.cx
       << " t_count=" << r.t_count << " t_depth=" << r.t_depth;
    return os.str();
}

long improvement_centi(int base, int value) {
    if (base <= 0) throw std::invalid_argument("improvement: non-positive baseline");
    const long num = static_cast<long>(base - value) * 10000L;
    // floor division, then half-up on the remainder
    long q = num / base;
    long r = num % base;
    if (r < 0) {
        q -= 1;
        r += base;
    }
    if (2 * r >= base) q += 1;
    return q;
}

Improvement improvement(const Triple& base, const Triple& value) {
    Improvement im;
    im.centi = {improvement_centi(base.cx, value.cx), improvement_centi(base.tc, value.tc),
                improvement_centi(base.td, value.td)};
    return im;
}

std::string Improvement::text(int i) const {
    const long v = centi[i];
    const long a = v < 0 ? -v : v;
    std::ostringstream os;
    if (v < 0) os << '-';
    os << a / 100 << '.' << (a % 100 < 10 ? "0" : "") << a % 100;
    return os.str();
}

ComparisonRow compare_row(int n) {
    ComparisonRow row;
    row.n = n;
    row.stat = measure(synthesize({n, SynthesisMethod::StaticBaseline}), AccountingMode::StaticOnly);
    row.ccix = measure(synthesize({n, SynthesisMethod::DynamicCCiX}), AccountingMode::WorstCase);
    row.mixed = measure(synthesize({n, SynthesisMethod::DynamicMixed}), AccountingMode::WorstCase);
    row.impr_ccix = improvement(row.stat, row.ccix);
    row.impr_mixed = improvement(row.stat, row.mixed);
    return row;
}

std::vector<ComparisonRow> compare_table(int n_min, int n_max, int threads) {
    if (n_min < 4 || n_max < n_min) throw std::invalid_argument("compare_table: need 4 <= min <= max");
    const int count = n_max - n_min + 1;
    std::vector<ComparisonRow> rows(count);
    threads = std::clamp(threads, 1, count);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < count; i = next++) rows[i] = compare_row(n_min + i);
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return rows;
}

BoundReport check_bounds(int n, SynthesisMethod method) {
    BoundReport rep;
    rep.n = n;
    rep.method = method;
    const AccountingMode mode =
        method == SynthesisMethod::StaticBaseline ? AccountingMode::StaticOnly : AccountingMode::WorstCase;
    rep.measured = analyze(synthesize({n, method}), mode);
    rep.predicted = predicted_cost(n, method, AccountingMode::WorstCase);
    if (rep.measured.cx != rep.predicted.cx)
        rep.violations.push_back("cx " + std::to_string(rep.measured.cx) + " != " + std::to_string(rep.predicted.cx));
    if (rep.measured.t_count != rep.predicted.t_count)
        rep.violations.push_back("t_count " + std::to_string(rep.measured.t_count) +
                                 " != " + std::to_string(rep.predicted.t_count));
    if (rep.measured.t_depth > rep.predicted.t_depth)
        rep.violations.push_back("t_depth " + std::to_string(rep.measured.t_depth) + " > bound " +
                                 std::to_string(rep.predicted.t_depth));
    return rep;
}

std::string csv_header() {
    return "n,static_cx,static_tc,static_td,ccix_cx,ccix_tc,ccix_td,ccix_icx,ccix_itc,ccix_itd,"
           "mixed_cx,mixed_tc,mixed_td,mixed_icx,mixed_itc,mixed_itd";
}

std::string csv_row(const ComparisonRow& r) {
    std::ostringstream os;
    os << r.n << ',' << r.stat.cx << ',' << r.stat.tc << ',' << r.stat.td << ',' << r.ccix.cx << ',' << r.ccix.tc
       << ',' << r.ccix.td << ',' << r.impr_ccix.text(0) << ',' << r.impr_ccix.text(1) << ',' << r.impr_ccix.text(2)
       << ',' << r.mixed.cx << ',' << r.mixed.tc << ',' << r.mixed.td << ',' << r.impr_mixed.text(0) << ','
       << r.impr_mixed.text(1) << ',' << r.impr_mixed.text(2);
    return os.str();
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = csv_header() + "\n";
    for (const auto& r : rows) out += csv_row(r) + "\n";
    return out;
}

}  // namespace tforge
