// SPDX-License-Identifier: MIT
#include "tforge/analysis.hpp"

namespace tforge {

const std::vector<ReferenceRow>& reference_table() {
    // n | static | ccix | ccix improvement | mixed | mixed improvement
    static const std::vector<ReferenceRow> rows{
        {4, {19, 23, 19}, {17, 19, 15}, {1053, 1739, 2105}, {17, 19, 15}, {1053, 1739, 2105}},
        {5, {25, 31, 27}, {23, 27, 19}, {800, 1290, 2963}, {23, 27, 20}, {800, 1290, 2593}},
        {6, {31, 39, 35}, {29, 35, 27}, {645, 1026, 2286}, {29, 35, 28}, {645, 1026, 2000}},
        {7, {37, 47, 43}, {35, 43, 31}, {541, 851, 2791}, {35, 43, 29}, {541, 851, 3256}},
        {8, {43, 55, 51}, {41, 51, 39}, {465, 727, 2353}, {41, 51, 33}, {465, 727, 3529}},
        {9, {49, 63, 59}, {47, 59, 43}, {408, 635, 2712}, {47, 59, 37}, {408, 635, 3729}},
        {10, {55, 71, 67}, {53, 67, 51}, {364, 563, 2388}, {53, 67, 43}, {364, 563, 3582}},
        {11, {61, 79, 75}, {59, 75, 55}, {328, 506, 2667}, {59, 75, 51}, {328, 506, 3200}},
        {12, {67, 87, 83}, {65, 83, 63}, {299, 460, 2410}, {65, 83, 53}, {299, 460, 3614}},
        {13, {73, 95, 91}, {71, 91, 67}, {274, 421, 2637}, {71, 91, 55}, {274, 421, 3956}},
        {14, {79, 103, 99}, {77, 99, 75}, {253, 388, 2424}, {77, 99, 59}, {253, 388, 4040}},
        {15, {85, 111, 107}, {83, 107, 79}, {235, 360, 2617}, {83, 107, 63}, {235, 360, 4112}},
        {16, {91, 119, 115}, {89, 115, 87}, {220, 336, 2435}, {89, 115, 67}, {220, 336, 4174}},
    };
    return rows;
}

const ReferenceRow* reference_row(int n) {
    for (const auto& r : reference_table())
        if (r.n == n) return &r;
    return nullptr;
}

std::vector<std::string> diff_reference(const ComparisonRow& row) {
    std::vector<std::string> out;
    const ReferenceRow* ref = reference_row(row.n);
    if (!ref) {
        out.push_back("no reference row for n=" + std::to_string(row.n));
        return out;
    }
    auto cmp = [&](const char* name, long got, long want) {
        if (got != want)
            out.push_back("n=" + std::to_string(row.n) + " " + name + " " + std::to_string(got) +
                          " != " + std::to_string(want));
    };
    auto triple = [&](const std::string& g, const Triple& got, const Triple& want) {
        cmp((g + "_cx").c_str(), got.cx, want.cx);
        cmp((g + "_tc").c_str(), got.tc, want.tc);
        cmp((g + "_td").c_str(), got.td, want.td);
    };
    auto impr = [&](const std::string& g, const Improvement& got, const std::array<long, 3>& want) {
        const char* f[3] = {"_icx", "_itc", "_itd"};
        for (int i = 0; i < 3; ++i) cmp((g + f[i]).c_str(), got.centi[i], want[i]);
    };
    triple("static", row.stat, ref->stat);
    triple("ccix", row.ccix, ref->ccix);
    impr("ccix", row.impr_ccix, ref->impr_ccix);
    triple("mixed", row.mixed, ref->mixed);
    impr("mixed", row.impr_mixed, ref->impr_mixed);
    return out;
}

}  // namespace tforge
