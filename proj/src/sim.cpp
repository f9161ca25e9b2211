// SPDX-License-Identifier: MIT
#include "tforge/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace tforge {

namespace {

using G = GateKind;

const amp_t kOmega = std::polar(1.0, std::numbers::pi / 4);
const double kRt = 1.0 / std::sqrt(2.0);

bool fires(const Instruction& in, const ClbitAssignment& clbits) {
    if (!in.condition) return true;
    const int c = in.condition->clbit;
    if (c < 0 || c >= static_cast<int>(clbits.size()) || clbits[c] < 0)
        throw CircuitError("condition on unassigned clbit c" + std::to_string(c));
    return clbits[c] == in.condition->value;
}

template <class F>
void for_pairs(std::size_t dim, std::size_t m, F&& f) {
    for (std::size_t hi = 0; hi < dim; hi += 2 * m)
        for (std::size_t i = hi; i < hi + m; ++i) f(i, i | m);
}

std::string outcome_key(const ClbitAssignment& cl) {
    std::string s;
    for (int b : cl) s += b < 0 ? '-' : static_cast<char>('0' + b);
    return s;
}

void measure_split(StateVector& s, std::size_t m, StateVector& one) {
    one.assign(s.size(), amp_t(0));
    for_pairs(s.size(), m, [&](std::size_t i0, std::size_t i1) {
        const amp_t a = s[i0], b = s[i1];
        s[i0] = kRt * (a + b);
        s[i1] = 0;
        one[i1] = kRt * (a - b);
    });
}

// sparse single-instruction update; entries stay sorted and merged
using Sparse = std::vector<std::pair<std::uint64_t, amp_t>>;

void normalize_sparse(Sparse& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Sparse out;
    out.reserve(v.size());
    for (const auto& e : v) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(e);
    }
    std::erase_if(out, [](const auto& e) { return std::norm(e.second) < 1e-30; });
    v.swap(out);
}

void apply_sparse(Sparse& v, const Instruction& in) {
    const std::uint64_t m0 = std::uint64_t(1) << in.qubits[0];
    switch (in.kind) {
    case G::X:
        for (auto& e : v) e.first ^= m0;
        break;
    case G::S:
    case G::Sdg:
    case G::T:
    case G::Tdg: {
        amp_t ph = in.kind == G::S ? amp_t(0, 1) : in.kind == G::Sdg ? amp_t(0, -1)
                 : in.kind == G::T ? kOmega : std::conj(kOmega);
        for (auto& e : v)
            if (e.first & m0) e.second *= ph;
        return;
    }
    case G::CX: {
        const std::uint64_t m1 = std::uint64_t(1) << in.qubits[1];
        for (auto& e : v)
            if (e.first & m0) e.first ^= m1;
        break;
    }
    case G::CZ: {
        const std::uint64_t m1 = std::uint64_t(1) << in.qubits[1];
        for (auto& e : v)
            if ((e.first & m0) && (e.first & m1)) e.second = -e.second;
        return;
    }
    case G::H: {
        Sparse out;
        out.reserve(2 * v.size());
        for (const auto& e : v) {
            const bool bit = e.first & m0;
            out.push_back({e.first & ~m0, kRt * e.second});
            out.push_back({e.first | m0, bit ? -kRt * e.second : kRt * e.second});
        }
        v.swap(out);
        break;
    }
    default: throw CircuitError("apply_sparse: unsupported instruction");
    }
    normalize_sparse(v);
}

struct Layout {
    int n = 0;
    int target = 0;
};

Layout standard_layout(const Circuit& c) {
    Layout l;
    const auto& roles = c.roles();
    int n = 0;
    while (n < c.num_qubits() && roles[n] && roles[n]->role == Role::Control && roles[n]->index == n + 1) ++n;
    if (n >= c.num_qubits() || !roles[n] || roles[n]->role != Role::Target)
        throw CircuitError("verify: circuit does not use the standard controls/target layout");
    for (int q = n + 1; q < c.num_qubits(); ++q)
        if (!roles[q] || roles[q]->role != Role::Ancilla)
            throw CircuitError("verify: qubits above the target must be ancillas");
    l.n = n;
    l.target = n;
    return l;
}

struct InputResult {
    double dev = 0.0;
    std::vector<std::pair<std::string, amp_t>> phases;
    int branches = 0;
};

InputResult check_basis(const Circuit& c, const Layout& l, std::uint64_t input) {
    InputResult res;
    const std::uint64_t expect = cnx_oracle(l.n, input);
    auto branches = run_branches_basis(c, input);
    res.branches = static_cast<int>(branches.size());
    double total = 0.0;
    for (const auto& b : branches) {
        total += b.probability;
        amp_t lambda = 0;
        double rest = 0.0;
        for (const auto& [idx, a] : b.amps) {
            if (idx == expect)
                lambda = a;
            else
                rest += std::norm(a);
        }
        res.dev = std::max(res.dev, std::sqrt(rest));
        if (std::abs(lambda) < 1e-12) {
            res.dev = std::max(res.dev, std::sqrt(b.probability));
            continue;
        }
        res.phases.emplace_back(outcome_key(b.outcomes), lambda / std::abs(lambda));
    }
    res.dev = std::max(res.dev, std::abs(total - 1.0));
    return res;
}

double check_random_state(const Circuit& c, const Layout& l, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    const std::size_t dim = std::size_t(1) << c.num_qubits();
    const std::size_t logical = std::size_t(1) << (l.n + 1);
    StateVector in(dim, amp_t(0));
    double nrm = 0.0;
    for (std::size_t i = 0; i < logical; ++i) {
        in[i] = amp_t(g(rng), g(rng));
        nrm += std::norm(in[i]);
    }
    for (std::size_t i = 0; i < logical; ++i) in[i] /= std::sqrt(nrm);
    StateVector expect = in;
    const std::size_t ones = (std::size_t(1) << l.n) - 1;
    std::swap(expect[ones], expect[ones | (std::size_t(1) << l.target)]);

    double dev = 0.0;
    double total = 0.0;
    for (auto& b : run_branches(c, in)) {
        total += b.probability;
        const double s = std::sqrt(b.probability);
        amp_t z = 0;
        for (std::size_t i = 0; i < dim; ++i) z += std::conj(expect[i]) * b.state[i];
        z /= s;
        const amp_t ph = std::abs(z) > 0 ? z / std::abs(z) : amp_t(1);
        double d = 0.0;
        for (std::size_t i = 0; i < dim; ++i) d += std::norm(b.state[i] / s - ph * expect[i]);
        dev = std::max(dev, std::sqrt(d));
    }
    return std::max(dev, std::abs(total - 1.0));
}

template <class F>
void parallel_for(int count, int threads, F&& f) {
    threads = std::clamp(threads, 1, std::max(1, count));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < count; i = next++) f(i);
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
}

}  // namespace

void apply_in_place(StateVector& s, const Instruction& in, const ClbitAssignment& clbits) {
    if (in.kind == G::MeasureH || in.kind == G::Reset)
        throw CircuitError("apply: measurement and reset need run_branches");
    if (!fires(in, clbits)) return;
    const std::size_t dim = s.size();
    const std::size_t m0 = std::size_t(1) << in.qubits[0];
    switch (in.kind) {
    case G::X: for_pairs(dim, m0, [&](std::size_t a, std::size_t b) { std::swap(s[a], s[b]); }); break;
    case G::H:
        for_pairs(dim, m0, [&](std::size_t a, std::size_t b) {
            const amp_t x = s[a], y = s[b];
            s[a] = kRt * (x + y);
            s[b] = kRt * (x - y);
        });
        break;
    case G::S: for_pairs(dim, m0, [&](std::size_t, std::size_t b) { s[b] *= amp_t(0, 1); }); break;
    case G::Sdg: for_pairs(dim, m0, [&](std::size_t, std::size_t b) { s[b] *= amp_t(0, -1); }); break;
    case G::T: for_pairs(dim, m0, [&](std::size_t, std::size_t b) { s[b] *= kOmega; }); break;
    case G::Tdg: for_pairs(dim, m0, [&](std::size_t, std::size_t b) { s[b] *= std::conj(kOmega); }); break;
    case G::CX: {
        const std::size_t m1 = std::size_t(1) << in.qubits[1];
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & m0) && !(i & m1)) std::swap(s[i], s[i | m1]);
        break;
    }
    case G::CZ: {
        const std::size_t m1 = std::size_t(1) << in.qubits[1];
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & m0) && (i & m1)) s[i] = -s[i];
        break;
    }
    default: break;
    }
}

StateVector apply(StateVector state, const Instruction& instr, const ClbitAssignment& clbits) {
    apply_in_place(state, instr, clbits);
    return state;
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
    StateVector s(std::size_t(1) << num_qubits, amp_t(0));
    if (index >= s.size()) throw std::out_of_range("basis_state: index out of range");
    s[index] = 1;
    return s;
}

double norm2(const StateVector& s) {
    double t = 0.0;
    for (const auto& a : s) t += std::norm(a);
    return t;
}

std::vector<BranchResult> run_branches(const Circuit& c, const StateVector& input) {
    if (input.size() != (std::size_t(1) << c.num_qubits())) throw std::invalid_argument("run_branches: dimension mismatch");
    struct Frame {
        std::size_t pc;
        StateVector state;
        ClbitAssignment clbits;
    };
    const auto& ins = c.instructions();
    std::vector<BranchResult> out;
    std::vector<Frame> stack;
    stack.push_back({0, input, ClbitAssignment(c.num_clbits(), -1)});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        bool dropped = false;
        for (; f.pc < ins.size(); ++f.pc) {
            const auto& in = ins[f.pc];
            if (in.kind == G::MeasureH) {
                StateVector one;
                measure_split(f.state, std::size_t(1) << in.qubits[0], one);
                ClbitAssignment cl1 = f.clbits;
                cl1[*in.writes] = 1;
                f.clbits[*in.writes] = 0;
                if (norm2(one) >= kPruneThreshold) stack.push_back({f.pc + 1, std::move(one), std::move(cl1)});
                if (norm2(f.state) < kPruneThreshold) {
                    dropped = true;
                    break;
                }
            } else if (in.kind == G::Reset) {
                if (!fires(in, f.clbits)) continue;
                const std::size_t m = std::size_t(1) << in.qubits[0];
                StateVector one(f.state.size(), amp_t(0));
                for_pairs(f.state.size(), m, [&](std::size_t a, std::size_t b) {
                    one[a] = f.state[b];
                    f.state[b] = 0;
                });
                if (norm2(one) >= kPruneThreshold) stack.push_back({f.pc + 1, std::move(one), f.clbits});
                if (norm2(f.state) < kPruneThreshold) {
                    dropped = true;
                    break;
                }
            } else {
                apply_in_place(f.state, in, f.clbits);
            }
        }
        if (dropped) continue;
        const double p = norm2(f.state);
        out.push_back({std::move(f.clbits), std::move(f.state), p});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.outcomes < b.outcomes; });
    return out;
}

std::vector<SparseBranch> run_branches_basis(const Circuit& c, std::uint64_t input) {
    if (c.num_qubits() > 63 || input >= (std::uint64_t(1) << c.num_qubits()))
        throw std::invalid_argument("run_branches_basis: input out of range");
    struct Frame {
        std::size_t pc;
        Sparse amps;
        ClbitAssignment clbits;
    };
    auto weight = [](const Sparse& v) {
        double t = 0.0;
        for (const auto& e : v) t += std::norm(e.second);
        return t;
    };
    const auto& ins = c.instructions();
    std::vector<SparseBranch> out;
    std::vector<Frame> stack;
    stack.push_back({0, Sparse{{input, amp_t(1)}}, ClbitAssignment(c.num_clbits(), -1)});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        bool dropped = false;
        for (; f.pc < ins.size(); ++f.pc) {
            const auto& in = ins[f.pc];
            if (in.kind == G::MeasureH || in.kind == G::Reset) {
                const std::uint64_t m = std::uint64_t(1) << in.qubits[0];
                if (in.kind == G::Reset && !fires(in, f.clbits)) continue;
                if (in.kind == G::MeasureH) apply_sparse(f.amps, gate(G::H, {in.qubits[0]}));
                Sparse zero, one;
                for (const auto& e : f.amps) (e.first & m ? one : zero).push_back(e);
                ClbitAssignment cl1 = f.clbits;
                if (in.kind == G::MeasureH) {
                    cl1[*in.writes] = 1;
                    f.clbits[*in.writes] = 0;
                } else {
                    for (auto& e : one) e.first &= ~m;
                }
                if (weight(one) >= kPruneThreshold) stack.push_back({f.pc + 1, std::move(one), std::move(cl1)});
                f.amps.swap(zero);
                if (weight(f.amps) < kPruneThreshold) {
                    dropped = true;
                    break;
                }
            } else if (fires(in, f.clbits)) {
                apply_sparse(f.amps, in);
            }
        }
        if (dropped) continue;
        const double p = weight(f.amps);
        out.push_back({std::move(f.clbits), std::move(f.amps), p});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.outcomes < b.outcomes; });
    return out;
}

std::uint64_t cnx_oracle(int n, std::uint64_t index) {
    if (n < 1 || n > 62 || index >= (std::uint64_t(1) << (n + 1)))
        throw std::out_of_range("cnx_oracle: index out of range");
    const std::uint64_t ones = (std::uint64_t(1) << n) - 1;
    return (index & ones) == ones ? index ^ (std::uint64_t(1) << n) : index;
}

VerificationReport verify_circuit(const Circuit& c, const VerifyOptions& opt) {
    auto bad = c.validate();
    if (!bad.empty()) throw CircuitError("verify: invalid circuit: " + bad.front());
    const Layout l = standard_layout(c);
    VerificationReport rep;
    rep.n = l.n;

    std::vector<std::uint64_t> inputs;
    const std::uint64_t logical = std::uint64_t(1) << (l.n + 1);
    std::mt19937_64 rng(opt.seed);
    if (l.n <= opt.exhaustive_cap) {
        rep.exhaustive = true;
        for (std::uint64_t i = 0; i < logical; ++i) inputs.push_back(i);
    } else {
        std::uniform_int_distribution<std::uint64_t> pick(0, logical - 1);
        for (int k = 0; k < opt.random_basis; ++k) inputs.push_back(pick(rng));
        // the two inputs that exercise the flip
        const std::uint64_t ones = (std::uint64_t(1) << l.n) - 1;
        inputs.push_back(ones);
        inputs.push_back(ones | (std::uint64_t(1) << l.n));
    }
    std::vector<std::uint64_t> state_seeds;
    for (int k = 0; k < opt.random_states; ++k) state_seeds.push_back(rng());

    std::vector<InputResult> basis(inputs.size());
    parallel_for(static_cast<int>(inputs.size()), opt.threads,
                 [&](int i) { basis[i] = check_basis(c, l, inputs[i]); });
    std::vector<double> states(state_seeds.size());
    parallel_for(static_cast<int>(state_seeds.size()), opt.threads,
                 [&](int i) { states[i] = check_random_state(c, l, state_seeds[i]); });

    double dev = 0.0;
    for (const auto& r : basis) {
        dev = std::max(dev, r.dev);
        rep.max_branches = std::max(rep.max_branches, r.branches);
        for (const auto& [key, ph] : r.phases) {
            auto [it, fresh] = rep.per_branch_phase.emplace(key, ph);
            if (!fresh) dev = std::max(dev, std::abs(ph - it->second));
        }
    }
    for (double d : states) dev = std::max(dev, d);
    rep.max_deviation = dev;
    rep.basis_inputs = static_cast<int>(inputs.size());
    rep.random_states = static_cast<int>(state_seeds.size());
    rep.passed = dev < opt.tolerance;
    return rep;
}

VerificationReport verify_cnx(const SynthesisResult& r, const VerifyOptions& opt) {
    VerificationReport rep = verify_circuit(r.circuit, opt);
    rep.method = r.method;
    return rep;
}

int default_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("TOFFOLI_FORGE_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) hw = std::min<long>(hw, cap);
    }
    return hw;
}

}  // namespace tforge
