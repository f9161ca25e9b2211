// SPDX-License-Identifier: MIT
#pragma once

#include "tforge/circuit.hpp"
#include "tforge/synthesis.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tforge {

using amp_t = std::complex<double>;
// qubit 0 is the least significant bit of the index
using StateVector = std::vector<amp_t>;
// -1 marks an unassigned clbit
using ClbitAssignment = std::vector<int>;

struct BranchResult {
    ClbitAssignment outcomes;
    StateVector state;  // unnormalized
    double probability = 0.0;
};

struct VerifyOptions {
    double tolerance = 1e-10;
    int exhaustive_cap = 10;
    int random_basis = 256;
    int random_states = 20;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct VerificationReport {
    int n = 0;
    SynthesisMethod method = SynthesisMethod::StaticBaseline;
    double max_deviation = 0.0;
    std::map<std::string, amp_t> per_branch_phase;  // outcome bits -> phase
    bool passed = false;
    bool exhaustive = false;
    int basis_inputs = 0;
    int random_states = 0;
    int max_branches = 0;
};

constexpr double kPruneThreshold = 1e-14;

// in-place; throws CircuitError on MeasureH/Reset or an unassigned condition
void apply_in_place(StateVector& state, const Instruction& instr, const ClbitAssignment& clbits);
StateVector apply(StateVector state, const Instruction& instr, const ClbitAssignment& clbits);

StateVector basis_state(int num_qubits, std::uint64_t index);
double norm2(const StateVector& s);

std::vector<BranchResult> run_branches(const Circuit& c, const StateVector& input);

// sparse branch enumeration for computational-basis inputs, same semantics
struct SparseBranch {
    ClbitAssignment outcomes;
    std::vector<std::pair<std::uint64_t, amp_t>> amps;  // sorted by index
    double probability = 0.0;
};
std::vector<SparseBranch> run_branches_basis(const Circuit& c, std::uint64_t input);

// bit layout: controls 0..n-1, target n
std::uint64_t cnx_oracle(int n, std::uint64_t index);

VerificationReport verify_cnx(const SynthesisResult& r, const VerifyOptions& opt = {});
// standard layout required: controls 0..n-1, target n, anything above is ancilla
VerificationReport verify_circuit(const Circuit& c, const VerifyOptions& opt = {});

// hardware threads capped by TOFFOLI_FORGE_THREADS
int default_threads();

}  // namespace tforge
