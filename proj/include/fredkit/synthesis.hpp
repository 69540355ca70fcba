#pragma once

#include "fredkit/circuit.hpp"

namespace fredkit {

/// Exchange of the two target qubits when every control qubit is |1>, as a
/// dense permutation on the all-qubit register (c..., t1, t2).
UnitaryOp fredkin_oracle(std::int64_t n_controls);

/// Same permutation lifted onto an arbitrary register with n+2 wires, acting
/// as identity on every basis state with a digit above 1.
UnitaryOp fredkin_oracle_embedded(std::int64_t n_controls, const Register& reg);

/// Controlled-swap circuit on (c:2, t1:3, t2:2) using five two-wire gates plus
/// two level swaps on the middle wire.
Circuit build_fredkin3();

/// n-control generalization on (c1..cn:2, t1:n+2, t2:2) with 2n+3 two-wire
/// gates and 2n single-wire level swaps; build_fredkin_n(1) == build_fredkin3().
Circuit build_fredkin_n(std::int64_t n_controls);

struct VerificationReport {
    std::int64_t n_controls = 0;
    std::int64_t register_dim = 0;
    double max_deviation = 0.0;
    double max_leakage = 0.0;
    bool subspace_preserved = false;
    std::int64_t controlled_count = 0;
    std::int64_t single_qudit_count = 0;
    bool nearest_neighbor = false;
};

inline constexpr std::int64_t kDefaultVerifyDimBudget = 5120;

/// Brute-force comparison of a circuit against the n-control exchange on every
/// qubit-subspace basis input, plus leakage onto auxiliary levels.
VerificationReport verify_circuit(const Circuit& circuit, std::int64_t n_controls);

/// Builds and verifies the generated n-control circuit; refuses registers
/// larger than the dimension budget.
VerificationReport verify_against_oracle(std::int64_t n_controls,
                                         std::int64_t dim_budget = kDefaultVerifyDimBudget);

/// Rewrites a two-qubit CNOT between distant wires of a line register into
/// nearest-neighbor CNOTs; distance m costs 4(m-1) gates for m >= 2.
std::vector<GatePlacement> expand_long_range_cnot(const Register& line, std::size_t control_pos,
                                                  std::size_t target_pos);

}  // namespace fredkit
