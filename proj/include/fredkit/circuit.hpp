#pragma once

#include "fredkit/gates.hpp"

namespace fredkit {

struct ControlSpec {
    std::string wire;
    std::int64_t level = 1;

    bool operator==(const ControlSpec&) const = default;
};

/// One gate on one target wire, optionally conditioned on control levels.
struct GatePlacement {
    GateSpec gate;
    std::string target;
    std::vector<ControlSpec> controls;

    bool operator==(const GatePlacement&) const = default;
};

/// Time-ordered gate list over a fixed register; placements apply left to right.
struct Circuit {
    Register reg;
    std::vector<GatePlacement> placements;

    void add(GateSpec gate, std::string target, std::vector<ControlSpec> controls = {});

    std::int64_t controlled_count() const;
    std::int64_t single_qudit_count() const;

    bool operator==(const Circuit&) const = default;
};

/// Checks wire names, gate fit and control levels; throws std::domain_error.
void validate_placement(const Register& reg, const GatePlacement& placement);
void validate_circuit(const Circuit& circuit);

/// In-place kernel: walks the amplitude vector once, touching each length-D
/// fiber of the target wire, so a placement costs O(total_dim * D).
void apply_placement_in_place(const Register& reg, const GatePlacement& placement, Vector& amps);

PureState apply_circuit(const Circuit& circuit, const PureState& input);
/// Applies only the first `count` placements; used to inspect intermediate states.
PureState apply_circuit_prefix(const Circuit& circuit, const PureState& input, std::size_t count);

/// Dense operator of one placement, built from embed/controlled.
UnitaryOp placement_unitary(const Register& reg, const GatePlacement& placement);
/// Dense operator of the full circuit (first placement applied first).
UnitaryOp circuit_unitary(const Circuit& circuit);

}  // namespace fredkit
