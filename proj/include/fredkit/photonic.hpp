#pragma once

#include <random>

#include "fredkit/synthesis.hpp"

namespace fredkit {

// The middle photon carries polarization (H=0, V=1) and a spatial mode
// (u=0, d=1) folded into one dim-4 wire: level = 2*spatial + polarization,
// so levels 0..3 read (H,u), (V,u), (H,d), (V,d). Photons enter on rail u,
// which makes rail u exactly the qubit levels {0,1} of the composite wire.

/// Logical register (c:2, t1:2, t2:2), one polarization qubit per photon.
Register polarization_register();

/// Physical register (c:2, t1:4, t2:2) with the composite middle wire.
Register photonic_register();

/// Beam splitter on the composite wire: H-polarized amplitude changes rail,
/// V-polarized amplitude keeps its rail, no reflection phase.
UnitaryOp pbs_split();
/// The merging side is the same rail exchange; after it, levels {0,1} are the
/// kept output port and levels {2,3} the second port.
UnitaryOp pbs_merge();

/// Controlled-swap via an extra spatial mode: rail-confined CNOTs between two
/// beam splitters. Its restriction to the polarization space is the exchange.
Circuit build_deterministic_photonic();

struct HeraldedCircuit {
    Circuit circuit;
    /// Position of the composite wire watched by the detector.
    std::size_t detector_wire = 0;
    /// Levels >= this value land on the detector port.
    std::int64_t first_detector_level = 0;
};

/// Variant trading the two inner rail swaps for wave plates plus a detector;
/// a click announces failure, no click certifies an exact controlled swap.
HeraldedCircuit build_heralded_photonic();

struct HeraldedOutcome {
    double success_probability = 0.0;
    double failure_probability = 0.0;
    /// Post-selected no-click state on polarization_register().
    PureState kept_state;
    /// Renormalized click-branch state on polarization_register().
    PureState failure_state;
};

/// Injects a polarization-register state into the physical register on rail u.
PureState lift_polarization_input(const PureState& pol_state);

/// Runs the heralded gate on a logical input and splits the detector branches.
HeraldedOutcome run_heralded(const PureState& pol_input);

/// Signed permutation the click branch applies to the logical input.
UnitaryOp heralded_failure_map();

/// Samples one projective detector outcome from the pre-detection state.
bool sample_detector_click(const PureState& pre_detection, std::mt19937_64& rng);

}  // namespace fredkit
