#pragma once

#include "fredkit/unitary.hpp"

namespace fredkit {
namespace gates {

/// Qubit bit flip on wire "q".
UnitaryOp sigma_x();

/// Permutation exchanging levels a and b of a dim-level wire "q".
UnitaryOp x_swap(std::int64_t a, std::int64_t b, std::int64_t dim);

/// Qubit CNOT on wires ("c", "t"); the target flips when the control is |1>.
UnitaryOp cnot();

/// Variant firing on control |0> instead of |1>.
UnitaryOp cnot_bar();

/// Half-wave plate at angle theta in degrees, acting on (H, V) = (|0>, |1>):
/// [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
UnitaryOp hwp(double theta_deg);

}  // namespace gates

/// Value-level description of a single-wire gate, the unit a circuit is built
/// from. A GateSpec lifts onto any wire that is large enough: it acts on the
/// levels it names and leaves all other levels of the wire untouched.
struct GateSpec {
    enum class Kind { kSigmaX, kXSwap, kHwp };

    Kind kind = Kind::kSigmaX;
    std::int64_t swap_a = 0;
    std::int64_t swap_b = 0;
    double angle_deg = 0.0;
    std::int64_t hwp_a = 0;
    std::int64_t hwp_b = 1;

    static GateSpec sx();
    static GateSpec xswap(std::int64_t a, std::int64_t b);
    static GateSpec hwp(double angle_deg);
    static GateSpec hwp_on_levels(double angle_deg, std::int64_t a, std::int64_t b);

    /// Smallest wire dimension the gate fits on.
    std::int64_t min_dim() const;

    /// Dense lift of the gate onto a wire with the given dimension.
    Matrix wire_matrix(std::int64_t wire_dim) const;

    /// Gate name as used in diagnostics and circuit documents.
    std::string name() const;

    bool operator==(const GateSpec&) const = default;
};

}  // namespace fredkit
