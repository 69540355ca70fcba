#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fredkit/state.hpp"

namespace fredkit {

/// Dense square operator on a mixed-radix register.
///
/// The register names the wires the operator acts on; for gates meant to be
/// embedded into a larger register the wire labels identify the targets.
class UnitaryOp {
public:
    UnitaryOp(Register reg, Matrix matrix);

    static UnitaryOp identity(const Register& reg);

    const Register& reg() const { return reg_; }
    const Matrix& matrix() const { return m_; }

    /// max_ij |(U^dagger U - I)_ij|
    double unitarity_error() const;

    /// Copy with the wires relabeled, e.g. sigma_x().on({"t2"}).
    UnitaryOp on(std::vector<std::string> labels) const;

private:
    Register reg_;
    Matrix m_;
};

PureState apply(const UnitaryOp& op, const PureState& state);

/// Lifts a gate onto the named wires of a larger register.
///
/// A gate wire of dimension d may be placed on a register wire of dimension
/// D >= d; it then acts on levels 0..d-1 and leaves higher levels alone.
UnitaryOp embed(const UnitaryOp& gate, std::span<const std::string> target_wires,
                const Register& reg);
UnitaryOp embed(const UnitaryOp& gate, std::initializer_list<std::string> target_wires,
                const Register& reg);

/// Applies the gate (targets named by its own register) iff the control wire
/// holds the given level; all other control-digit blocks act as identity.
UnitaryOp controlled(const UnitaryOp& gate, std::string_view control_wire,
                     std::int64_t control_level, const Register& reg);

/// Control on one (wire, level) pair per entry; all must hold for the gate to fire.
UnitaryOp controlled(const UnitaryOp& gate,
                     std::span<const std::pair<std::string, std::int64_t>> controls,
                     const Register& reg);

/// Max elementwise deviation between two operators restricted to the given
/// basis indices, after aligning a global phase. The phase is read off the
/// largest-magnitude restricted element of the second operand.
double equiv_on_subspace(const UnitaryOp& u, const UnitaryOp& v,
                         std::span<const std::int64_t> subspace);

/// Same comparison for raw equal-shape matrices.
double phase_aligned_deviation(const Matrix& a, const Matrix& b);
double phase_aligned_deviation(const Vector& a, const Vector& b);

}  // namespace fredkit
