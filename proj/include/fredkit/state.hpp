#pragma once

#include <complex>
#include <random>

#include <Eigen/Core>

#include "fredkit/register.hpp"

namespace fredkit {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Default numeric tolerance for norm, unitarity and equivalence checks.
inline constexpr double kTol = 1e-12;

/// Normalized amplitude vector over a register's computational basis.
class PureState {
public:
    PureState(Register reg, Vector amplitudes);

    static PureState basis(const Register& reg, std::span<const std::int64_t> digits);
    static PureState basis(const Register& reg, std::initializer_list<std::int64_t> digits);
    /// Rescales an arbitrary nonzero amplitude vector to unit norm.
    static PureState normalized(Register reg, Vector amplitudes);

    const Register& reg() const { return reg_; }
    const Vector& amplitudes() const { return amps_; }
    Complex amplitude(std::int64_t basis_index) const;
    double norm() const;

private:
    Register reg_;
    Vector amps_;
};

/// Amplitudes drawn i.i.d. from the complex standard normal, then normalized.
PureState random_state(const Register& reg, std::mt19937_64& rng);

}  // namespace fredkit
