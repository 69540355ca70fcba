#include "fredkit/state.hpp"

#include <cmath>
#include <stdexcept>

namespace fredkit {

PureState::PureState(Register reg, Vector amplitudes)
    : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
    if (amps_.size() != reg_.total_dim()) {
        throw std::invalid_argument("amplitude vector length does not match register dimension");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > kTol) {
        throw std::invalid_argument("state is not normalized");
    }
}

PureState PureState::basis(const Register& reg, std::span<const std::int64_t> digits) {
    Vector amps = Vector::Zero(reg.total_dim());
    amps(reg.basis_index(digits)) = Complex(1.0, 0.0);
    return PureState(reg, std::move(amps));
}

PureState PureState::basis(const Register& reg, std::initializer_list<std::int64_t> digits) {
    return basis(reg, std::span<const std::int64_t>(digits.begin(), digits.size()));
}

PureState PureState::normalized(Register reg, Vector amplitudes) {
    const double n = amplitudes.norm();
    if (n < 1e-300) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return PureState(std::move(reg), amplitudes / n);
}

Complex PureState::amplitude(std::int64_t basis_index) const {
    if (basis_index < 0 || basis_index >= amps_.size()) {
        throw std::domain_error("basis index " + std::to_string(basis_index) + " out of range");
    }
    return amps_(basis_index);
}

double PureState::norm() const {
    return amps_.norm();
}

PureState random_state(const Register& reg, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector amps(reg.total_dim());
    for (std::int64_t i = 0; i < amps.size(); ++i) {
        amps(i) = Complex(gauss(rng), gauss(rng));
    }
    return PureState::normalized(reg, std::move(amps));
}

}  // namespace fredkit
