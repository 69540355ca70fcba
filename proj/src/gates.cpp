#include "fredkit/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fredkit {
namespace {

Matrix two_level(const Matrix& block, std::int64_t a, std::int64_t b, std::int64_t dim) {
    Matrix m = Matrix::Identity(dim, dim);
    m(a, a) = block(0, 0);
    m(a, b) = block(0, 1);
    m(b, a) = block(1, 0);
    m(b, b) = block(1, 1);
    return m;
}

Matrix sigma_x_block() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix hwp_block(double theta_deg) {
    const double t = 2.0 * theta_deg * std::numbers::pi / 180.0;
    Matrix m(2, 2);
    m << std::cos(t), std::sin(t), std::sin(t), -std::cos(t);
    return m;
}

Register one_wire(std::int64_t dim) {
    return Register({{"q", dim}});
}

}  // namespace

namespace gates {

UnitaryOp sigma_x() {
    return UnitaryOp(one_wire(2), sigma_x_block());
}

UnitaryOp x_swap(std::int64_t a, std::int64_t b, std::int64_t dim) {
    return UnitaryOp(one_wire(dim), GateSpec::xswap(a, b).wire_matrix(dim));
}

UnitaryOp cnot() {
    Register reg({{"c", 2}, {"t", 2}});
    Matrix m = Matrix::Identity(4, 4);
    m(2, 2) = 0;
    m(3, 3) = 0;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return UnitaryOp(std::move(reg), std::move(m));
}

UnitaryOp cnot_bar() {
    Register reg({{"c", 2}, {"t", 2}});
    Matrix m = Matrix::Identity(4, 4);
    m(0, 0) = 0;
    m(1, 1) = 0;
    m(0, 1) = 1;
    m(1, 0) = 1;
    return UnitaryOp(std::move(reg), std::move(m));
}

UnitaryOp hwp(double theta_deg) {
    return UnitaryOp(one_wire(2), hwp_block(theta_deg));
}

}  // namespace gates

GateSpec GateSpec::sx() {
    return GateSpec{};
}

GateSpec GateSpec::xswap(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || a == b) {
        throw std::domain_error("swap levels must be distinct and nonnegative");
    }
    GateSpec g;
    g.kind = Kind::kXSwap;
    g.swap_a = a;
    g.swap_b = b;
    return g;
}

GateSpec GateSpec::hwp(double angle_deg) {
    return hwp_on_levels(angle_deg, 0, 1);
}

GateSpec GateSpec::hwp_on_levels(double angle_deg, std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || a == b) {
        throw std::domain_error("wave-plate levels must be distinct and nonnegative");
    }
    GateSpec g;
    g.kind = Kind::kHwp;
    g.angle_deg = angle_deg;
    g.hwp_a = a;
    g.hwp_b = b;
    return g;
}

std::int64_t GateSpec::min_dim() const {
    switch (kind) {
        case Kind::kSigmaX:
            return 2;
        case Kind::kXSwap:
            return std::max(swap_a, swap_b) + 1;
        case Kind::kHwp:
            return std::max(hwp_a, hwp_b) + 1;
    }
    throw std::logic_error("unreachable");
}

Matrix GateSpec::wire_matrix(std::int64_t wire_dim) const {
    if (wire_dim < min_dim()) {
        throw std::domain_error("gate " + name() + " does not fit on a wire of dimension " +
                                std::to_string(wire_dim));
    }
    switch (kind) {
        case Kind::kSigmaX:
            return two_level(sigma_x_block(), 0, 1, wire_dim);
        case Kind::kXSwap:
            return two_level(sigma_x_block(), swap_a, swap_b, wire_dim);
        case Kind::kHwp:
            return two_level(hwp_block(angle_deg), hwp_a, hwp_b, wire_dim);
    }
    throw std::logic_error("unreachable");
}

std::string GateSpec::name() const {
    switch (kind) {
        case Kind::kSigmaX:
            return "SX";
        case Kind::kXSwap:
            return "X(" + std::to_string(swap_a) + "," + std::to_string(swap_b) + ")";
        case Kind::kHwp:
            return "HWP(" + std::to_string(angle_deg) + ")";
    }
    throw std::logic_error("unreachable");
}

}  // namespace fredkit
