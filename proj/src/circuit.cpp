#include "fredkit/circuit.hpp"

#include <stdexcept>

namespace fredkit {

void Circuit::add(GateSpec gate, std::string target, std::vector<ControlSpec> controls) {
    GatePlacement p{std::move(gate), std::move(target), std::move(controls)};
    validate_placement(reg, p);
    placements.push_back(std::move(p));
}

std::int64_t Circuit::controlled_count() const {
    std::int64_t n = 0;
    for (const auto& p : placements) {
        if (!p.controls.empty()) {
            ++n;
        }
    }
    return n;
}

std::int64_t Circuit::single_qudit_count() const {
    return static_cast<std::int64_t>(placements.size()) - controlled_count();
}

void validate_placement(const Register& reg, const GatePlacement& placement) {
    const std::size_t t = reg.index_of(placement.target);
    if (reg.wire(t).dim < placement.gate.min_dim()) {
        throw std::domain_error("gate " + placement.gate.name() + " does not fit on wire '" +
                                placement.target + "'");
    }
    for (std::size_t i = 0; i < placement.controls.size(); ++i) {
        const auto& c = placement.controls[i];
        const std::size_t p = reg.index_of(c.wire);
        if (p == t) {
            throw std::domain_error("control wire '" + c.wire + "' equals the target wire");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (placement.controls[j].wire == c.wire) {
                throw std::domain_error("duplicate control wire '" + c.wire + "'");
            }
        }
        if (c.level < 0 || c.level >= reg.wire(p).dim) {
            throw std::domain_error("control level " + std::to_string(c.level) +
                                    " out of range for wire '" + c.wire + "'");
        }
    }
}

void validate_circuit(const Circuit& circuit) {
    for (const auto& p : circuit.placements) {
        validate_placement(circuit.reg, p);
    }
}

void apply_placement_in_place(const Register& reg, const GatePlacement& placement, Vector& amps) {
    if (amps.size() != reg.total_dim()) {
        throw std::invalid_argument("amplitude vector length does not match register dimension");
    }
    const std::size_t t = reg.index_of(placement.target);
    const std::int64_t dim = reg.wire(t).dim;
    const std::int64_t stride = reg.stride(t);
    const Matrix m = placement.gate.wire_matrix(dim);

    struct Ctl {
        std::int64_t stride;
        std::int64_t dim;
        std::int64_t level;
    };
    std::vector<Ctl> ctls;
    ctls.reserve(placement.controls.size());
    for (const auto& c : placement.controls) {
        const std::size_t p = reg.index_of(c.wire);
        if (p == t) {
            throw std::domain_error("control wire '" + c.wire + "' equals the target wire");
        }
        if (c.level < 0 || c.level >= reg.wire(p).dim) {
            throw std::domain_error("control level " + std::to_string(c.level) +
                                    " out of range for wire '" + c.wire + "'");
        }
        ctls.push_back({reg.stride(p), reg.wire(p).dim, c.level});
    }

    const std::int64_t block = dim * stride;
    Vector fiber(dim);
    for (std::int64_t base0 = 0; base0 < reg.total_dim(); base0 += block) {
        for (std::int64_t off = 0; off < stride; ++off) {
            const std::int64_t base = base0 + off;
            bool fires = true;
            for (const auto& c : ctls) {
                if ((base / c.stride) % c.dim != c.level) {
                    fires = false;
                    break;
                }
            }
            if (!fires) {
                continue;
            }
            for (std::int64_t k = 0; k < dim; ++k) {
                fiber(k) = amps(base + k * stride);
            }
            for (std::int64_t r = 0; r < dim; ++r) {
                Complex acc(0.0, 0.0);
                for (std::int64_t k = 0; k < dim; ++k) {
                    acc += m(r, k) * fiber(k);
                }
                amps(base + r * stride) = acc;
            }
        }
    }
}

PureState apply_circuit(const Circuit& circuit, const PureState& input) {
    return apply_circuit_prefix(circuit, input, circuit.placements.size());
}

PureState apply_circuit_prefix(const Circuit& circuit, const PureState& input, std::size_t count) {
    if (circuit.reg != input.reg()) {
        throw std::domain_error("circuit and state act on different registers");
    }
    if (count > circuit.placements.size()) {
        throw std::domain_error("prefix length exceeds circuit length");
    }
    Vector amps = input.amplitudes();
    for (std::size_t i = 0; i < count; ++i) {
        apply_placement_in_place(circuit.reg, circuit.placements[i], amps);
    }
    return PureState(circuit.reg, std::move(amps));
}

UnitaryOp placement_unitary(const Register& reg, const GatePlacement& placement) {
    validate_placement(reg, placement);
    const std::size_t t = reg.index_of(placement.target);
    const std::int64_t dim = reg.wire(t).dim;
    const UnitaryOp gate(Register({{placement.target, dim}}), placement.gate.wire_matrix(dim));
    std::vector<std::pair<std::string, std::int64_t>> controls;
    controls.reserve(placement.controls.size());
    for (const auto& c : placement.controls) {
        controls.emplace_back(c.wire, c.level);
    }
    return controlled(gate, controls, reg);
}

UnitaryOp circuit_unitary(const Circuit& circuit) {
    validate_circuit(circuit);
    const std::int64_t total = circuit.reg.total_dim();
    Matrix u = Matrix::Identity(total, total);
    for (std::int64_t col = 0; col < total; ++col) {
        Vector v = u.col(col);
        for (const auto& p : circuit.placements) {
            apply_placement_in_place(circuit.reg, p, v);
        }
        u.col(col) = v;
    }
    return UnitaryOp(circuit.reg, std::move(u));
}

}  // namespace fredkit
