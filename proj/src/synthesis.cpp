#include "fredkit/synthesis.hpp"

#include <stdexcept>

namespace fredkit {
namespace {

std::string control_label(std::int64_t n_controls, std::int64_t k) {
    return n_controls == 1 ? "c" : "c" + std::to_string(k);
}

Register qubit_register(std::int64_t n_controls) {
    std::vector<WireSpec> wires;
    for (std::int64_t k = 1; k <= n_controls; ++k) {
        wires.push_back({control_label(n_controls, k), 2});
    }
    wires.push_back({"t1", 2});
    wires.push_back({"t2", 2});
    return Register(std::move(wires));
}

void require_controls(std::int64_t n_controls) {
    if (n_controls < 1) {
        throw std::domain_error("control count must be >= 1");
    }
    if (n_controls > 60) {
        throw std::domain_error("control count too large");
    }
}

}  // namespace

UnitaryOp fredkin_oracle(std::int64_t n_controls) {
    require_controls(n_controls);
    return fredkin_oracle_embedded(n_controls, qubit_register(n_controls));
}

UnitaryOp fredkin_oracle_embedded(std::int64_t n_controls, const Register& reg) {
    require_controls(n_controls);
    if (reg.wire_count() != static_cast<std::size_t>(n_controls) + 2) {
        throw std::domain_error("register must have n+2 wires");
    }
    const std::size_t t1 = reg.wire_count() - 2;
    const std::size_t t2 = reg.wire_count() - 1;
    const std::int64_t total = reg.total_dim();
    Matrix m = Matrix::Zero(total, total);
    for (std::int64_t col = 0; col < total; ++col) {
        auto digits = reg.basis_digits(col);
        bool swap = true;
        for (std::size_t i = 0; i < reg.wire_count(); ++i) {
            if (digits[i] > 1) {
                swap = false;
                break;
            }
            if (i < t1 && digits[i] != 1) {
                swap = false;
            }
        }
        if (swap) {
            std::swap(digits[t1], digits[t2]);
        }
        m(reg.basis_index(digits), col) = Complex(1.0, 0.0);
    }
    return UnitaryOp(reg, std::move(m));
}

Circuit build_fredkin3() {
    return build_fredkin_n(1);
}

Circuit build_fredkin_n(std::int64_t n_controls) {
    require_controls(n_controls);
    std::vector<WireSpec> wires;
    for (std::int64_t k = 1; k <= n_controls; ++k) {
        wires.push_back({control_label(n_controls, k), 2});
    }
    wires.push_back({"t1", n_controls + 2});
    wires.push_back({"t2", 2});

    Circuit c{Register(std::move(wires)), {}};
    c.add(GateSpec::sx(), "t1", {{"t2", 1}});
    for (std::int64_t k = 1; k <= n_controls; ++k) {
        // Parks the working level on level k+1 while control k is folded in;
        // later swaps never touch levels above their own k+1, so parked
        // amplitudes stay put until the mirror half unwinds them.
        c.add(GateSpec::xswap((k - 1) % 2, k + 1), "t1");
        c.add(GateSpec::sx(), "t1", {{control_label(n_controls, k), 1}});
    }
    c.add(GateSpec::sx(), "t2", {{"t1", n_controls % 2 == 1 ? 0 : 1}});
    for (std::int64_t k = n_controls; k >= 1; --k) {
        c.add(GateSpec::sx(), "t1", {{control_label(n_controls, k), 1}});
        c.add(GateSpec::xswap((k - 1) % 2, k + 1), "t1");
    }
    c.add(GateSpec::sx(), "t1", {{"t2", 1}});
    return c;
}

VerificationReport verify_circuit(const Circuit& circuit, std::int64_t n_controls) {
    require_controls(n_controls);
    validate_circuit(circuit);
    if (circuit.reg.wire_count() != static_cast<std::size_t>(n_controls) + 2) {
        throw std::domain_error("register must have n+2 wires for an n-control comparison");
    }

    const auto subspace = qubit_subspace(circuit.reg);
    const auto n_sub = static_cast<std::int64_t>(subspace.size());
    const std::int64_t total = circuit.reg.total_dim();
    std::vector<char> in_subspace(static_cast<std::size_t>(total), 0);
    for (const auto idx : subspace) {
        in_subspace[static_cast<std::size_t>(idx)] = 1;
    }

    const UnitaryOp oracle = fredkin_oracle(n_controls);
    Matrix restricted(n_sub, n_sub);
    double leak = 0.0;
    for (std::int64_t k = 0; k < n_sub; ++k) {
        Vector v = Vector::Zero(total);
        v(subspace[k]) = Complex(1.0, 0.0);
        for (const auto& p : circuit.placements) {
            apply_placement_in_place(circuit.reg, p, v);
        }
        for (std::int64_t i = 0; i < total; ++i) {
            if (!in_subspace[static_cast<std::size_t>(i)]) {
                leak = std::max(leak, std::abs(v(i)));
            }
        }
        for (std::int64_t r = 0; r < n_sub; ++r) {
            restricted(r, k) = v(subspace[r]);
        }
    }

    VerificationReport report;
    report.n_controls = n_controls;
    report.register_dim = total;
    report.max_deviation = phase_aligned_deviation(restricted, oracle.matrix());
    report.max_leakage = leak;
    report.subspace_preserved = leak <= kTol;
    report.controlled_count = circuit.controlled_count();
    report.single_qudit_count = circuit.single_qudit_count();

    bool adjacent = true;
    for (const auto& p : circuit.placements) {
        if (p.controls.empty()) {
            continue;
        }
        const auto t = static_cast<std::int64_t>(circuit.reg.index_of(p.target));
        for (const auto& ctl : p.controls) {
            const auto q = static_cast<std::int64_t>(circuit.reg.index_of(ctl.wire));
            if (std::abs(q - t) != 1) {
                adjacent = false;
            }
        }
    }
    report.nearest_neighbor = adjacent;
    return report;
}

VerificationReport verify_against_oracle(std::int64_t n_controls, std::int64_t dim_budget) {
    require_controls(n_controls);
    const Circuit c = build_fredkin_n(n_controls);
    if (c.reg.total_dim() > dim_budget) {
        throw std::domain_error("dimension budget exceeded: register dimension " +
                                std::to_string(c.reg.total_dim()) + " > " +
                                std::to_string(dim_budget));
    }
    return verify_circuit(c, n_controls);
}

std::vector<GatePlacement> expand_long_range_cnot(const Register& line, std::size_t control_pos,
                                                  std::size_t target_pos) {
    if (control_pos >= line.wire_count() || target_pos >= line.wire_count()) {
        throw std::domain_error("wire position out of range");
    }
    if (control_pos == target_pos) {
        throw std::domain_error("control and target must differ");
    }
    for (const auto& w : line.wires()) {
        if (w.dim != 2) {
            throw std::domain_error("line register must be all qubits");
        }
    }

    auto cnot_at = [&](std::size_t c, std::size_t t) {
        return GatePlacement{GateSpec::sx(), line.wire(t).label, {{line.wire(c).label, 1}}};
    };

    const auto m = static_cast<std::int64_t>(control_pos < target_pos ? target_pos - control_pos
                                                                      : control_pos - target_pos);
    if (m == 1) {
        return {cnot_at(control_pos, target_pos)};
    }

    // Virtual position p in 1..m+1 counts from the control toward the target.
    const std::int64_t dir = control_pos < target_pos ? 1 : -1;
    auto at = [&](std::int64_t p) {
        return static_cast<std::size_t>(static_cast<std::int64_t>(control_pos) + dir * (p - 1));
    };

    std::vector<GatePlacement> seq;
    seq.reserve(static_cast<std::size_t>(4 * (m - 1)));
    for (std::int64_t k = 1; k <= m; ++k) {
        seq.push_back(cnot_at(at(k), at(k + 1)));
    }
    for (std::int64_t k = m - 1; k >= 1; --k) {
        seq.push_back(cnot_at(at(k), at(k + 1)));
    }
    for (std::int64_t k = 2; k <= m; ++k) {
        seq.push_back(cnot_at(at(k), at(k + 1)));
    }
    for (std::int64_t k = m - 1; k >= 2; --k) {
        seq.push_back(cnot_at(at(k), at(k + 1)));
    }
    return seq;
}

}  // namespace fredkit
