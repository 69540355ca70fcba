#include "fredkit/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace fredkit {

UnitaryOp::UnitaryOp(Register reg, Matrix matrix) : reg_(std::move(reg)), m_(std::move(matrix)) {
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument("operator matrix must be square");
    }
    if (m_.rows() != reg_.total_dim()) {
        throw std::invalid_argument("operator matrix size does not match register dimension");
    }
}

UnitaryOp UnitaryOp::identity(const Register& reg) {
    return UnitaryOp(reg, Matrix::Identity(reg.total_dim(), reg.total_dim()));
}

double UnitaryOp::unitarity_error() const {
    const Matrix gram = m_.adjoint() * m_;
    return (gram - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

UnitaryOp UnitaryOp::on(std::vector<std::string> labels) const {
    if (labels.size() != reg_.wire_count()) {
        throw std::invalid_argument("expected one label per wire");
    }
    std::vector<WireSpec> wires;
    wires.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        wires.push_back({std::move(labels[i]), reg_.wire(i).dim});
    }
    return UnitaryOp(Register(std::move(wires)), m_);
}

PureState apply(const UnitaryOp& op, const PureState& state) {
    if (op.reg() != state.reg()) {
        throw std::domain_error("operator and state act on different registers");
    }
    return PureState(state.reg(), op.matrix() * state.amplitudes());
}

UnitaryOp embed(const UnitaryOp& gate, std::span<const std::string> target_wires,
                const Register& reg) {
    const Register& greg = gate.reg();
    if (target_wires.size() != greg.wire_count()) {
        throw std::domain_error("expected one target wire per gate wire");
    }
    std::vector<std::size_t> pos(target_wires.size());
    for (std::size_t i = 0; i < target_wires.size(); ++i) {
        pos[i] = reg.index_of(target_wires[i]);
        if (greg.wire(i).dim > reg.wire(pos[i]).dim) {
            throw std::domain_error("gate dimension exceeds wire '" + reg.wire(pos[i]).label + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (pos[j] == pos[i]) {
                throw std::domain_error("target wires must be distinct");
            }
        }
    }

    const std::int64_t total = reg.total_dim();
    const std::int64_t gtotal = greg.total_dim();
    Matrix out = Matrix::Zero(total, total);
    std::vector<std::int64_t> gdigits(target_wires.size());
    for (std::int64_t col = 0; col < total; ++col) {
        const auto digits = reg.basis_digits(col);
        bool inside = true;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            gdigits[i] = digits[pos[i]];
            if (gdigits[i] >= greg.wire(i).dim) {
                inside = false;
                break;
            }
        }
        if (!inside) {
            out(col, col) = Complex(1.0, 0.0);
            continue;
        }
        const std::int64_t gcol = greg.basis_index(gdigits);
        for (std::int64_t grow = 0; grow < gtotal; ++grow) {
            const Complex v = gate.matrix()(grow, gcol);
            if (v == Complex(0.0, 0.0)) {
                continue;
            }
            auto rdigits = digits;
            const auto gd = greg.basis_digits(grow);
            for (std::size_t i = 0; i < pos.size(); ++i) {
                rdigits[pos[i]] = gd[i];
            }
            out(reg.basis_index(rdigits), col) = v;
        }
    }
    return UnitaryOp(reg, std::move(out));
}

UnitaryOp embed(const UnitaryOp& gate, std::initializer_list<std::string> target_wires,
                const Register& reg) {
    const std::vector<std::string> names(target_wires);
    return embed(gate, std::span<const std::string>(names), reg);
}

UnitaryOp controlled(const UnitaryOp& gate, std::string_view control_wire,
                     std::int64_t control_level, const Register& reg) {
    const std::pair<std::string, std::int64_t> one{std::string(control_wire), control_level};
    return controlled(gate, std::span<const std::pair<std::string, std::int64_t>>(&one, 1), reg);
}

UnitaryOp controlled(const UnitaryOp& gate,
                     std::span<const std::pair<std::string, std::int64_t>> controls,
                     const Register& reg) {
    std::vector<std::string> targets;
    targets.reserve(gate.reg().wire_count());
    for (const auto& w : gate.reg().wires()) {
        targets.push_back(w.label);
    }
    UnitaryOp embedded = embed(gate, targets, reg);
    if (controls.empty()) {
        return embedded;
    }

    std::vector<std::pair<std::size_t, std::int64_t>> resolved;
    resolved.reserve(controls.size());
    for (const auto& [label, level] : controls) {
        const std::size_t p = reg.index_of(label);
        for (const auto& t : targets) {
            if (t == label) {
                throw std::domain_error("control wire '" + label + "' overlaps a target wire");
            }
        }
        for (const auto& [q, lvl] : resolved) {
            (void)lvl;
            if (q == p) {
                throw std::domain_error("duplicate control wire '" + label + "'");
            }
        }
        if (level < 0 || level >= reg.wire(p).dim) {
            throw std::domain_error("control level " + std::to_string(level) +
                                    " out of range for wire '" + label + "'");
        }
        resolved.emplace_back(p, level);
    }

    const std::int64_t total = reg.total_dim();
    Matrix out = Matrix::Identity(total, total);
    for (std::int64_t col = 0; col < total; ++col) {
        bool fires = true;
        for (const auto& [p, level] : resolved) {
            if (reg.digit_at(col, p) != level) {
                fires = false;
                break;
            }
        }
        if (fires) {
            out.col(col) = embedded.matrix().col(col);
        }
    }
    return UnitaryOp(reg, std::move(out));
}

double equiv_on_subspace(const UnitaryOp& u, const UnitaryOp& v,
                         std::span<const std::int64_t> subspace) {
    if (u.reg() != v.reg()) {
        throw std::domain_error("operands act on different registers");
    }
    if (subspace.empty()) {
        throw std::domain_error("subspace must not be empty");
    }
    const std::int64_t total = u.reg().total_dim();
    for (const auto idx : subspace) {
        if (idx < 0 || idx >= total) {
            throw std::domain_error("subspace index " + std::to_string(idx) + " out of range");
        }
    }
    const auto n = static_cast<std::int64_t>(subspace.size());
    Matrix a(n, n);
    Matrix b(n, n);
    for (std::int64_t r = 0; r < n; ++r) {
        for (std::int64_t c = 0; c < n; ++c) {
            a(r, c) = u.matrix()(subspace[r], subspace[c]);
            b(r, c) = v.matrix()(subspace[r], subspace[c]);
        }
    }
    return phase_aligned_deviation(a, b);
}

double phase_aligned_deviation(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrices must have the same shape");
    }
    std::int64_t br = 0;
    std::int64_t bc = 0;
    double best = -1.0;
    for (std::int64_t c = 0; c < b.cols(); ++c) {
        for (std::int64_t r = 0; r < b.rows(); ++r) {
            const double mag = std::abs(b(r, c));
            if (mag > best) {
                best = mag;
                br = r;
                bc = c;
            }
        }
    }
    Complex phase(1.0, 0.0);
    if (best > 0.0 && std::abs(a(br, bc)) > 0.0) {
        phase = (a(br, bc) / std::abs(a(br, bc))) * (std::conj(b(br, bc)) / std::abs(b(br, bc)));
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

double phase_aligned_deviation(const Vector& a, const Vector& b) {
    return phase_aligned_deviation(Matrix(a), Matrix(b));
}

}  // namespace fredkit
