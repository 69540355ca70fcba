#include "fredkit/photonic.hpp"

#include <cmath>
#include <stdexcept>

namespace fredkit {
namespace {

constexpr std::int64_t kHu = 0;
constexpr std::int64_t kHd = 2;

Register pol_reg() {
    return Register({{"c", 2}, {"t1", 2}, {"t2", 2}});
}

Register phys_reg() {
    return Register({{"c", 2}, {"t1", 4}, {"t2", 2}});
}

UnitaryOp rail_exchange() {
    return gates::x_swap(kHu, kHd, 4).on({"t1"});
}

}  // namespace

Register polarization_register() {
    return pol_reg();
}

Register photonic_register() {
    return phys_reg();
}

UnitaryOp pbs_split() {
    return rail_exchange();
}

UnitaryOp pbs_merge() {
    return rail_exchange();
}

Circuit build_deterministic_photonic() {
    Circuit c{phys_reg(), {}};
    c.add(GateSpec::sx(), "t1", {{"t2", 1}});
    c.add(GateSpec::xswap(kHu, kHd), "t1");
    // The next three placements act on levels {0,1} = rail u only; rail-d
    // amplitude bypasses them by construction of the embedding.
    c.add(GateSpec::sx(), "t1", {{"c", 1}});
    c.add(GateSpec::sx(), "t2", {{"t1", 0}});
    c.add(GateSpec::sx(), "t1", {{"c", 1}});
    c.add(GateSpec::xswap(kHu, kHd), "t1");
    c.add(GateSpec::sx(), "t1", {{"t2", 1}});
    return c;
}

HeraldedCircuit build_heralded_photonic() {
    Circuit c{phys_reg(), {}};
    c.add(GateSpec::sx(), "t1", {{"t2", 1}});
    c.add(GateSpec::xswap(kHu, kHd), "t1");
    c.add(GateSpec::sx(), "t1", {{"c", 1}});
    c.add(GateSpec::sx(), "t2", {{"t1", 0}});
    c.add(GateSpec::hwp(67.5), "t1");
    c.add(GateSpec::hwp_on_levels(22.5, 2, 3), "t1");
    c.add(GateSpec::xswap(kHu, kHd), "t1");
    c.add(GateSpec::sx(), "t1", {{"t2", 1}});
    return {std::move(c), 1, 2};
}

PureState lift_polarization_input(const PureState& pol_state) {
    if (pol_state.reg() != pol_reg()) {
        throw std::domain_error("input must live on the polarization register");
    }
    const Register target = phys_reg();
    Vector out = Vector::Zero(target.total_dim());
    const Register& source = pol_state.reg();
    for (std::int64_t idx = 0; idx < source.total_dim(); ++idx) {
        const auto digits = source.basis_digits(idx);
        out(target.basis_index({digits[0], digits[1], digits[2]})) = pol_state.amplitude(idx);
    }
    return PureState(target, std::move(out));
}

HeraldedOutcome run_heralded(const PureState& pol_input) {
    const HeraldedCircuit gate = build_heralded_photonic();
    const PureState lifted = lift_polarization_input(pol_input);
    const PureState evolved = apply_circuit(gate.circuit, lifted);

    const Register& phys = gate.circuit.reg;
    const Register logical = pol_reg();
    Vector kept = Vector::Zero(logical.total_dim());
    Vector failed = Vector::Zero(logical.total_dim());
    double p_keep = 0.0;
    double p_fail = 0.0;
    for (std::int64_t idx = 0; idx < phys.total_dim(); ++idx) {
        const Complex amp = evolved.amplitude(idx);
        const auto digits = phys.basis_digits(idx);
        const std::int64_t level = digits[gate.detector_wire];
        const double weight = std::norm(amp);
        if (level < gate.first_detector_level) {
            kept(logical.basis_index({digits[0], level, digits[2]})) = amp;
            p_keep += weight;
        } else {
            failed(logical.basis_index({digits[0], level - gate.first_detector_level,
                                        digits[2]})) = amp;
            p_fail += weight;
        }
    }
    if (p_keep < 1e-15 || p_fail < 1e-15) {
        throw std::runtime_error("degenerate detection branch");
    }
    return {p_keep, p_fail, PureState(logical, kept / std::sqrt(p_keep)),
            PureState(logical, failed / std::sqrt(p_fail))};
}

UnitaryOp heralded_failure_map() {
    // Click-branch action on (c, t1, t2), read off the renormalized failure
    // states of the basis inputs; two paths pick up a sign flip.
    struct Entry {
        std::int64_t in;
        std::int64_t out;
        double sign;
    };
    static constexpr Entry table[] = {
        {0, 2, 1.0}, {1, 1, 1.0}, {2, 0, 1.0},  {3, 3, 1.0},
        {4, 6, 1.0}, {5, 4, -1.0}, {6, 5, -1.0}, {7, 7, 1.0},
    };
    Matrix m = Matrix::Zero(8, 8);
    for (const auto& e : table) {
        m(e.out, e.in) = Complex(e.sign, 0.0);
    }
    return UnitaryOp(pol_reg(), std::move(m));
}

bool sample_detector_click(const PureState& pre_detection, std::mt19937_64& rng) {
    const HeraldedCircuit gate = build_heralded_photonic();
    if (pre_detection.reg() != gate.circuit.reg) {
        throw std::domain_error("state must live on the physical photonic register");
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double u = uniform(rng);
    double acc = 0.0;
    std::int64_t drawn = pre_detection.reg().total_dim() - 1;
    for (std::int64_t idx = 0; idx < pre_detection.reg().total_dim(); ++idx) {
        acc += std::norm(pre_detection.amplitude(idx));
        if (u < acc) {
            drawn = idx;
            break;
        }
    }
    return pre_detection.reg().digit_at(drawn, gate.detector_wire) >= gate.first_detector_level;
}

}  // namespace fredkit
