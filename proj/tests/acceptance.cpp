// Acceptance checks for the toolkit: one PASS/FAIL line per criterion, exit
// status is the number of failed criteria. Tolerances are pinned here on
// purpose; loosening them is not an acceptable fix for a regression.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <random>
#include <string>

#include "fredkit/cost.hpp"
#include "fredkit/dsl.hpp"
#include "fredkit/photonic.hpp"
#include "random_circuit.hpp"
#include "tables.hpp"

using namespace fredkit;
using reftab::expected_state;
using reftab::input_state;
using reftab::max_abs_diff;
using reftab::random_alpha;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  %2d. %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

void guarded(int number, const std::string& name, void (*body)(int, const std::string&)) {
    try {
        body(number, name);
    } catch (const std::exception& e) {
        report(number, name, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

double now_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

void criterion1(int number, const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    const Circuit circuit = build_fredkin3();
    const UnitaryOp compiled = circuit_unitary(circuit);
    const UnitaryOp oracle = fredkin_oracle_embedded(1, circuit.reg);
    const double dev = equiv_on_subspace(compiled, oracle, qubit_subspace(circuit.reg));
    const double ms = now_ms(start);
    report(number, name, dev <= 1e-12 && ms < 100.0,
           fmt("deviation %.3g, %.2f ms", dev, ms));
}

void criterion2(int number, const std::string& name) {
    const Circuit circuit = build_fredkin3();
    const struct {
        std::size_t prefix;
        std::span<const reftab::Term> terms;
    } stages[] = {
        {1, reftab::kStage1}, {2, reftab::kStage2}, {5, reftab::kStage5}, {7, reftab::kFinal}};
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto alpha = random_alpha(8, rng);
        const PureState in = input_state(circuit.reg, alpha);
        for (const auto& stage : stages) {
            const PureState mid = apply_circuit_prefix(circuit, in, stage.prefix);
            worst = std::max(
                worst, max_abs_diff(mid.amplitudes(),
                                    expected_state(circuit.reg, stage.terms, alpha)));
        }
    }
    report(number, name, worst <= 1e-12, fmt("20 random inputs, worst %.3g", worst));
}

void criterion3(int number, const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool counts_ok = true;
    for (std::int64_t n = 1; n <= 6; ++n) {
        const VerificationReport r = verify_against_oracle(n);
        worst = std::max({worst, r.max_deviation, r.max_leakage});
        counts_ok = counts_ok && r.controlled_count == 2 * n + 3 &&
                    r.single_qudit_count == 2 * n && r.subspace_preserved;
    }
    const double ms = now_ms(start);
    report(number, name, worst <= 1e-12 && counts_ok && ms < 10000.0,
           fmt("n=1..6, worst deviation %.3g, %.0f ms", worst, ms));
}

void criterion4(int number, const std::string& name) {
    const UnitaryOp flip = embed(gates::sigma_x(), {"c"}, gates::cnot().reg());
    const Matrix conjugated = flip.matrix() * gates::cnot_bar().matrix() * flip.matrix();
    const double diff = (conjugated - gates::cnot().matrix()).cwiseAbs().maxCoeff();
    report(number, name, diff == 0.0, fmt("max entry difference %g", diff));
}

void criterion5(int number, const std::string& name) {
    bool ok = qsd_count(3) == Rational(20) && lower_bound_count(3) == Rational(27, 2) &&
              li_count(3) == Rational(16);
    for (std::int64_t n = 1; n <= 20; ++n) {
        ok = ok && fredkin_count(n) == 2 * n + 3;
    }
    report(number, name, ok, "qsd(3)=20, lower_bound(3)=27/2, li(3)=16, linear family count");
}

void criterion6(int number, const std::string& name) {
    const Register line({{"q0", 2}, {"q1", 2}, {"q2", 2}, {"q3", 2}});
    const struct {
        std::size_t control;
        std::size_t target;
        std::size_t count;
    } cases[] = {{0, 2, 4}, {2, 0, 4}, {0, 3, 8}, {3, 0, 8}};
    double worst = 0.0;
    bool ok = true;
    for (const auto& c : cases) {
        const auto placements = expand_long_range_cnot(line, c.control, c.target);
        ok = ok && placements.size() == c.count;
        Matrix compiled = Matrix::Identity(line.total_dim(), line.total_dim());
        for (const auto& p : placements) {
            ok = ok && p.controls.size() == 1;
            const auto cpos = line.index_of(p.controls[0].wire);
            const auto tpos = line.index_of(p.target);
            ok = ok && (cpos > tpos ? cpos - tpos : tpos - cpos) == 1;
            compiled = placement_unitary(line, p).matrix() * compiled;
        }
        const UnitaryOp direct =
            controlled(gates::sigma_x().on({line.wire(c.target).label}),
                       line.wire(c.control).label, 1, line);
        worst = std::max(worst, (compiled - direct.matrix()).cwiseAbs().maxCoeff());
    }
    report(number, name, ok && worst <= 1e-12,
           fmt("distances 2 and 3, both directions, worst %.3g", worst));
}

void criterion7(int number, const std::string& name) {
    const Circuit det = build_deterministic_photonic();
    std::mt19937_64 rng(21);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto alpha = random_alpha(8, rng);
        const PureState in = input_state(det.reg, alpha);
        const PureState mid = apply_circuit_prefix(det, in, 5);
        worst = std::max(worst, max_abs_diff(mid.amplitudes(),
                                             expected_state(det.reg, reftab::kRailStage5, alpha)));
        const PureState out = apply_circuit(det, in);
        worst = std::max(worst, max_abs_diff(out.amplitudes(),
                                             expected_state(det.reg, reftab::kRailFinal, alpha)));
    }
    report(number, name, worst <= 1e-12, fmt("20 random inputs, worst %.3g", worst));
}

void criterion8(int number, const std::string& name) {
    const HeraldedCircuit her = build_heralded_photonic();
    const Register pol = polarization_register();
    const UnitaryOp oracle = fredkin_oracle(1);
    const UnitaryOp click = heralded_failure_map();

    double worst_prob = 0.0;
    double worst_kept = 0.0;
    double worst_fail = 0.0;
    double worst_trace = 0.0;

    std::mt19937_64 rng(2718);
    std::vector<PureState> inputs;
    for (std::int64_t idx = 0; idx < 8; ++idx) {
        Vector amps = Vector::Zero(8);
        amps(idx) = Complex(1.0, 0.0);
        inputs.emplace_back(pol, std::move(amps));
    }
    for (int trial = 0; trial < 100; ++trial) {
        inputs.push_back(random_state(pol, rng));
    }
    for (const PureState& in : inputs) {
        const HeraldedOutcome outcome = run_heralded(in);
        worst_prob = std::max(worst_prob, std::abs(outcome.success_probability - 0.5));
        worst_kept = std::max(worst_kept, max_abs_diff(outcome.kept_state.amplitudes(),
                                                       oracle.matrix() * in.amplitudes()));
        worst_fail = std::max(worst_fail, max_abs_diff(outcome.failure_state.amplitudes(),
                                                       click.matrix() * in.amplitudes()));
    }

    {
        const auto alpha = random_alpha(8, rng);
        const PureState in = input_state(her.circuit.reg, alpha);
        const struct {
            std::size_t prefix;
            std::span<const reftab::Term> terms;
        } stages[] = {{6, reftab::kPlateStage}, {7, reftab::kMergeStage}, {8, reftab::kKeptStage}};
        for (const auto& stage : stages) {
            const PureState mid = apply_circuit_prefix(her.circuit, in, stage.prefix);
            worst_trace = std::max(
                worst_trace, max_abs_diff(mid.amplitudes(),
                                          expected_state(her.circuit.reg, stage.terms, alpha)));
        }
    }

    // Independent Monte Carlo estimate of the click rate.
    const PureState pre_detection =
        apply_circuit(her.circuit, lift_polarization_input(random_state(pol, rng)));
    std::mt19937_64 sampler(31);
    const int draws = 100000;
    int clicks = 0;
    for (int i = 0; i < draws; ++i) {
        clicks += sample_detector_click(pre_detection, sampler) ? 1 : 0;
    }
    const double freq = static_cast<double>(clicks) / draws;

    const bool pass = worst_prob <= 1e-12 && worst_kept <= 1e-12 && worst_fail <= 1e-12 &&
                      worst_trace <= 1e-12 && std::abs(freq - 0.5) <= 0.01;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "108 inputs, worst |p-1/2| %.3g, branch error %.3g, click rate %.4f/100000",
                  worst_prob, std::max({worst_kept, worst_fail, worst_trace}), freq);
    report(number, name, pass, buf);
}

void criterion9(int number, const std::string& name) {
    const double s = reftab::kHalfRoot;
    const UnitaryOp low_op = gates::hwp(22.5);
    const UnitaryOp high_op = gates::hwp(67.5);
    const Matrix& low = low_op.matrix();
    const Matrix& high = high_op.matrix();
    Matrix want_low(2, 2);
    want_low << s, s, s, -s;
    Matrix want_high(2, 2);
    want_high << -s, s, s, s;
    double worst = std::max((low - want_low).cwiseAbs().maxCoeff(),
                            (high - want_high).cwiseAbs().maxCoeff());
    worst = std::max(worst, (low * low - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (high * high - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff());
    report(number, name, worst <= 1e-15, fmt("worst entry error %.3g", worst));
}

void criterion10(int number, const std::string& name) {
    bool ok = true;
    const Circuit named[] = {build_fredkin3(), build_fredkin_n(3), build_deterministic_photonic()};
    for (const Circuit& c : named) {
        ok = ok && parse_circuit(serialize_circuit(c)) == c;
    }
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        const Circuit c = gen::random_circuit(rng);
        ok = ok && parse_circuit(serialize_circuit(c)) == c;
    }

    const auto tmp = std::filesystem::temp_directory_path() / "fredkit_acceptance.eq";
    const std::string cli = FREDKIT_CLI_PATH;
    auto shell = [](const std::string& cmd) {
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    const int synth_rc = shell("\"" + cli + "\" synth --controls 2 --out \"" + tmp.string() +
                               "\" >/dev/null 2>&1");
    const int verify_rc =
        shell("\"" + cli + "\" verify \"" + tmp.string() + "\" >/dev/null 2>&1");
    ok = ok && synth_rc == 0 && verify_rc == 0;

    char buf[120];
    std::snprintf(buf, sizeof(buf), "203 circuits round-tripped, synth rc=%d, verify rc=%d",
                  synth_rc, verify_rc);
    report(number, name, ok, buf);
}

}  // namespace

int main() {
    guarded(1, "qutrit-assisted exchange matches the brute-force oracle", criterion1);
    guarded(2, "intermediate states follow the tabulated routing", criterion2);
    guarded(3, "n-control family verifies with 2n+3 two-wire gates", criterion3);
    guarded(4, "flipping the control conjugates between the two CNOT senses", criterion4);
    guarded(5, "gate-count formulas match their pinned values", criterion5);
    guarded(6, "long-range CNOT rewrite is nearest-neighbor and exact", criterion6);
    guarded(7, "deterministic optical model routes amplitudes as tabulated", criterion7);
    guarded(8, "heralded optical model: even odds, exact branches", criterion8);
    guarded(9, "wave plate matrices are pinned at both angles", criterion9);
    guarded(10, "circuit documents round-trip and the CLI verifies its own output", criterion10);

    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
    } else {
        std::printf("%d of 10 criteria FAILED\n", g_failures);
    }
    return g_failures;
}
