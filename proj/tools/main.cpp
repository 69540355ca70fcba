#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fredkit/cost.hpp"
#include "fredkit/dsl.hpp"
#include "fredkit/photonic.hpp"
#include "fredkit/synthesis.hpp"

namespace {

constexpr double kCliThreshold = 1e-9;

std::string g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void kv(const std::string& key, const std::string& value) {
    std::printf("%-22s %s\n", (key + ":").c_str(), value.c_str());
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

struct SynthOptions {
    std::int64_t controls = 0;
    std::string out_path;
};

struct VerifyOptions {
    std::string path;
    std::string oracle;
};

struct SimOptions {
    std::string path;
    std::string input;
};

struct CostOptions {
    std::int64_t max_n = 0;
    bool pretty = false;
};

struct PhotonicOptions {
    std::string variant;
    std::int64_t trials = 100;
    std::uint64_t seed = 1;
};

int run_synth(const SynthOptions& opt) {
    const fredkit::Circuit circuit = fredkit::build_fredkin_n(opt.controls);
    const std::string text = fredkit::serialize_circuit(circuit);
    if (opt.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out || !(out << text)) {
        return usage_error("cannot write file '" + opt.out_path + "'");
    }
    return 0;
}

int parse_document(const std::string& path, fredkit::Circuit& circuit) {
    std::string text;
    if (!read_file(path, text)) {
        return usage_error("cannot read file '" + path + "'");
    }
    try {
        circuit = fredkit::parse_circuit(text);
    } catch (const fredkit::ParseError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return 2;
    }
    return 0;
}

int run_verify(const VerifyOptions& opt) {
    fredkit::Circuit circuit;
    if (const int rc = parse_document(opt.path, circuit); rc != 0) {
        return rc;
    }

    std::int64_t n_controls = static_cast<std::int64_t>(circuit.reg.wire_count()) - 2;
    if (!opt.oracle.empty()) {
        const std::string prefix = "fredkin:";
        if (opt.oracle.rfind(prefix, 0) != 0) {
            return usage_error("unsupported oracle '" + opt.oracle + "'");
        }
        const std::string num = opt.oracle.substr(prefix.size());
        const auto [ptr, ec] =
            std::from_chars(num.data(), num.data() + num.size(), n_controls);
        if (ec != std::errc() || ptr != num.data() + num.size()) {
            return usage_error("unsupported oracle '" + opt.oracle + "'");
        }
    }
    if (n_controls < 1) {
        return usage_error("register does not look like an n-control layout (need n+2 wires)");
    }
    if (circuit.reg.total_dim() > fredkit::kDefaultVerifyDimBudget) {
        return usage_error("dimension budget exceeded: register dimension " +
                           std::to_string(circuit.reg.total_dim()) + " > " +
                           std::to_string(fredkit::kDefaultVerifyDimBudget));
    }

    const fredkit::VerificationReport report = fredkit::verify_circuit(circuit, n_controls);
    kv("controls", std::to_string(report.n_controls));
    kv("register dim", std::to_string(report.register_dim));
    kv("max deviation", g12(report.max_deviation));
    kv("max leakage", g12(report.max_leakage));
    kv("controlled gates", std::to_string(report.controlled_count));
    kv("single-qudit gates", std::to_string(report.single_qudit_count));
    kv("nearest neighbor", report.nearest_neighbor ? "yes" : "no");
    const bool pass = report.max_deviation <= kCliThreshold;
    kv("result", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int run_sim(const SimOptions& opt) {
    fredkit::Circuit circuit;
    if (const int rc = parse_document(opt.path, circuit); rc != 0) {
        return rc;
    }

    std::vector<std::int64_t> digits;
    std::size_t start = 0;
    const std::string& text = opt.input;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string piece = text.substr(start, comma - start);
        std::int64_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) {
            return usage_error("malformed input digit '" + piece + "'");
        }
        digits.push_back(value);
        start = comma + 1;
    }
    if (digits.size() != circuit.reg.wire_count()) {
        return usage_error("expected " + std::to_string(circuit.reg.wire_count()) +
                           " input digits, got " + std::to_string(digits.size()));
    }

    fredkit::PureState state = [&] {
        try {
            return fredkit::PureState::basis(circuit.reg, digits);
        } catch (const std::domain_error& e) {
            throw std::invalid_argument(e.what());
        }
    }();
    const fredkit::PureState out = fredkit::apply_circuit(circuit, state);
    for (std::int64_t idx = 0; idx < circuit.reg.total_dim(); ++idx) {
        const fredkit::Complex amp = out.amplitude(idx);
        if (std::abs(amp) <= 1e-12) {
            continue;
        }
        const auto out_digits = circuit.reg.basis_digits(idx);
        std::string row;
        for (std::size_t i = 0; i < out_digits.size(); ++i) {
            row += (i == 0 ? "" : ",") + std::to_string(out_digits[i]);
        }
        std::printf("%s %s %s\n", row.c_str(), g12(amp.real()).c_str(), g12(amp.imag()).c_str());
    }
    return 0;
}

int run_cost(const CostOptions& opt) {
    const auto rows = fredkit::cost_table(opt.max_n);
    const std::string text =
        opt.pretty ? fredkit::cost_table_pretty(rows) : fredkit::cost_table_tsv(rows);
    std::fputs(text.c_str(), stdout);
    return 0;
}

int run_photonic_deterministic(const PhotonicOptions& opt) {
    const fredkit::Circuit circuit = fredkit::build_deterministic_photonic();
    const fredkit::VerificationReport report = fredkit::verify_circuit(circuit, 1);
    const fredkit::UnitaryOp oracle = fredkit::fredkin_oracle(1);

    std::mt19937_64 rng(opt.seed);
    double max_trial_dev = 0.0;
    for (std::int64_t t = 0; t < opt.trials; ++t) {
        const fredkit::PureState input = fredkit::random_state(fredkit::polarization_register(), rng);
        const fredkit::PureState out =
            fredkit::apply_circuit(circuit, fredkit::lift_polarization_input(input));
        const fredkit::PureState ideal =
            fredkit::lift_polarization_input(fredkit::apply(oracle, input));
        const double dev =
            fredkit::phase_aligned_deviation(out.amplitudes(), ideal.amplitudes());
        max_trial_dev = std::max(max_trial_dev, dev);
    }

    kv("variant", "deterministic");
    kv("controlled gates", std::to_string(report.controlled_count));
    kv("single-qudit gates", std::to_string(report.single_qudit_count));
    kv("register dim", std::to_string(report.register_dim));
    kv("max deviation", g12(report.max_deviation));
    kv("max leakage", g12(report.max_leakage));
    kv("trials", std::to_string(opt.trials));
    kv("seed", std::to_string(opt.seed));
    kv("max trial deviation", g12(max_trial_dev));
    const bool pass = report.max_deviation <= kCliThreshold && max_trial_dev <= kCliThreshold;
    kv("result", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int run_photonic_heralded(const PhotonicOptions& opt) {
    const fredkit::HeraldedCircuit gate = fredkit::build_heralded_photonic();
    const fredkit::UnitaryOp oracle = fredkit::fredkin_oracle(1);
    const fredkit::UnitaryOp failure_map = fredkit::heralded_failure_map();

    std::mt19937_64 rng(opt.seed);
    double max_prob_err = 0.0;
    double min_fidelity = 1.0;
    double max_failure_dev = 0.0;
    double max_prob_defect = 0.0;
    for (std::int64_t t = 0; t < opt.trials; ++t) {
        const fredkit::PureState input = fredkit::random_state(fredkit::polarization_register(), rng);
        const fredkit::HeraldedOutcome outcome = fredkit::run_heralded(input);
        max_prob_err = std::max(max_prob_err, std::abs(outcome.success_probability - 0.5));
        max_prob_defect = std::max(
            max_prob_defect,
            std::abs(outcome.success_probability + outcome.failure_probability - 1.0));
        const fredkit::PureState ideal = fredkit::apply(oracle, input);
        const fredkit::Complex overlap =
            ideal.amplitudes().dot(outcome.kept_state.amplitudes());
        min_fidelity = std::min(min_fidelity, std::norm(overlap));
        const fredkit::PureState expected_failure = fredkit::apply(failure_map, input);
        const double fdev = (outcome.failure_state.amplitudes() - expected_failure.amplitudes())
                                .cwiseAbs()
                                .maxCoeff();
        max_failure_dev = std::max(max_failure_dev, fdev);
    }

    kv("variant", "heralded");
    kv("controlled gates", std::to_string(gate.circuit.controlled_count()));
    kv("single-qudit gates", std::to_string(gate.circuit.single_qudit_count()));
    kv("register dim", std::to_string(gate.circuit.reg.total_dim()));
    kv("trials", std::to_string(opt.trials));
    kv("seed", std::to_string(opt.seed));
    kv("max |success-0.5|", g12(max_prob_err));
    kv("min kept fidelity", g12(min_fidelity));
    kv("max failure deviation", g12(max_failure_dev));
    kv("max probability defect", g12(max_prob_defect));
    const bool pass = max_prob_err <= kCliThreshold && (1.0 - min_fidelity) <= kCliThreshold &&
                      max_failure_dev <= kCliThreshold && max_prob_defect <= kCliThreshold;
    kv("result", pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed-radix qudit circuit toolkit: controlled-swap synthesis, "
                 "verification, simulation and photonic models"};
    app.require_subcommand(1);

    SynthOptions synth_opt;
    auto* synth = app.add_subcommand("synth", "Generate the n-control exchange circuit");
    synth->add_option("--controls", synth_opt.controls, "Number of control wires")
        ->required()
        ->check(CLI::PositiveNumber);
    synth->add_option("--out", synth_opt.out_path, "Write the circuit document here");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Compare a circuit document against the oracle");
    verify->add_option("file", verify_opt.path, "Circuit document")->required();
    verify->add_option("--oracle", verify_opt.oracle, "Oracle selector, e.g. fredkin:2");

    SimOptions sim_opt;
    auto* sim = app.add_subcommand("sim", "Apply a circuit document to a basis input");
    sim->add_option("file", sim_opt.path, "Circuit document")->required();
    sim->add_option("--input", sim_opt.input, "Comma-separated basis digits")->required();

    CostOptions cost_opt;
    auto* cost = app.add_subcommand("cost", "Print the CNOT-count comparison table");
    cost->add_option("--max-n", cost_opt.max_n, "Largest n row")
        ->required()
        ->check(CLI::PositiveNumber);
    cost->add_flag("--pretty", cost_opt.pretty, "Aligned table with an n^2 reference column");

    PhotonicOptions photonic_opt;
    auto* photonic = app.add_subcommand("photonic", "Run an optical model");
    photonic->add_option("--variant", photonic_opt.variant, "deterministic or heralded")
        ->required()
        ->check(CLI::IsMember({"deterministic", "heralded"}));
    photonic->add_option("--trials", photonic_opt.trials, "Random input draws")
        ->check(CLI::PositiveNumber);
    photonic->add_option("--seed", photonic_opt.seed, "Random generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (synth->parsed()) {
            return run_synth(synth_opt);
        }
        if (verify->parsed()) {
            return run_verify(verify_opt);
        }
        if (sim->parsed()) {
            return run_sim(sim_opt);
        }
        if (cost->parsed()) {
            return run_cost(cost_opt);
        }
        if (photonic->parsed()) {
            return photonic_opt.variant == "deterministic"
                       ? run_photonic_deterministic(photonic_opt)
                       : run_photonic_heralded(photonic_opt);
        }
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    return 2;
}
