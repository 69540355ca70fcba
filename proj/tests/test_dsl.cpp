#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "fredkit/dsl.hpp"
#include "fredkit/photonic.hpp"
#include "random_circuit.hpp"

using namespace fredkit;

namespace {

const std::string kFredkin3Doc =
    "wires: c:2 t1:3 t2:2\n"
    "gate CNOT control=t2@1 target=t1\n"
    "gate X swap=0,2 wire=t1\n"
    "gate CNOT control=c@1 target=t1\n"
    "gate CNOT control=t1@0 target=t2\n"
    "gate CNOT control=c@1 target=t1\n"
    "gate X swap=0,2 wire=t1\n"
    "gate CNOT control=t2@1 target=t1\n";

ParseError capture(const std::string& text) {
    try {
        parse_circuit(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError(0, 0, "unreachable");
}

void check_error(const std::string& text, std::size_t line, std::size_t column,
                 const std::string& detail) {
    const ParseError e = capture(text);
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(e.detail() == detail);
}

}  // namespace

TEST_CASE("canonical document parses to the qutrit-assisted exchange") {
    const Circuit parsed = parse_circuit(kFredkin3Doc);
    CHECK(parsed == build_fredkin3());
}

TEST_CASE("serialization emits the canonical document") {
    CHECK(serialize_circuit(build_fredkin3()) == kFredkin3Doc);
}

TEST_CASE("parser tolerates comments, blanks, tabs and CRLF line ends") {
    const std::string messy =
        "# exchange on three wires\r\n"
        "\r\n"
        "wires:\ta:2   b:3\r\n"
        "\n"
        "  gate\tSX  wire=a\r\n"
        "gate X swap=0,2 wire=b";
    const Circuit parsed = parse_circuit(messy);

    Circuit want{Register({{"a", 2}, {"b", 3}}), {}};
    want.add(GateSpec::sx(), "a");
    want.add(GateSpec::xswap(0, 2), "b");
    CHECK(parsed == want);
}

TEST_CASE("header alone yields an empty circuit") {
    const Circuit parsed = parse_circuit("wires: a:2\n");
    CHECK(parsed.reg == Register({{"a", 2}}));
    CHECK(parsed.placements.empty());
}

TEST_CASE("control level zero is preserved") {
    const Circuit parsed = parse_circuit("wires: a:2 b:2\ngate CNOT control=a@0 target=b\n");
    REQUIRE(parsed.placements.size() == 1);
    CHECK(parsed.placements[0].controls == std::vector<ControlSpec>{{"a", 0}});
}

TEST_CASE("diagnostics carry one-based positions") {
    check_error("", 1, 1, "missing 'wires:' header");
    check_error("# nothing\n\n", 1, 1, "missing 'wires:' header");
    check_error("gate SX wire=a\n", 1, 1, "expected 'wires:' header");
    check_error("wires:\n", 1, 1, "at least one wire declaration required");
    check_error("wires: a:2 b\n", 1, 12, "malformed wire declaration 'b'");
    check_error("wires: a:1\n", 1, 10, "wire dimension must be at least 2");
    check_error("wires: a:2 a:3\n", 1, 12, "duplicate wire label 'a'");
    check_error("wires: a:2\nwires: b:2\n", 2, 1, "unexpected second 'wires:' header");
    check_error("wires: a:2\nfoo\n", 2, 1, "expected 'gate'");
    check_error("wires: a:2\ngate\n", 2, 5, "missing gate name");
    check_error("wires: a:2\ngate FOO wire=a\n", 2, 6, "unknown gate 'FOO'");
    check_error("wires: c:2 t1:3 t2:2\ngate CNOT control=t9@1 target=t1\n", 2, 19,
                "unknown wire 't9'");
    check_error("wires: c:2 t1:3 t2:2\ngate CNOT control=c@5 target=t1\n", 2, 21,
                "control level 5 out of range for wire 'c' (dim 2)");
    check_error("wires: c:2 t1:3 t2:2\ngate CNOT control=c@1 target=c\n", 2, 30,
                "control wire equals target wire");
    check_error("wires: c:2 t1:3 t2:2\ngate CNOT control=c1 target=t1\n", 2, 19,
                "expected 'control=<wire>@<level>'");
    check_error("wires: a:3 b:2\ngate X swap=1,1 wire=a\n", 2, 13, "swap levels must differ");
    check_error("wires: a:3 b:2\ngate X swap=0,3 wire=a\n", 2, 13,
                "swap level 3 out of range for wire 'a' (dim 3)");
    check_error("wires: a:2\ngate X swap=0,x wire=a\n", 2, 15, "malformed integer 'x'");
    check_error("wires: a:2\ngate HWP angle=abc wire=a\n", 2, 16, "malformed number 'abc'");
    check_error("wires: a:2\ngate SX wire=a extra\n", 2, 16, "unexpected trailing token 'extra'");
    check_error("wires: a:2\ngate SX\n", 2, 8, "expected 'wire=<wire>'");

    const ParseError e = capture("wires: c:2 t1:3 t2:2\ngate CNOT control=t9@1 target=t1\n");
    CHECK(std::string(e.what()) == "2:19: unknown wire 't9'");
}

TEST_CASE("documents round-trip for the generated circuits") {
    for (std::int64_t n = 1; n <= 4; ++n) {
        const Circuit c = build_fredkin_n(n);
        CHECK(parse_circuit(serialize_circuit(c)) == c);
    }
    const Circuit det = build_deterministic_photonic();
    CHECK(parse_circuit(serialize_circuit(det)) == det);
}

TEST_CASE("generalized circuits serialize with the widened middle wire") {
    const std::string doc = serialize_circuit(build_fredkin_n(2));
    CHECK(doc.substr(0, doc.find('\n')) == "wires: c1:2 c2:2 t1:4 t2:2");
}

TEST_CASE("random circuits round-trip") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const Circuit c = gen::random_circuit(rng);
        const std::string doc = serialize_circuit(c);
        CHECK(parse_circuit(doc) == c);
    }
}

TEST_CASE("wave plate angles survive the round trip exactly") {
    Circuit c{Register({{"a", 2}}), {}};
    c.add(GateSpec::hwp(0.1 + 0.2), "a");
    c.add(GateSpec::hwp(67.5), "a");
    const std::string doc = serialize_circuit(c);
    CHECK(doc.find("angle=0.30000000000000004 ") != std::string::npos);
    CHECK(doc.find("angle=67.5 ") != std::string::npos);
    CHECK(parse_circuit(doc) == c);
}

TEST_CASE("placements outside the grammar are rejected by the serializer") {
    const Register reg({{"a", 4}, {"b", 2}, {"c", 2}});

    Circuit multi{reg, {}};
    multi.add(GateSpec::sx(), "a", {{"b", 1}, {"c", 1}});
    CHECK_THROWS_AS(serialize_circuit(multi), std::invalid_argument);

    Circuit ctrl_swap{reg, {}};
    ctrl_swap.add(GateSpec::xswap(0, 2), "a", {{"b", 1}});
    CHECK_THROWS_AS(serialize_circuit(ctrl_swap), std::invalid_argument);

    Circuit plate{reg, {}};
    plate.add(GateSpec::hwp_on_levels(22.5, 2, 3), "a");
    CHECK_THROWS_AS(serialize_circuit(plate), std::invalid_argument);

    const Circuit odd_label{Register({{"bad label", 2}}), {}};
    CHECK_THROWS_AS(serialize_circuit(odd_label), std::invalid_argument);

    CHECK_THROWS_AS(serialize_circuit(build_heralded_photonic().circuit), std::invalid_argument);
}
