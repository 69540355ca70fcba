#include "fredkit/dsl.hpp"

#include <charconv>
#include <vector>

namespace fredkit {
namespace {

struct Token {
    std::string_view text;
    std::size_t col = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        toks.push_back({line.substr(start, i - start), start + 1});
    }
    return toks;
}

[[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& message) {
    throw ParseError(line, col, message);
}

std::int64_t parse_int(std::string_view text, std::size_t line, std::size_t col) {
    std::int64_t value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        fail(line, col, "malformed integer '" + std::string(text) + "'");
    }
    return value;
}

double parse_double(std::string_view text, std::size_t line, std::size_t col) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        fail(line, col, "malformed number '" + std::string(text) + "'");
    }
    return value;
}

bool valid_label(std::string_view s) {
    auto alpha = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (s.empty() || !alpha(s[0])) {
        return false;
    }
    for (const char c : s.substr(1)) {
        if (!alnum(c)) {
            return false;
        }
    }
    return true;
}

struct Field {
    std::string_view value;
    std::size_t col = 0;
};

Field expect_field(const Token& tok, std::string_view key, std::string_view syntax,
                   std::size_t line) {
    const bool matches = tok.text.size() > key.size() + 1 &&
                         tok.text.substr(0, key.size()) == key && tok.text[key.size()] == '=';
    if (!matches) {
        fail(line, tok.col, "expected '" + std::string(syntax) + "'");
    }
    return {tok.text.substr(key.size() + 1), tok.col + key.size() + 1};
}

std::string fmt_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::invalid_argument("angle not representable");
    }
    return std::string(buf, ptr);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

Circuit parse_circuit(std::string_view text) {
    std::vector<std::string_view> lines;
    {
        std::size_t start = 0;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == '\n') {
                std::string_view line = text.substr(start, i - start);
                if (!line.empty() && line.back() == '\r') {
                    line.remove_suffix(1);
                }
                lines.push_back(line);
                start = i + 1;
            }
        }
    }

    Circuit circuit;
    bool have_wires = false;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t lineno = li + 1;
        const auto toks = tokenize(lines[li]);
        if (toks.empty() || toks[0].text.front() == '#') {
            continue;
        }

        if (!have_wires) {
            if (toks[0].text != "wires:") {
                fail(lineno, toks[0].col, "expected 'wires:' header");
            }
            if (toks.size() == 1) {
                fail(lineno, toks[0].col, "at least one wire declaration required");
            }
            std::vector<WireSpec> wires;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const auto& t = toks[i];
                const auto colon = t.text.find(':');
                if (colon == std::string_view::npos || colon == 0 ||
                    colon + 1 == t.text.size() || !valid_label(t.text.substr(0, colon))) {
                    fail(lineno, t.col,
                         "malformed wire declaration '" + std::string(t.text) + "'");
                }
                const auto label = t.text.substr(0, colon);
                const auto dim = parse_int(t.text.substr(colon + 1), lineno, t.col + colon + 1);
                if (dim < 2) {
                    fail(lineno, t.col + colon + 1, "wire dimension must be at least 2");
                }
                for (const auto& w : wires) {
                    if (w.label == label) {
                        fail(lineno, t.col, "duplicate wire label '" + std::string(label) + "'");
                    }
                }
                wires.push_back({std::string(label), dim});
            }
            circuit.reg = Register(std::move(wires));
            have_wires = true;
            continue;
        }

        if (toks[0].text == "wires:") {
            fail(lineno, toks[0].col, "unexpected second 'wires:' header");
        }
        if (toks[0].text != "gate") {
            fail(lineno, toks[0].col, "expected 'gate'");
        }
        const std::size_t eol = toks.back().col + toks.back().text.size();
        if (toks.size() < 2) {
            fail(lineno, eol, "missing gate name");
        }
        const Token& name = toks[1];

        auto need = [&](std::size_t index, std::string_view syntax) -> const Token& {
            if (toks.size() <= index) {
                fail(lineno, eol, "expected '" + std::string(syntax) + "'");
            }
            return toks[index];
        };
        auto no_extra = [&](std::size_t from) {
            if (toks.size() > from) {
                fail(lineno, toks[from].col,
                     "unexpected trailing token '" + std::string(toks[from].text) + "'");
            }
        };
        auto wire_pos = [&](std::string_view label, std::size_t col) -> std::size_t {
            if (const auto p = circuit.reg.find(label)) {
                return *p;
            }
            fail(lineno, col, "unknown wire '" + std::string(label) + "'");
        };

        if (name.text == "CNOT") {
            const Field ctl =
                expect_field(need(2, "control=<wire>@<level>"), "control",
                             "control=<wire>@<level>", lineno);
            const auto at = ctl.value.find('@');
            if (at == std::string_view::npos || at == 0 || at + 1 == ctl.value.size()) {
                fail(lineno, ctl.col, "expected 'control=<wire>@<level>'");
            }
            const auto control_wire = ctl.value.substr(0, at);
            const std::size_t cpos = wire_pos(control_wire, ctl.col);
            const auto level = parse_int(ctl.value.substr(at + 1), lineno, ctl.col + at + 1);
            if (level < 0 || level >= circuit.reg.wire(cpos).dim) {
                fail(lineno, ctl.col + at + 1,
                     "control level " + std::to_string(level) + " out of range for wire '" +
                         std::string(control_wire) + "' (dim " +
                         std::to_string(circuit.reg.wire(cpos).dim) + ")");
            }
            const Field tgt =
                expect_field(need(3, "target=<wire>"), "target", "target=<wire>", lineno);
            wire_pos(tgt.value, tgt.col);
            if (tgt.value == control_wire) {
                fail(lineno, tgt.col, "control wire equals target wire");
            }
            no_extra(4);
            circuit.placements.push_back({GateSpec::sx(), std::string(tgt.value),
                                          {{std::string(control_wire), level}}});
        } else if (name.text == "X") {
            const Field sw = expect_field(need(2, "swap=<a>,<b>"), "swap", "swap=<a>,<b>", lineno);
            const auto comma = sw.value.find(',');
            if (comma == std::string_view::npos || comma == 0 || comma + 1 == sw.value.size()) {
                fail(lineno, sw.col, "expected 'swap=<a>,<b>'");
            }
            const auto a = parse_int(sw.value.substr(0, comma), lineno, sw.col);
            const auto b = parse_int(sw.value.substr(comma + 1), lineno, sw.col + comma + 1);
            const Field w = expect_field(need(3, "wire=<wire>"), "wire", "wire=<wire>", lineno);
            const std::size_t pos = wire_pos(w.value, w.col);
            const auto dim = circuit.reg.wire(pos).dim;
            if (a == b) {
                fail(lineno, sw.col, "swap levels must differ");
            }
            for (const auto level : {a, b}) {
                if (level < 0 || level >= dim) {
                    fail(lineno, sw.col,
                         "swap level " + std::to_string(level) + " out of range for wire '" +
                             std::string(w.value) + "' (dim " + std::to_string(dim) + ")");
                }
            }
            no_extra(4);
            circuit.placements.push_back({GateSpec::xswap(a, b), std::string(w.value), {}});
        } else if (name.text == "HWP") {
            const Field ang =
                expect_field(need(2, "angle=<degrees>"), "angle", "angle=<degrees>", lineno);
            const double angle = parse_double(ang.value, lineno, ang.col);
            const Field w = expect_field(need(3, "wire=<wire>"), "wire", "wire=<wire>", lineno);
            wire_pos(w.value, w.col);
            no_extra(4);
            circuit.placements.push_back({GateSpec::hwp(angle), std::string(w.value), {}});
        } else if (name.text == "SX") {
            const Field w = expect_field(need(2, "wire=<wire>"), "wire", "wire=<wire>", lineno);
            wire_pos(w.value, w.col);
            no_extra(3);
            circuit.placements.push_back({GateSpec::sx(), std::string(w.value), {}});
        } else {
            fail(lineno, name.col, "unknown gate '" + std::string(name.text) + "'");
        }
    }

    if (!have_wires) {
        fail(1, 1, "missing 'wires:' header");
    }
    return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
    validate_circuit(circuit);
    for (const auto& w : circuit.reg.wires()) {
        if (!valid_label(w.label)) {
            throw std::invalid_argument("wire label '" + w.label +
                                        "' not representable in the document format");
        }
    }

    std::string out = "wires:";
    for (const auto& w : circuit.reg.wires()) {
        out += " " + w.label + ":" + std::to_string(w.dim);
    }
    out += "\n";

    for (const auto& p : circuit.placements) {
        switch (p.gate.kind) {
            case GateSpec::Kind::kSigmaX:
                if (p.controls.size() == 1) {
                    out += "gate CNOT control=" + p.controls[0].wire + "@" +
                           std::to_string(p.controls[0].level) + " target=" + p.target + "\n";
                } else if (p.controls.empty()) {
                    out += "gate SX wire=" + p.target + "\n";
                } else {
                    throw std::invalid_argument(
                        "multiply-controlled placement not representable in the document format");
                }
                break;
            case GateSpec::Kind::kXSwap:
                if (!p.controls.empty()) {
                    throw std::invalid_argument(
                        "controlled level swap not representable in the document format");
                }
                out += "gate X swap=" + std::to_string(p.gate.swap_a) + "," +
                       std::to_string(p.gate.swap_b) + " wire=" + p.target + "\n";
                break;
            case GateSpec::Kind::kHwp:
                if (!p.controls.empty() || p.gate.hwp_a != 0 || p.gate.hwp_b != 1) {
                    throw std::invalid_argument(
                        "wave plate off the base levels not representable in the document format");
                }
                out += "gate HWP angle=" + fmt_double(p.gate.angle_deg) + " wire=" + p.target +
                       "\n";
                break;
        }
    }
    return out;
}

}  // namespace fredkit
