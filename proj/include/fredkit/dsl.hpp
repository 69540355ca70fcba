#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "fredkit/circuit.hpp"

namespace fredkit {

/// Diagnostic for a rejected circuit document; line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// Message without the line:column prefix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// Reads a circuit document:
///   wires: <label>:<dim> <label>:<dim> ...
///   gate CNOT control=<wire>@<level> target=<wire>
///   gate X swap=<a>,<b> wire=<wire>
///   gate HWP angle=<degrees> wire=<wire>
///   gate SX wire=<wire>
/// Blank lines and lines starting with '#' are ignored.
Circuit parse_circuit(std::string_view text);

/// Canonical document for a circuit; parse_circuit(serialize_circuit(c)) == c.
/// Throws std::invalid_argument for placements the grammar cannot express.
std::string serialize_circuit(const Circuit& circuit);

}  // namespace fredkit
