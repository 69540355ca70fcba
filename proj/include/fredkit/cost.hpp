#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fredkit {

/// Exact fraction over int64 with overflow-checked arithmetic.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double value() const;
    /// "20" for integers, "27/2" otherwise.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// CNOT count of the quantum Shannon decomposition of a generic n-qubit
/// unitary: (23/48)*4^n - (3/2)*2^n + 4/3.
Rational qsd_count(std::int64_t n_qubits);

/// Theoretical minimum CNOT count for a generic n-qubit unitary: (4^n-3n-1)/4.
Rational lower_bound_count(std::int64_t n_qubits);

/// CNOT count of the best known generic circuit construction for n qubits:
/// (5/16)*4^n - (5/4)*2^n + 2n for even n, (5/16)*4^n - 2^n + 2(n-1) for odd n.
Rational li_count(std::int64_t n_qubits);

/// CNOT count of the generated n-control exchange circuit: 2n+3.
std::int64_t fredkin_count(std::int64_t n_controls);

struct CostRow {
    std::int64_t n = 0;
    Rational qsd;
    Rational lower_bound;
    Rational li;
    std::int64_t fredkin = 0;
};

/// Rows for n = 1..max_n; each column evaluates its formula at the row's n.
std::vector<CostRow> cost_table(std::int64_t max_n);

std::string cost_table_tsv(std::span<const CostRow> rows);
std::string cost_table_pretty(std::span<const CostRow> rows);

}  // namespace fredkit
