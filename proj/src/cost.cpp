#include "fredkit/cost.hpp"

#include <charconv>
#include <stdexcept>

namespace fredkit {
namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) {
        a = -a;
    }
    if (b < 0) {
        b = -b;
    }
    while (b != 0) {
        const Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

std::int64_t narrow(Wide v) {
    if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Wide g = wide_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) {
            throw std::overflow_error("integer power overflow");
        }
    }
    return out;
}

void require_positive(std::int64_t n) {
    if (n < 1) {
        throw std::domain_error("n must be >= 1");
    }
}

}  // namespace

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw std::domain_error("zero denominator");
    }
    if (den_ < 0) {
        if (num_ == INT64_MIN || den_ == INT64_MIN) {
            throw std::overflow_error("rational arithmetic overflow");
        }
        num_ = -num_;
        den_ = -den_;
    }
    const Wide g = wide_gcd(num_, den_);
    if (g > 1) {
        num_ = static_cast<std::int64_t>(num_ / g);
        den_ = static_cast<std::int64_t>(den_ / g);
    }
}

double Rational::value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a) {
    return Rational(narrow(-Wide(a.num_)), a.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Wide lhs = Wide(a.num_) * b.den_;
    const Wide rhs = Wide(b.num_) * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Rational qsd_count(std::int64_t n_qubits) {
    require_positive(n_qubits);
    const Rational four_n = ipow(4, n_qubits);
    const Rational two_n = ipow(2, n_qubits);
    return Rational(23, 48) * four_n - Rational(3, 2) * two_n + Rational(4, 3);
}

Rational lower_bound_count(std::int64_t n_qubits) {
    require_positive(n_qubits);
    return Rational(ipow(4, n_qubits) - 3 * n_qubits - 1, 4);
}

Rational li_count(std::int64_t n_qubits) {
    require_positive(n_qubits);
    const Rational four_n = ipow(4, n_qubits);
    const Rational two_n = ipow(2, n_qubits);
    if (n_qubits % 2 == 0) {
        return Rational(5, 16) * four_n - Rational(5, 4) * two_n + Rational(2 * n_qubits);
    }
    return Rational(5, 16) * four_n - two_n + Rational(2 * (n_qubits - 1));
}

std::int64_t fredkin_count(std::int64_t n_controls) {
    require_positive(n_controls);
    return 2 * n_controls + 3;
}

std::vector<CostRow> cost_table(std::int64_t max_n) {
    require_positive(max_n);
    std::vector<CostRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        rows.push_back({n, qsd_count(n), lower_bound_count(n), li_count(n), fredkin_count(n)});
    }
    return rows;
}

std::string cost_table_tsv(std::span<const CostRow> rows) {
    std::string out = "n\tqsd\tlower_bound\tli\tfredkin\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "\t" + r.qsd.str() + "\t" + r.lower_bound.str() + "\t" +
               r.li.str() + "\t" + std::to_string(r.fredkin) + "\n";
    }
    return out;
}

namespace {

std::string decimal(const Rational& r) {
    if (r.is_integer()) {
        return std::to_string(r.num());
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), r.value(),
                                         std::chars_format::general, 12);
    if (ec != std::errc()) {
        throw std::runtime_error("decimal rendering failed");
    }
    return std::string(buf, end);
}

void pad_to(std::string& line, std::size_t width) {
    while (line.size() < width) {
        line += ' ';
    }
}

}  // namespace

std::string cost_table_pretty(std::span<const CostRow> rows) {
    // Column widths fit the default range; long values simply shift the row.
    struct Col {
        const char* title;
        std::size_t width;
    };
    const Col cols[] = {{"n", 4},      {"qsd", 18},     {"lower_bound", 18},
                        {"li", 18},    {"fredkin", 10}, {"n^2 (reference)", 16}};
    std::string out;
    std::string line;
    for (const auto& c : cols) {
        const std::size_t start = line.size();
        line += c.title;
        pad_to(line, start + c.width);
    }
    while (!line.empty() && line.back() == ' ') {
        line.pop_back();
    }
    out += line + "\n";
    for (const auto& r : rows) {
        line.clear();
        std::size_t start = 0;
        auto cell = [&](const std::string& text, std::size_t width) {
            line += text;
            pad_to(line, start + width);
            start += width;
        };
        cell(std::to_string(r.n), cols[0].width);
        cell(decimal(r.qsd), cols[1].width);
        cell(decimal(r.lower_bound), cols[2].width);
        cell(decimal(r.li), cols[3].width);
        cell(std::to_string(r.fredkin), cols[4].width);
        cell(std::to_string(r.n * r.n), cols[5].width);
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace fredkit
