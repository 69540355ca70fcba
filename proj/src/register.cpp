#include "fredkit/register.hpp"

#include <stdexcept>
#include <unordered_set>

namespace fredkit {

Register::Register(std::vector<WireSpec> wires) : wires_(std::move(wires)) {
    std::unordered_set<std::string_view> seen;
    for (const auto& w : wires_) {
        if (w.dim < 2) {
            throw std::domain_error("wire '" + w.label + "' must have dimension >= 2");
        }
        if (!seen.insert(w.label).second) {
            throw std::domain_error("duplicate wire label '" + w.label + "'");
        }
    }
    strides_.assign(wires_.size(), 1);
    std::int64_t acc = 1;
    for (std::size_t i = wires_.size(); i-- > 0;) {
        strides_[i] = acc;
        acc *= wires_[i].dim;
    }
    total_dim_ = acc;
}

std::size_t Register::index_of(std::string_view label) const {
    if (auto pos = find(label)) {
        return *pos;
    }
    throw std::domain_error("unknown wire '" + std::string(label) + "'");
}

std::optional<std::size_t> Register::find(std::string_view label) const {
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        if (wires_[i].label == label) {
            return i;
        }
    }
    return std::nullopt;
}

std::int64_t Register::basis_index(std::span<const std::int64_t> digits) const {
    if (digits.size() != wires_.size()) {
        throw std::domain_error("expected one digit per wire");
    }
    std::int64_t index = 0;
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= wires_[i].dim) {
            throw std::domain_error("digit " + std::to_string(digits[i]) +
                                    " out of range for wire '" + wires_[i].label + "'");
        }
        index += digits[i] * strides_[i];
    }
    return index;
}

std::int64_t Register::basis_index(std::initializer_list<std::int64_t> digits) const {
    return basis_index(std::span<const std::int64_t>(digits.begin(), digits.size()));
}

std::vector<std::int64_t> Register::basis_digits(std::int64_t index) const {
    if (index < 0 || index >= total_dim_) {
        throw std::domain_error("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<std::int64_t> digits(wires_.size());
    for (std::size_t i = 0; i < wires_.size(); ++i) {
        digits[i] = (index / strides_[i]) % wires_[i].dim;
    }
    return digits;
}

std::int64_t Register::digit_at(std::int64_t index, std::size_t wire_position) const {
    if (index < 0 || index >= total_dim_) {
        throw std::domain_error("basis index " + std::to_string(index) + " out of range");
    }
    return (index / strides_.at(wire_position)) % wires_.at(wire_position).dim;
}

std::vector<std::int64_t> qubit_subspace(const Register& reg) {
    const std::size_t w = reg.wire_count();
    std::vector<std::int64_t> indices;
    indices.reserve(std::size_t{1} << w);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << w); ++bits) {
        std::int64_t index = 0;
        for (std::size_t i = 0; i < w; ++i) {
            if (bits & (std::uint64_t{1} << (w - 1 - i))) {
                index += reg.stride(i);
            }
        }
        indices.push_back(index);
    }
    return indices;
}

}  // namespace fredkit
