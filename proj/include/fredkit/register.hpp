#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fredkit {

/// One wire of a mixed-radix register: a label plus its level count.
struct WireSpec {
    std::string label;
    std::int64_t dim = 2;

    bool operator==(const WireSpec&) const = default;
};

/// Ordered list of wires spanning a mixed-radix Hilbert space.
///
/// Basis states are labelled by one digit per wire with the first wire most
/// significant: index = sum_i digit_i * stride_i, stride_i = prod_{j>i} dim_j.
class Register {
public:
    Register() = default;
    explicit Register(std::vector<WireSpec> wires);

    const std::vector<WireSpec>& wires() const { return wires_; }
    std::size_t wire_count() const { return wires_.size(); }
    std::int64_t total_dim() const { return total_dim_; }

    const WireSpec& wire(std::size_t position) const { return wires_.at(position); }
    std::int64_t stride(std::size_t position) const { return strides_.at(position); }

    /// Position of the wire with the given label; throws std::domain_error if absent.
    std::size_t index_of(std::string_view label) const;
    std::optional<std::size_t> find(std::string_view label) const;

    std::int64_t basis_index(std::span<const std::int64_t> digits) const;
    std::int64_t basis_index(std::initializer_list<std::int64_t> digits) const;
    std::vector<std::int64_t> basis_digits(std::int64_t index) const;
    std::int64_t digit_at(std::int64_t index, std::size_t wire_position) const;

    bool operator==(const Register&) const = default;

private:
    std::vector<WireSpec> wires_;
    std::vector<std::int64_t> strides_;
    std::int64_t total_dim_ = 1;
};

/// Basis indices whose digits are all 0 or 1 on every wire, in ascending order.
std::vector<std::int64_t> qubit_subspace(const Register& reg);

}  // namespace fredkit
