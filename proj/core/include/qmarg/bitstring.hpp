#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qmarg {

// Bit/qubit index convention used throughout: bit i of an integer encoding
// is wire/qubit i, i.e. little-endian.

inline std::vector<std::uint8_t> bits_from_value(std::uint64_t value, unsigned width) {
    std::vector<std::uint8_t> bits(width);
    for (unsigned i = 0; i < width; ++i) {
        bits[i] = static_cast<std::uint8_t>((value >> i) & 1);
    }
    return bits;
}

inline std::uint64_t value_from_bits(std::span<const std::uint8_t> bits) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) value |= std::uint64_t{1} << i;
    }
    return value;
}

} // namespace qmarg
