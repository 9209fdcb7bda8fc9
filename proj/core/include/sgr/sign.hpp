#pragma once

#include <cstdint>
#include <optional>

namespace sgr {

enum class Sign : std::int8_t { plus = +1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

constexpr Sign flipped(Sign s) {
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

constexpr std::optional<Sign> sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    return std::nullopt;
}

}  // namespace sgr
