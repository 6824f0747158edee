#pragma once

#include <cstdint>

namespace bundle_arith {

/// Euclidean remainder, always in [0, |m|).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

}  // namespace bundle_arith
