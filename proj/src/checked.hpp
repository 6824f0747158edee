#pragma once

#include <cstdint>
#include <string>

#include "bundle_arith/errors.hpp"

namespace bundle_arith::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

}  // namespace bundle_arith::detail
