#pragma once

// Seeded generators for the property suites. Fixed seeds keep failures
// reproducible; a failing case prints its inputs through SCOPED_TRACE.

#include <cstdint>
#include <random>

#include "bundle_arith/rank2.hpp"

namespace testing_support {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    /// Random feasible rank-2 class with c1 = a1 on CP^3.
    bundle_arith::Rank2BundleClass rank2(std::int64_t a1, std::int64_t c2_bound = 20) {
        using bundle_arith::Rank2BundleClass;
        if (a1 % 2 != 0) return Rank2BundleClass::make(a1, 2 * integer(-c2_bound / 2, c2_bound / 2));
        return Rank2BundleClass::make(a1, integer(-c2_bound, c2_bound), bundle_arith::Z2(integer(0, 1)));
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing_support
