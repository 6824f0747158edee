#pragma once

// Reference computations that reach the same answers as the library by a
// different route. Used by the test suites and the acceptance report; nothing
// in the core library depends on them.

#include <cstdint>
#include <span>
#include <vector>

#include "bundle_arith/cohomology.hpp"
#include "bundle_arith/rank2.hpp"
#include "bundle_arith/rank3.hpp"

namespace bundle_arith::oracle {

/// sum_i exp(a_i h), coefficients of h^0..h^dim.
std::vector<Rational> exp_sum(std::span<const std::int64_t> twists, int dim);

/// binomial(n + d, n) = dim H^0(CP^n, O(d)) for d >= 0, zero for -n <= d < 0.
BigInt chi_line_bundle(int n, std::int64_t d);

/// ch(v) from log of the total Chern class, log(1 + c1 t + ... + cr t^r),
/// rather than from Newton's recursion.
std::vector<Rational> chern_character_via_log(const ChernVector& v);

/// Coefficients of ch(v) in the basis (e^h - 1)^k, k = 0..dim.
std::vector<Rational> k_theory_coordinates(const ChernVector& v);

/// True iff ch(v) is the Chern character of an integral K-theory class.
bool k_theory_integral(const ChernVector& v);

/// Feasible c3 in [-scan, scan] for rank 3 on CP^5 via k_theory_integral.
std::vector<std::int64_t> feasible_c3_values(std::int64_t c1, std::int64_t c2, std::int64_t scan);

/// alpha(O(x) + O(y)), x + y even: 1 iff the normalized twist |x - y|/2 is 2 mod 4.
Z2 alpha_split_by_twist(std::int64_t x, std::int64_t y);

/// alpha(O(-b) + O(b)) = b^2(b+1)(b-1)/4 mod 2, i.e. 1 iff 8 does not divide
/// b^2(b+1)(b-1).
Z2 alpha_symmetric_by_divisibility(std::int64_t b);

/// Rank-2 realizability predicate c1*c2 = 0 (mod 2).
bool rank2_realizable(std::int64_t c1, std::int64_t c2);

/// Exhaustive search for x >= y >= z with |.| <= radius and the given
/// elementary symmetric functions.
std::optional<std::array<std::int64_t, 3>> split_triple_search(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                                                               std::int64_t radius);

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} where
/// D_k is the gcd of all k x k minors.
std::vector<std::int64_t> invariant_factors_by_minors(const IntegerMatrix& m);

}  // namespace bundle_arith::oracle
