#pragma once

// Integer solutions of
//     x + y + z = a + b,   xy + yz + zx = ab,
// i.e. split bundles O(x)+O(y)+O(z) in G_{O(a)+O(b)}. With c = a - x and
// d = b - y the system is the projective quadric
//     Q = c^2 + d^2 - bd - ac + cd = 0,
// parametrized by lines through [1:0:0:0].

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bundle_arith/rank3.hpp"

namespace bundle_arith {

struct FromFamily1 {
    std::int64_t u, l, v, w;
    friend bool operator==(const FromFamily1&, const FromFamily1&) = default;
};
struct FromFamily2 {
    std::int64_t t, l;
    int variant;  ///< 1: (t, l, 0; a=l, b=t), 2: (t, 0, l; a=t, b=l)
    friend bool operator==(const FromFamily2&, const FromFamily2&) = default;
};
struct FromBruteForce {
    friend bool operator==(const FromBruteForce&, const FromBruteForce&) = default;
};
using Provenance = std::variant<FromFamily1, FromFamily2, FromBruteForce>;

std::string describe(const Provenance& p);

struct QuadricSolution {
    std::int64_t x, y, z, a, b;
    Provenance provenance = FromBruteForce{};

    [[nodiscard]] bool satisfies_equations() const;
    /// (x, y, z) sorted descending.
    [[nodiscard]] std::array<std::int64_t, 3> canonical_triple() const;

    friend bool operator==(const QuadricSolution&, const QuadricSolution&) = default;
};

struct QuadricPoint {
    std::int64_t a, b, c, d;
    friend bool operator==(const QuadricPoint&, const QuadricPoint&) = default;
};

std::int64_t quadric_Q(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// [a : b : a - x : b - y]. Throws DomainError if s violates the equations.
QuadricPoint solution_to_point(const QuadricSolution& s);

/// x = w(v^2 + uv - lv), y = wu(l - v), z = wu(u + v),
/// a = w(u^2 + v^2 + uv - lv), b = wul.
QuadricSolution param_family1(std::int64_t u, std::int64_t l, std::int64_t v, std::int64_t w);

/// The two identity-type solutions (t, l, 0; l, t) and (t, 0, l; t, l).
std::pair<QuadricSolution, QuadricSolution> param_family2(std::int64_t t, std::int64_t l);

/// Every ordered (x, y, z) with max |.| <= box solving the system for (a, b),
/// lexicographically ascending.
std::vector<QuadricSolution> brute_force_solutions(std::int64_t a, std::int64_t b, std::int64_t box);

struct CoverageEntry {
    QuadricSolution solution;             ///< brute-force solution
    std::optional<Provenance> generator;  ///< parameters reproducing it up to permutation
};

struct CoverageReport {
    std::int64_t a, b, box, param_bound;
    std::vector<CoverageEntry> entries;

    [[nodiscard]] std::size_t matched() const;
    [[nodiscard]] std::vector<QuadricSolution> unmatched() const;
};

/// Matches each brute-force solution in the box against family (1*) with
/// |u|, |l|, |v|, |w| <= param_bound and family (2*) with |t|, |l| <= param_bound.
CoverageReport coverage_check(std::int64_t a, std::int64_t b, std::int64_t box, std::int64_t param_bound);

/// Distinct classes (a+b, ab, xyz) over brute-force solutions with xyz != 0,
/// ordered by c3.
std::vector<Rank3BundleClass> enumerate_nonidentity_splits(std::int64_t a, std::int64_t b, std::int64_t box);

}  // namespace bundle_arith
