#pragma once

// Rank-2 topological bundles on CP^3, modelled by their complete invariants
// (c1, c2, alpha). alpha is the Z/2 Atiyah-Rees invariant, defined only for
// even c1.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bundle_arith/integer.hpp"

namespace bundle_arith {

/// Element of Z/2 stored as canonical 0/1.
class Z2 {
public:
    constexpr Z2() = default;
    constexpr explicit Z2(std::int64_t v) : bit_(static_cast<std::uint8_t>(floor_mod(v, 2))) {}

    [[nodiscard]] constexpr int value() const noexcept { return bit_; }

    friend constexpr Z2 operator+(Z2 a, Z2 b) { return Z2(a.bit_ ^ b.bit_); }
    friend constexpr Z2 operator-(Z2 a, Z2 b) { return a + b; }
    friend constexpr bool operator==(Z2, Z2) = default;

private:
    std::uint8_t bit_ = 0;
};

class Rank2BundleClass {
public:
    /// Validates c1*c2 even and alpha present exactly when c1 is even.
    static Rank2BundleClass make(std::int64_t c1, std::int64_t c2, std::optional<Z2> alpha = std::nullopt);

    [[nodiscard]] std::int64_t c1() const noexcept { return c1_; }
    [[nodiscard]] std::int64_t c2() const noexcept { return c2_; }
    [[nodiscard]] const std::optional<Z2>& alpha() const noexcept { return alpha_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Rank2BundleClass&, const Rank2BundleClass&) = default;
    friend bool operator<(const Rank2BundleClass& a, const Rank2BundleClass& b) {
        auto key = [](const Rank2BundleClass& v) {
            return std::tuple(v.c1_, v.c2_, v.alpha_ ? v.alpha_->value() : -1);
        };
        return key(a) < key(b);
    }

private:
    Rank2BundleClass(std::int64_t c1, std::int64_t c2, std::optional<Z2> alpha)
        : c1_(c1), c2_(c2), alpha_(alpha) {}

    std::int64_t c1_;
    std::int64_t c2_;
    std::optional<Z2> alpha_;
};

/// 1 iff a = 4 (mod 8). Throws DomainError for odd a.
Z2 epsilon(std::int64_t a);

/// (c1^2 - 4 c2) / 4. Throws DomainError for odd c1.
std::int64_t delta(std::int64_t c1, std::int64_t c2);

/// Delta(Delta-1)/12 mod 2, the alpha invariant of a class that extends to
/// CP^4. Throws DomainError for odd c1 and FormulaNotApplicable when 12 does
/// not divide Delta(Delta-1).
Z2 alpha_extendable(std::int64_t c1, std::int64_t c2);

/// Class of O(x) + O(y).
Rank2BundleClass split_rank2(std::int64_t x, std::int64_t y);

/// Class of V (x) O(k): (c1 + 2k, c2 + k c1 + k^2), alpha unchanged.
Rank2BundleClass tensor_line(const Rank2BundleClass& v, std::int64_t k);

/// Number of topological classes with the given Chern data: 0, 1 or 2.
int count_classes(std::int64_t c1, std::int64_t c2);

/// The group of rank-2 classes with fixed c1 = a1, either with identity
/// O(a1) + O(0) (plain) or with identity O(a1 - b) + O(b) (shifted by b).
class Rank2Group {
public:
    /// Throws ConsistencyError if alpha(O(a1) + O) != epsilon(a1).
    static Rank2Group plain(std::int64_t a1);
    static Rank2Group shifted(std::int64_t a1, std::int64_t b);

    [[nodiscard]] std::int64_t a1() const noexcept { return a1_; }
    [[nodiscard]] std::optional<std::int64_t> shift() const noexcept { return shift_; }

    [[nodiscard]] Rank2BundleClass identity() const;
    [[nodiscard]] bool contains(const Rank2BundleClass& v) const noexcept { return v.c1() == a1_; }

    /// Plain: c2 adds, alpha(V) + alpha(W) + epsilon(a1).
    /// Shifted: V + W - (O(a1 - b) + O(b)) computed in the plain group.
    [[nodiscard]] Rank2BundleClass add(const Rank2BundleClass& v, const Rank2BundleClass& w) const;
    [[nodiscard]] Rank2BundleClass negate(const Rank2BundleClass& v) const;

private:
    Rank2Group(std::int64_t a1, std::optional<std::int64_t> shift) : a1_(a1), shift_(shift) {}
    void require_member(const Rank2BundleClass& v) const;

    std::int64_t a1_;
    std::optional<std::int64_t> shift_;
};

/// Invariant-level Horrocks sum for c1(V) = c1(W) = -m, m >= 0: c2 adds and,
/// for m = 2n, alpha adds with an extra 1 exactly when n = 2 (mod 4).
/// Throws DomainError("Horrocks sum undefined") for positive c1.
Rank2BundleClass horrocks_sum(const Rank2BundleClass& v, const Rank2BundleClass& w);

/// True iff horrocks_sum(V, W) equals V + W in the plain group of c1(V).
/// Throws ConsistencyError if epsilon(-2n) and [n = 2 mod 4] disagree.
bool agreement_check(const Rank2BundleClass& v, const Rank2BundleClass& w);

struct ClassBox {
    std::int64_t c1_min;
    std::int64_t c1_max;
    std::int64_t c2_bound;

    [[nodiscard]] bool contains(std::int64_t c1, std::int64_t c2) const noexcept {
        return c1 >= c1_min && c1 <= c1_max && c2 >= -c2_bound && c2 <= c2_bound;
    }
    /// Both ranges scaled by 2 about the origin.
    [[nodiscard]] ClassBox doubled() const { return {2 * c1_min, 2 * c1_max, 2 * c2_bound}; }
};

struct ReachEntry {
    Rank2BundleClass cls;
    bool reached = false;
    int depth = -1;       ///< number of closure rounds needed; 0 for split classes
    std::string witness;  ///< expression building the class from split classes
};

struct GenerationReport {
    ClassBox target;
    ClassBox search;
    int rounds = 0;
    std::size_t classes_in_search_box = 0;
    std::vector<ReachEntry> entries;  ///< every feasible class of the target box

    [[nodiscard]] std::size_t unreached_count() const;
};

/// Breadth-first closure of the split classes inside `search` under tensoring
/// by line bundles and Horrocks sums, never leaving `search`. Reports every
/// feasible class of `target` as reached or not, with a minimum-depth witness.
GenerationReport generation_closure(const ClassBox& target, const ClassBox& search);
inline GenerationReport generation_closure(const ClassBox& target) {
    return generation_closure(target, target.doubled());
}

}  // namespace bundle_arith
