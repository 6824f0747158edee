#pragma once

// Rank-3 bundles on CP^5 with fixed (c1, c2): the group G_{V0} whose identity
// is V0 + O for a rank-2 bundle V0, and the arithmetic of its c3 image.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bundle_arith {

/// Marker for the Z/3 rho invariant, which this library never computes.
enum class Rho { untracked };

class Rank3BundleClass {
public:
    /// Throws DomainError unless (c1, c2, c3) is feasible for rank 3 on CP^5.
    static Rank3BundleClass make(std::int64_t c1, std::int64_t c2, std::int64_t c3);

    [[nodiscard]] std::int64_t c1() const noexcept { return c1_; }
    [[nodiscard]] std::int64_t c2() const noexcept { return c2_; }
    [[nodiscard]] std::int64_t c3() const noexcept { return c3_; }
    [[nodiscard]] Rho rho() const noexcept { return Rho::untracked; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Rank3BundleClass&, const Rank3BundleClass&) = default;
    friend auto operator<=>(const Rank3BundleClass&, const Rank3BundleClass&) = default;

private:
    Rank3BundleClass(std::int64_t c1, std::int64_t c2, std::int64_t c3) : c1_(c1), c2_(c2), c3_(c3) {}

    std::int64_t c1_;
    std::int64_t c2_;
    std::int64_t c3_;
};

/// Chern classes of O(x) + O(y) + O(z).
Rank3BundleClass split_rank3(std::int64_t x, std::int64_t y, std::int64_t z);

/// Integer roots (descending) of t^3 - c1 t^2 + c2 t - c3 when it splits
/// completely over Z, i.e. the twists of a split bundle with these Chern
/// classes.
std::optional<std::array<std::int64_t, 3>> is_split_realizable(std::int64_t c1, std::int64_t c2, std::int64_t c3);

enum class KernelKind { trivial, z3 };

/// G_{V0}, with V0 identified with its Chern data.
struct GroupDescriptorV0 {
    std::int64_t base_c1;
    std::int64_t base_c2;
    KernelKind kernel_kind;
    std::int64_t c3_generator;  ///< d with c3(G) = dZ

    [[nodiscard]] Rank3BundleClass identity() const;
    [[nodiscard]] bool contains(const Rank3BundleClass& v) const noexcept {
        return v.c1() == base_c1 && v.c2() == base_c2;
    }
};

/// Throws DomainError if V0 is not feasible as a rank-2 class on CP^5 or the
/// identity (base_c1, base_c2, 0) is not feasible.
GroupDescriptorV0 make_group(std::int64_t base_c1, std::int64_t base_c2, std::int64_t scan = 64);

Rank3BundleClass add(const GroupDescriptorV0& g, const Rank3BundleClass& v, const Rank3BundleClass& w);
Rank3BundleClass negate(const GroupDescriptorV0& g, const Rank3BundleClass& v);
/// W + (W + (... + W)), n >= 1 copies.
Rank3BundleClass iterate(const GroupDescriptorV0& g, const Rank3BundleClass& w, std::int64_t n);

/// Least n in [1, bound] whose n-fold sum of W is not a sum of line bundles.
std::optional<std::int64_t> smallest_nonsplit_multiple(const GroupDescriptorV0& g, const Rank3BundleClass& w,
                                                       std::int64_t bound);

struct PrimeWitness {
    std::int64_t p;
    bool verified;  ///< p-fold sum of W is not split
};

/// Smallest prime p > max(3|c1(W)|, 3|c3(W)|) and whether the p-fold sum is
/// non-split. Throws DomainError when c3(W) = 0.
PrimeWitness prime_witness(const GroupDescriptorV0& g, const Rank3BundleClass& w);

class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> data_;
};

/// Invariant factors d1 | d2 | ... (min(rows, cols) entries, non-negative).
std::vector<std::int64_t> smith_normal_form(IntegerMatrix m);

/// Index of the subgroup generated by W; nullopt means infinite.
/// Throws ConsistencyError when d does not divide c3(W).
std::optional<std::int64_t> subgroup_index(const GroupDescriptorV0& g, const Rank3BundleClass& w);

}  // namespace bundle_arith
