#pragma once

// Exact arithmetic in H*(CP^n; Q) = Q[h]/h^(n+1): Chern characters, the Todd
// class, Hirzebruch-Riemann-Roch Euler characteristics and the integrality
// test used to decide whether integers can be Chern classes of a bundle.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bundle_arith {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in the hyperplane class h, truncated above degree `cap`.
class TruncatedSeries {
public:
    /// Zero series with cap+1 coefficients.
    explicit TruncatedSeries(int cap);
    /// Takes coefficients q_0..q_k; missing ones are zero, excess ones
    /// (degree > cap) are dropped.
    TruncatedSeries(int cap, std::vector<Rational> coeffs);

    static TruncatedSeries one(int cap);
    /// exp(t*h) truncated at cap.
    static TruncatedSeries exponential(int cap, const Rational& t);

    [[nodiscard]] int cap() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const Rational& operator[](int degree) const { return coeffs_.at(degree); }
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// Exact Cauchy product truncated at the common cap. Throws UsageError on
/// mismatched caps.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Chern data of a rank-r bundle on CP^dim; c_i for i > r are zero.
class ChernVector {
public:
    ChernVector(int rank, int dim, std::vector<std::int64_t> chern);

    /// Chern vector of O(a_1) + ... + O(a_r) (elementary symmetric functions).
    static ChernVector split(int dim, std::span<const std::int64_t> twists);

    [[nodiscard]] int rank() const noexcept { return rank_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] std::span<const std::int64_t> chern() const noexcept { return chern_; }
    /// c_i with the conventions c_0 = 1 and c_i = 0 for i > rank.
    [[nodiscard]] std::int64_t c(int i) const;

    friend bool operator==(const ChernVector&, const ChernVector&) = default;

private:
    int rank_;
    int dim_;
    std::vector<std::int64_t> chern_;
};

/// ch(v) via Newton's identities: ch = r + sum_k p_k h^k / k!.
TruncatedSeries chern_character(const ChernVector& v);

/// Todd class of CP^n, (h / (1 - e^-h))^(n+1), truncated at n.
TruncatedSeries todd_class(int n);

/// chi(v (x) O(twist)) = [h^dim] ch(v) e^(twist h) Td(CP^dim).
Rational euler_characteristic(const ChernVector& v, std::int64_t twist);

/// True iff chi(v (x) O(t)) is an integer for t = 0..dim. chi is a
/// degree-dim polynomial in t, so this forces integrality at every t.
bool is_feasible(const ChernVector& v);

/// gcd d of the feasible c3 in [-scan, scan] for rank-3 classes on CP^5 with
/// the given c1, c2. Throws DomainError when (c1, c2, 0) is infeasible and
/// ConsistencyError unless the feasible values in the box are exactly
/// dZ intersected with [-scan, scan].
std::int64_t feasible_c3_lattice(std::int64_t c1, std::int64_t c2, std::int64_t scan);

}  // namespace bundle_arith
