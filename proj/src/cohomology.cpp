#include "bundle_arith/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bundle_arith/errors.hpp"

namespace bundle_arith {

namespace {

Rational factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

}  // namespace

TruncatedSeries::TruncatedSeries(int cap) {
    if (cap < 0) throw UsageError("series cap must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(cap) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int cap, std::vector<Rational> coeffs) : TruncatedSeries(cap) {
    const std::size_t n = std::min(coeffs.size(), coeffs_.size());
    std::move(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(n), coeffs_.begin());
}

TruncatedSeries TruncatedSeries::one(int cap) {
    TruncatedSeries s(cap);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::exponential(int cap, const Rational& t) {
    TruncatedSeries s(cap);
    Rational term = 1;
    for (int k = 0; k <= cap; ++k) {
        s.coeffs_[k] = term;
        term = term * t / (k + 1);
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    if (other.cap() != cap()) throw UsageError("series caps differ");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap() != b.cap()) throw UsageError("series caps differ");
    const int cap = a.cap();
    TruncatedSeries out(cap);
    for (int i = 0; i <= cap; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= cap; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= cap(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << '(' << coeffs_[i] << ')';
        if (i == 1) os << "h";
        if (i > 1) os << "h^" << i;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

ChernVector::ChernVector(int rank, int dim, std::vector<std::int64_t> chern)
    : rank_(rank), dim_(dim), chern_(std::move(chern)) {
    if (rank_ < 1) throw DomainError("rank must be at least 1");
    if (dim_ < 1) throw DomainError("ambient dimension must be at least 1");
    if (chern_.size() != static_cast<std::size_t>(rank_))
        throw DomainError("expected exactly " + std::to_string(rank_) + " Chern classes, got " +
                          std::to_string(chern_.size()));
}

ChernVector ChernVector::split(int dim, std::span<const std::int64_t> twists) {
    // e_k of the twists, built one root at a time.
    std::vector<std::int64_t> e(twists.size() + 1, 0);
    e[0] = 1;
    for (std::size_t i = 0; i < twists.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * twists[i];
    return ChernVector(static_cast<int>(twists.size()), dim, std::vector<std::int64_t>(e.begin() + 1, e.end()));
}

std::int64_t ChernVector::c(int i) const {
    if (i == 0) return 1;
    if (i < 0 || i > rank_) return 0;
    return chern_[static_cast<std::size_t>(i) - 1];
}

TruncatedSeries chern_character(const ChernVector& v) {
    const int n = v.dim();
    // Power sums p_k of the Chern roots from the elementary symmetric c_k.
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
        BigInt s = 0;
        for (int i = 1; i < k; ++i) {
            const BigInt term = BigInt(v.c(i)) * p[k - i];
            if (i % 2 == 1) s += term; else s -= term;
        }
        const BigInt last = BigInt(k) * v.c(k);
        if (k % 2 == 1) s += last; else s -= last;
        p[k] = s;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs[0] = v.rank();
    for (int k = 1; k <= n; ++k) coeffs[k] = Rational(p[k]) / factorial(k);
    return TruncatedSeries(n, std::move(coeffs));
}

namespace {

TruncatedSeries compute_todd_class(int n) {
    // g = (1 - e^-h)/h = sum (-1)^k h^k / (k+1)!, then Td = g^-(n+1).
    std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) g[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(k + 1);
    std::vector<Rational> inv(static_cast<std::size_t>(n) + 1, Rational(0));
    inv[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i) s += g[i] * inv[k - i];
        inv[k] = -s;
    }
    const TruncatedSeries base(n, std::move(inv));
    TruncatedSeries td = TruncatedSeries::one(n);
    for (int i = 0; i <= n; ++i) td = td * base;
    return td;
}

constexpr int kCachedToddDims = 12;

}  // namespace

TruncatedSeries todd_class(int n) {
    if (n < 1) throw DomainError("todd_class needs n >= 1");
    static const std::vector<TruncatedSeries> cache = [] {
        std::vector<TruncatedSeries> v;
        for (int k = 1; k <= kCachedToddDims; ++k) v.push_back(compute_todd_class(k));
        return v;
    }();
    if (n <= kCachedToddDims) return cache[static_cast<std::size_t>(n) - 1];
    return compute_todd_class(n);
}

namespace {

// [h^n] of s * e^(t h), given s already multiplied by the Todd class.
Rational top_coefficient_twisted(const TruncatedSeries& s, std::int64_t t) {
    const int n = s.cap();
    Rational total = 0;
    Rational tpow = 1;  // t^(n-j) / (n-j)! built from j = n downwards
    for (int j = n; j >= 0; --j) {
        total += s[j] * tpow;
        tpow = tpow * t / (n - j + 1);
    }
    return total;
}

}  // namespace

Rational euler_characteristic(const ChernVector& v, std::int64_t twist) {
    return top_coefficient_twisted(chern_character(v) * todd_class(v.dim()), twist);
}

bool is_feasible(const ChernVector& v) {
    const TruncatedSeries s = chern_character(v) * todd_class(v.dim());
    for (int t = 0; t <= v.dim(); ++t)
        if (!is_integer(top_coefficient_twisted(s, t))) return false;
    return true;
}

std::int64_t feasible_c3_lattice(std::int64_t c1, std::int64_t c2, std::int64_t scan) {
    if (scan < 1) throw DomainError("scan must be positive");
    auto feasible = [&](std::int64_t c3) { return is_feasible(ChernVector(3, 5, {c1, c2, c3})); };
    if (!feasible(0))
        throw DomainError("identity class (" + std::to_string(c1) + ", " + std::to_string(c2) +
                          ", 0) is not feasible on CP^5");

    std::vector<std::int64_t> hits;
    for (std::int64_t c3 = -scan; c3 <= scan; ++c3)
        if (feasible(c3)) hits.push_back(c3);

    std::int64_t d = 0;
    for (auto h : hits) d = std::gcd(d, h);
    if (d == 0)
        throw ConsistencyError("no nonzero feasible c3 within |c3| <= " + std::to_string(scan) +
                               "; enlarge the scan");
    for (std::int64_t c3 = -scan; c3 <= scan; ++c3) {
        const bool expected = c3 % d == 0;
        const bool found = std::binary_search(hits.begin(), hits.end(), c3);
        if (expected != found)
            throw ConsistencyError("feasible c3 values are not a truncated subgroup dZ (d = " +
                                   std::to_string(d) + ", mismatch at c3 = " + std::to_string(c3) + ")");
    }
    return d;
}

}  // namespace bundle_arith
