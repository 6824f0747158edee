#include "bundle_arith/rank3.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "bundle_arith/cohomology.hpp"
#include "bundle_arith/errors.hpp"
#include "bundle_arith/integer.hpp"
#include "checked.hpp"

namespace bundle_arith {

using detail::checked_add;
using detail::checked_mul;

namespace {

using i128 = __int128;

std::int64_t abs64(std::int64_t v) {
    if (v == INT64_MIN) throw DomainError("integer overflow in abs");
    return v < 0 ? -v : v;
}

// Integer square root of a non-negative 128-bit value, or nullopt when the
// value is not a perfect square.
std::optional<std::int64_t> exact_sqrt(i128 v) {
    if (v < 0) return std::nullopt;
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return static_cast<std::int64_t>(r);
}

// Roots of t^2 + p t + q when both are integers.
std::optional<std::array<std::int64_t, 2>> quadratic_roots(i128 p, i128 q) {
    const auto s = exact_sqrt(p * p - 4 * q);
    if (!s) return std::nullopt;
    const i128 hi = -p + *s;
    const i128 lo = -p - *s;
    if (hi % 2 != 0) return std::nullopt;
    return std::array<std::int64_t, 2>{static_cast<std::int64_t>(hi / 2), static_cast<std::int64_t>(lo / 2)};
}

std::array<std::int64_t, 3> sorted_desc(std::int64_t a, std::int64_t b, std::int64_t c) {
    std::array<std::int64_t, 3> t{a, b, c};
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_member(const GroupDescriptorV0& g, const Rank3BundleClass& v) {
    if (!g.contains(v))
        throw DomainError("class " + v.to_string() + " is not in G_V0 for V0 with (c1, c2) = (" +
                          std::to_string(g.base_c1) + ", " + std::to_string(g.base_c2) + ")");
}

}  // namespace

Rank3BundleClass Rank3BundleClass::make(std::int64_t c1, std::int64_t c2, std::int64_t c3) {
    if (!is_feasible(ChernVector(3, 5, {c1, c2, c3})))
        throw DomainError("(" + std::to_string(c1) + ", " + std::to_string(c2) + ", " + std::to_string(c3) +
                          ") are not the Chern classes of a rank-3 bundle on CP^5");
    return Rank3BundleClass(c1, c2, c3);
}

std::string Rank3BundleClass::to_string() const {
    std::ostringstream os;
    os << '(' << c1_ << ", " << c2_ << ", " << c3_ << ')';
    return os.str();
}

Rank3BundleClass split_rank3(std::int64_t x, std::int64_t y, std::int64_t z) {
    const std::int64_t c1 = checked_add(checked_add(x, y), z);
    const std::int64_t c2 = checked_add(checked_add(checked_mul(x, y), checked_mul(y, z)), checked_mul(z, x));
    const std::int64_t c3 = checked_mul(checked_mul(x, y), z);
    return Rank3BundleClass::make(c1, c2, c3);
}

std::optional<std::array<std::int64_t, 3>> is_split_realizable(std::int64_t c1, std::int64_t c2, std::int64_t c3) {
    // t^3 - c1 t^2 + c2 t - c3 = (t - r)(t^2 + p t + q), p = r - c1, q = c2 + r p.
    const auto deflate = [&](std::int64_t r) -> std::optional<std::array<std::int64_t, 3>> {
        const i128 p = static_cast<i128>(r) - c1;
        const i128 q = static_cast<i128>(c2) + static_cast<i128>(r) * p;
        const auto rest = quadratic_roots(p, q);
        if (!rest) return std::nullopt;
        return sorted_desc(r, (*rest)[0], (*rest)[1]);
    };
    if (c3 == 0) return deflate(0);

    const auto is_root = [&](std::int64_t t) {
        const i128 tt = t;
        return ((tt - c1) * tt + c2) * tt - c3 == 0;
    };
    const std::int64_t n = abs64(c3);
    for (std::int64_t d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        for (std::int64_t cand : {d, -d, n / d, -(n / d)})
            if (is_root(cand)) return deflate(cand);
    }
    return std::nullopt;
}

Rank3BundleClass GroupDescriptorV0::identity() const { return Rank3BundleClass::make(base_c1, base_c2, 0); }

GroupDescriptorV0 make_group(std::int64_t base_c1, std::int64_t base_c2, std::int64_t scan) {
    if (!is_feasible(ChernVector(2, 5, {base_c1, base_c2})))
        throw DomainError("(" + std::to_string(base_c1) + ", " + std::to_string(base_c2) +
                          ") are not the Chern classes of a rank-2 bundle on CP^5");
    const KernelKind kernel =
        floor_mod(base_c1, 3) == 0 && floor_mod(base_c2, 3) == 0 ? KernelKind::z3 : KernelKind::trivial;
    const std::int64_t d = feasible_c3_lattice(base_c1, base_c2, scan);
    return GroupDescriptorV0{base_c1, base_c2, kernel, d};
}

Rank3BundleClass add(const GroupDescriptorV0& g, const Rank3BundleClass& v, const Rank3BundleClass& w) {
    require_member(g, v);
    require_member(g, w);
    return Rank3BundleClass::make(g.base_c1, g.base_c2, checked_add(v.c3(), w.c3()));
}

Rank3BundleClass negate(const GroupDescriptorV0& g, const Rank3BundleClass& v) {
    require_member(g, v);
    return Rank3BundleClass::make(g.base_c1, g.base_c2, checked_mul(-1, v.c3()));
}

Rank3BundleClass iterate(const GroupDescriptorV0& g, const Rank3BundleClass& w, std::int64_t n) {
    require_member(g, w);
    if (n < 1) throw DomainError("iterate needs n >= 1");
    return Rank3BundleClass::make(g.base_c1, g.base_c2, checked_mul(n, w.c3()));
}

std::optional<std::int64_t> smallest_nonsplit_multiple(const GroupDescriptorV0& g, const Rank3BundleClass& w,
                                                       std::int64_t bound) {
    require_member(g, w);
    for (std::int64_t n = 1; n <= bound; ++n)
        if (!is_split_realizable(g.base_c1, g.base_c2, checked_mul(n, w.c3()))) return n;
    return std::nullopt;
}

PrimeWitness prime_witness(const GroupDescriptorV0& g, const Rank3BundleClass& w) {
    require_member(g, w);
    if (w.c3() == 0) throw DomainError("prime witness needs c3(W) != 0");
    const std::int64_t floor = std::max(checked_mul(3, abs64(w.c1())), checked_mul(3, abs64(w.c3())));
    std::int64_t p = floor + 1;
    while (!is_prime(p)) ++p;
    const bool verified = !is_split_realizable(w.c1(), w.c2(), checked_mul(p, w.c3()));
    return {p, verified};
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
        ++r;
    }
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("matrix shapes do not compose");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            std::int64_t s = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) s = checked_add(s, checked_mul(a(i, k), b(k, j)));
            out(i, j) = s;
        }
    return out;
}

std::vector<std::int64_t> smith_normal_form(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t n = std::min(rows, cols);
    std::vector<std::int64_t> diag;

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m(i, j) != 0 && (pr == rows || abs64(m(i, j)) < abs64(m(pr, pc)))) pr = i, pc = j;
            if (pr == rows) {
                diag.resize(n, 0);
                return diag;
            }
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                const std::int64_t q = m(i, t) / m(t, t);
                for (std::size_t j = t; j < cols; ++j) m(i, j) = checked_add(m(i, j), -checked_mul(q, m(t, j)));
                clean = clean && m(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                const std::int64_t q = m(t, j) / m(t, t);
                for (std::size_t i = t; i < rows; ++i) m(i, j) = checked_add(m(i, j), -checked_mul(q, m(i, t)));
                clean = clean && m(t, j) == 0;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        for (std::size_t k = t; k < cols; ++k) m(t, k) = checked_add(m(t, k), m(i, k));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs64(m(t, t)));
    }
    return diag;
}

std::optional<std::int64_t> subgroup_index(const GroupDescriptorV0& g, const Rank3BundleClass& w) {
    require_member(g, w);
    if (w.c3() == 0) return std::nullopt;
    if (w.c3() % g.c3_generator != 0)
        throw ConsistencyError("c3(W) = " + std::to_string(w.c3()) + " is not a multiple of the lattice generator " +
                               std::to_string(g.c3_generator));
    const std::int64_t k = w.c3() / g.c3_generator;
    if (g.kernel_kind == KernelKind::trivial) return abs64(k);

    // G = Z + Z/3 with W = (k, r); r (the rho coordinate) is unknown, so the
    // index is taken over every r and must not depend on it.
    std::optional<std::int64_t> index;
    for (std::int64_t r = 0; r < 3; ++r) {
        const auto inv = smith_normal_form(IntegerMatrix{{k, r}, {0, 3}});
        std::int64_t prod = 1;
        for (auto d : inv) prod = checked_mul(prod, d);
        if (index && *index != prod)
            throw ConsistencyError("subgroup index depends on the untracked rho coordinate");
        index = prod;
    }
    return index;
}

}  // namespace bundle_arith
