#include "bundle_arith/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bundle_arith/errors.hpp"

namespace bundle_arith::oracle {

namespace {

Rational factorial(int k) {
    BigInt f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

using Poly = std::vector<Rational>;

Poly truncated_product(const Poly& a, const Poly& b, int n) {
    Poly out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

BigInt det(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const BigInt term = m[0][col] * det(minor);
        if (col % 2 == 0) total += term; else total -= term;
    }
    return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<Rational> exp_sum(std::span<const std::int64_t> twists, int dim) {
    std::vector<Rational> out(static_cast<std::size_t>(dim) + 1, Rational(0));
    for (auto a : twists) {
        BigInt power = 1;
        for (int k = 0; k <= dim; ++k) {
            out[k] += Rational(power) / factorial(k);
            power *= a;
        }
    }
    return out;
}

BigInt chi_line_bundle(int n, std::int64_t d) {
    // binomial(n + d, n) as a product; vanishes for -n <= d <= -1.
    BigInt num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        num *= BigInt(d) + i;
        den *= i;
    }
    return num / den;
}

std::vector<Rational> chern_character_via_log(const ChernVector& v) {
    const int n = v.dim();
    Poly u(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) u[k] = v.c(k);

    Poly log_c(static_cast<std::size_t>(n) + 1, Rational(0));
    Poly power = u;
    for (int j = 1; j <= n; ++j) {
        for (int k = 0; k <= n; ++k) log_c[k] += (j % 2 == 1 ? power[k] : -power[k]) / j;
        power = truncated_product(power, u, n);
    }
    // log c(t) = sum_k (-1)^(k-1) p_k t^k / k.
    std::vector<Rational> ch(static_cast<std::size_t>(n) + 1);
    ch[0] = v.rank();
    for (int k = 1; k <= n; ++k) {
        const Rational pk = log_c[k] * k * (k % 2 == 1 ? 1 : -1);
        ch[k] = pk / factorial(k);
    }
    return ch;
}

std::vector<Rational> k_theory_coordinates(const ChernVector& v) {
    const int n = v.dim();
    Poly rest = chern_character_via_log(v);
    Poly x(static_cast<std::size_t>(n) + 1, Rational(0));  // e^h - 1
    for (int k = 1; k <= n; ++k) x[k] = Rational(1) / factorial(k);

    std::vector<Rational> coords(static_cast<std::size_t>(n) + 1, Rational(0));
    Poly xk(static_cast<std::size_t>(n) + 1, Rational(0));
    xk[0] = 1;
    for (int k = 0; k <= n; ++k) {
        coords[k] = rest[k];  // (e^h - 1)^k starts with h^k
        for (int j = 0; j <= n; ++j) rest[j] -= coords[k] * xk[j];
        xk = truncated_product(xk, x, n);
    }
    return coords;
}

bool k_theory_integral(const ChernVector& v) {
    const auto coords = k_theory_coordinates(v);
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return denominator(q) == 1; });
}

std::vector<std::int64_t> feasible_c3_values(std::int64_t c1, std::int64_t c2, std::int64_t scan) {
    std::vector<std::int64_t> out;
    for (std::int64_t c3 = -scan; c3 <= scan; ++c3)
        if (k_theory_integral(ChernVector(3, 5, {c1, c2, c3}))) out.push_back(c3);
    return out;
}

Z2 alpha_split_by_twist(std::int64_t x, std::int64_t y) {
    if ((x + y) % 2 != 0) throw DomainError("alpha needs x + y even");
    std::int64_t b = (x - y) / 2;
    if (b < 0) b = -b;
    return Z2(b % 4 == 2 ? 1 : 0);
}

Z2 alpha_symmetric_by_divisibility(std::int64_t b) {
    const BigInt n = BigInt(b) * b * (b + 1) * (b - 1);
    return Z2(n % 8 == 0 ? 0 : 1);
}

bool rank2_realizable(std::int64_t c1, std::int64_t c2) { return (c1 * c2) % 2 == 0; }

std::optional<std::array<std::int64_t, 3>> split_triple_search(std::int64_t c1, std::int64_t c2, std::int64_t c3,
                                                               std::int64_t radius) {
    for (std::int64_t x = radius; x >= -radius; --x)
        for (std::int64_t y = x; y >= -radius; --y) {
            const std::int64_t z = c1 - x - y;
            if (z > y || z < -radius) continue;
            if (x * y + y * z + z * x == c2 && x * y * z == c3) return std::array<std::int64_t, 3>{x, y, z};
        }
    return std::nullopt;
}

std::vector<std::int64_t> invariant_factors_by_minors(const IntegerMatrix& m) {
    const std::size_t n = std::min(m.rows(), m.cols());
    std::vector<std::int64_t> out;
    BigInt previous = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        BigInt g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
                g = gcd(g, abs(det(sub)));
            }
        if (g == 0) {
            out.resize(n, 0);
            return out;
        }
        out.push_back(static_cast<std::int64_t>(g / previous));
        previous = g;
    }
    return out;
}

}  // namespace bundle_arith::oracle
