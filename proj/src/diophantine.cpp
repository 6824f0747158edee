#include "bundle_arith/diophantine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "bundle_arith/errors.hpp"
#include "checked.hpp"

namespace bundle_arith {

using detail::checked_add;
using detail::checked_mul;

std::string describe(const Provenance& p) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FromFamily1>)
                return "family1(u=" + std::to_string(v.u) + ", l=" + std::to_string(v.l) + ", v=" +
                       std::to_string(v.v) + ", w=" + std::to_string(v.w) + ")";
            else if constexpr (std::is_same_v<T, FromFamily2>)
                return "family2(t=" + std::to_string(v.t) + ", l=" + std::to_string(v.l) +
                       ", variant=" + std::to_string(v.variant) + ")";
            else
                return "brute_force";
        },
        p);
}

bool QuadricSolution::satisfies_equations() const {
    const __int128 s1 = static_cast<__int128>(x) + y + z;
    const __int128 s2 = static_cast<__int128>(x) * y + static_cast<__int128>(y) * z + static_cast<__int128>(z) * x;
    return s1 == static_cast<__int128>(a) + b && s2 == static_cast<__int128>(a) * b;
}

std::array<std::int64_t, 3> QuadricSolution::canonical_triple() const {
    std::array<std::int64_t, 3> t{x, y, z};
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

std::int64_t quadric_Q(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t q = checked_mul(c, c);
    q = checked_add(q, checked_mul(d, d));
    q = checked_add(q, -checked_mul(b, d));
    q = checked_add(q, -checked_mul(a, c));
    return checked_add(q, checked_mul(c, d));
}

QuadricPoint solution_to_point(const QuadricSolution& s) {
    if (!s.satisfies_equations())
        throw DomainError("(" + std::to_string(s.x) + ", " + std::to_string(s.y) + ", " + std::to_string(s.z) +
                          ") does not solve the system for (a, b) = (" + std::to_string(s.a) + ", " +
                          std::to_string(s.b) + ")");
    const QuadricPoint p{s.a, s.b, checked_add(s.a, -s.x), checked_add(s.b, -s.y)};
    if (quadric_Q(p.a, p.b, p.c, p.d) != 0 || checked_add(p.c, p.d) != s.z)
        throw ConsistencyError("solution does not land on the quadric");
    return p;
}

QuadricSolution param_family1(std::int64_t u, std::int64_t l, std::int64_t v, std::int64_t w) {
    const std::int64_t vv = checked_mul(v, v), uv = checked_mul(u, v), lv = checked_mul(l, v);
    const std::int64_t wu = checked_mul(w, u);
    QuadricSolution s{
        checked_mul(w, checked_add(checked_add(vv, uv), -lv)),
        checked_mul(wu, checked_add(l, -v)),
        checked_mul(wu, checked_add(u, v)),
        checked_mul(w, checked_add(checked_add(checked_add(checked_mul(u, u), vv), uv), -lv)),
        checked_mul(wu, l),
        FromFamily1{u, l, v, w},
    };
    return s;
}

std::pair<QuadricSolution, QuadricSolution> param_family2(std::int64_t t, std::int64_t l) {
    return {QuadricSolution{t, l, 0, l, t, FromFamily2{t, l, 1}},
            QuadricSolution{t, 0, l, t, l, FromFamily2{t, l, 2}}};
}

std::vector<QuadricSolution> brute_force_solutions(std::int64_t a, std::int64_t b, std::int64_t box) {
    std::vector<QuadricSolution> out;
    const std::int64_t sum = checked_add(a, b);
    for (std::int64_t x = -box; x <= box; ++x)
        for (std::int64_t y = -box; y <= box; ++y) {
            const std::int64_t z = sum - x - y;
            if (z < -box || z > box) continue;
            QuadricSolution s{x, y, z, a, b, FromBruteForce{}};
            if (s.satisfies_equations()) out.push_back(s);
        }
    return out;
}

std::size_t CoverageReport::matched() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const CoverageEntry& e) { return e.generator.has_value(); }));
}

std::vector<QuadricSolution> CoverageReport::unmatched() const {
    std::vector<QuadricSolution> out;
    for (const auto& e : entries)
        if (!e.generator) out.push_back(e.solution);
    return out;
}

CoverageReport coverage_check(std::int64_t a, std::int64_t b, std::int64_t box, std::int64_t param_bound) {
    using Triple = std::array<std::int64_t, 3>;
    // Preferred generator per triple: smallest total |parameter|, then fewest
    // negative parameters, then lexicographic.
    const auto rank = [](const FromFamily1& p) {
        const auto abs = [](std::int64_t v) { return v < 0 ? -v : v; };
        const int negatives = (p.u < 0) + (p.l < 0) + (p.v < 0) + (p.w < 0);
        return std::tuple(abs(p.u) + abs(p.l) + abs(p.v) + abs(p.w), negatives, p.u, p.l, p.v, p.w);
    };
    std::map<Triple, FromFamily1> family1;
    const std::int64_t B = param_bound;
    for (std::int64_t u = -B; u <= B; ++u)
        for (std::int64_t l = -B; l <= B; ++l)
            for (std::int64_t v = -B; v <= B; ++v)
                for (std::int64_t w = -B; w <= B; ++w) {
                    const QuadricSolution s = param_family1(u, l, v, w);
                    if (s.a != a || s.b != b) continue;
                    const FromFamily1 p{u, l, v, w};
                    auto [it, inserted] = family1.emplace(s.canonical_triple(), p);
                    if (!inserted && rank(p) < rank(it->second)) it->second = p;
                }

    std::map<Triple, FromFamily2> family2;
    for (std::int64_t t = -B; t <= B; ++t)
        for (std::int64_t l = -B; l <= B; ++l) {
            const auto [first, second] = param_family2(t, l);
            for (const auto& s : {first, second})
                if (s.a == a && s.b == b) family2.emplace(s.canonical_triple(), std::get<FromFamily2>(s.provenance));
        }

    CoverageReport report{a, b, box, param_bound, {}};
    for (const auto& s : brute_force_solutions(a, b, box)) {
        CoverageEntry entry{s, std::nullopt};
        const Triple key = s.canonical_triple();
        const bool identity_type = s.x == 0 || s.y == 0 || s.z == 0;
        const auto f1 = family1.find(key);
        const auto f2 = family2.find(key);
        if (identity_type && f2 != family2.end()) entry.generator = f2->second;
        else if (f1 != family1.end()) entry.generator = f1->second;
        else if (f2 != family2.end()) entry.generator = f2->second;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<Rank3BundleClass> enumerate_nonidentity_splits(std::int64_t a, std::int64_t b, std::int64_t box) {
    std::set<Rank3BundleClass> classes;
    for (const auto& s : brute_force_solutions(a, b, box)) {
        const std::int64_t c3 = checked_mul(checked_mul(s.x, s.y), s.z);
        if (c3 == 0) continue;
        classes.insert(split_rank3(s.x, s.y, s.z));
    }
    return {classes.begin(), classes.end()};
}

}  // namespace bundle_arith
