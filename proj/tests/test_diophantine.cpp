#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bundle_arith/cohomology.hpp"
#include "bundle_arith/diophantine.hpp"
#include "bundle_arith/errors.hpp"
#include "support.hpp"

using namespace bundle_arith;

namespace {

using Tuple5 = std::array<std::int64_t, 5>;

Tuple5 tuple(const QuadricSolution& s) { return {s.x, s.y, s.z, s.a, s.b}; }

}  // namespace

TEST(Quadric, Values) {
    EXPECT_EQ(quadric_Q(1, 0, 0, 0), 0);
    EXPECT_EQ(quadric_Q(5, 7, 0, 7), 0);
    EXPECT_EQ(quadric_Q(1, 1, 1, 1), 1);
}

TEST(Quadric, LineParametrization) {
    // Q(t, ls, us, vs) = (u^2 + v^2 - lv + uv) s^2 - uts, checked as a
    // polynomial in (t, s) by comparing at a 3 x 3 grid and at random points.
    testing_support::Gen gen(3);
    for (int i = 0; i < 20; ++i) {
        const auto u = gen.integer(-20, 20), l = gen.integer(-20, 20), v = gen.integer(-20, 20);
        for (std::int64_t t = -1; t <= 1; ++t)
            for (std::int64_t s = -1; s <= 1; ++s)
                EXPECT_EQ(quadric_Q(t, l * s, u * s, v * s), (u * u + v * v - l * v + u * v) * s * s - u * t * s);
        const auto t = gen.integer(-50, 50), s = gen.integer(-50, 50);
        EXPECT_EQ(quadric_Q(t, l * s, u * s, v * s), (u * u + v * v - l * v + u * v) * s * s - u * t * s);
    }
}

TEST(Point, Examples) {
    const QuadricSolution s{2, -1, 2, 3, 0};
    EXPECT_EQ(solution_to_point(s), (QuadricPoint{3, 0, 1, 1}));
    for (std::int64_t t = -4; t <= 4; ++t)
        for (std::int64_t l = -4; l <= 4; ++l) {
            const auto p = solution_to_point(QuadricSolution{t, l, 0, l, t});
            EXPECT_EQ(p, (QuadricPoint{l, t, l - t, t - l}));
            EXPECT_EQ(quadric_Q(p.a, p.b, p.c, p.d), 0);
            EXPECT_EQ(solution_to_point(QuadricSolution{l, t, 0, l, t}), (QuadricPoint{l, t, 0, 0}));
        }
    EXPECT_THROW(solution_to_point(QuadricSolution{1, 1, 1, 3, 0}), DomainError);
}

TEST(Family1, Examples) {
    EXPECT_EQ(tuple(param_family1(1, 0, 1, 1)), (Tuple5{2, -1, 2, 3, 0}));
    EXPECT_EQ(tuple(param_family1(1, 0, 0, 1)), (Tuple5{0, 0, 1, 1, 0}));
    EXPECT_EQ(tuple(param_family1(4, -3, 2, 0)), (Tuple5{0, 0, 0, 0, 0}));
    EXPECT_EQ(param_family1(1, 0, 1, 1).provenance, Provenance(FromFamily1{1, 0, 1, 1}));
}

TEST(Family1, SatisfiesEquationsEverywhere) {
    for (std::int64_t u = -10; u <= 10; ++u)
        for (std::int64_t l = -10; l <= 10; ++l)
            for (std::int64_t v = -10; v <= 10; ++v)
                for (std::int64_t w = -10; w <= 10; ++w) {
                    const auto s = param_family1(u, l, v, w);
                    ASSERT_TRUE(s.satisfies_equations()) << u << ' ' << l << ' ' << v << ' ' << w;
                    const auto p = solution_to_point(s);
                    ASSERT_EQ(quadric_Q(p.a, p.b, p.c, p.d), 0);
                    ASSERT_EQ(s.z, p.c + p.d);
                }
}

TEST(Family2, Examples) {
    const auto [a, b] = param_family2(5, 7);
    EXPECT_EQ(tuple(a), (Tuple5{5, 7, 0, 7, 5}));
    EXPECT_EQ(tuple(b), (Tuple5{5, 0, 7, 5, 7}));
    const auto [z1, z2] = param_family2(0, 0);
    EXPECT_EQ(tuple(z1), (Tuple5{0, 0, 0, 0, 0}));
    EXPECT_EQ(tuple(z2), (Tuple5{0, 0, 0, 0, 0}));
}

TEST(BruteForce, PermutationClosedAndSound) {
    for (auto [a, b] : {std::pair{3, 0}, {0, 0}, {4, 1}, {-2, 5}}) {
        const auto sols = brute_force_solutions(a, b, 6);
        std::set<std::array<std::int64_t, 3>> seen;
        for (const auto& s : sols) {
            EXPECT_TRUE(s.satisfies_equations());
            seen.insert({s.x, s.y, s.z});
        }
        for (const auto& t : seen) {
            auto p = t;
            std::sort(p.begin(), p.end());
            do EXPECT_TRUE(seen.count(p)) << a << ' ' << b;
            while (std::next_permutation(p.begin(), p.end()));
        }
        EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end(), [](const auto& l, const auto& r) {
            return std::tuple(l.x, l.y, l.z) < std::tuple(r.x, r.y, r.z);
        }));
    }
}

TEST(BruteForce, ThreeZeroSolutions) {
    std::set<std::array<std::int64_t, 3>> canon;
    for (const auto& s : brute_force_solutions(3, 0, 6)) canon.insert(s.canonical_triple());
    EXPECT_EQ(canon, (std::set<std::array<std::int64_t, 3>>{{2, 2, -1}, {3, 0, 0}}));
}

TEST(Coverage, ExampleMatchedByFamily1) {
    const auto rep = coverage_check(3, 0, 3, 5);
    EXPECT_EQ(rep.matched(), rep.entries.size());
    bool found = false;
    for (const auto& e : rep.entries)
        if (e.solution.canonical_triple() == std::array<std::int64_t, 3>{2, 2, -1}) {
            found = true;
            ASSERT_TRUE(e.generator.has_value());
            EXPECT_TRUE(std::holds_alternative<FromFamily1>(*e.generator)) << describe(*e.generator);
        }
    EXPECT_TRUE(found);
}

TEST(Coverage, DeskBoxes) {
    for (auto [a, b] : {std::pair{3, 0}, {0, 0}, {4, 1}}) {
        const auto rep = coverage_check(a, b, 6, 12);
        EXPECT_TRUE(rep.unmatched().empty()) << a << ' ' << b;
    }
}

TEST(Splits, NonIdentity) {
    const auto three = enumerate_nonidentity_splits(3, 0, 3);
    EXPECT_NE(std::find(three.begin(), three.end(), split_rank3(2, -1, 2)), three.end());
    EXPECT_TRUE(enumerate_nonidentity_splits(0, 0, 5).empty());
    for (const auto& c : enumerate_nonidentity_splits(4, 1, 6)) {
        EXPECT_NE(c.c3(), 0);
        EXPECT_TRUE(is_feasible(ChernVector(3, 5, {c.c1(), c.c2(), c.c3()})));
    }
}
