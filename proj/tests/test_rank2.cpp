#include <gtest/gtest.h>

#include "bundle_arith/errors.hpp"
#include "bundle_arith/oracles.hpp"
#include "bundle_arith/rank2.hpp"
#include "support.hpp"

using namespace bundle_arith;

namespace {

Rank2BundleClass cls(std::int64_t c1, std::int64_t c2, int a) { return Rank2BundleClass::make(c1, c2, Z2(a)); }
Rank2BundleClass cls(std::int64_t c1, std::int64_t c2) { return Rank2BundleClass::make(c1, c2); }

}  // namespace

TEST(Z2, Arithmetic) {
    EXPECT_EQ(Z2(1) + Z2(1), Z2(0));
    EXPECT_EQ(Z2(-3), Z2(1));
    EXPECT_EQ(Z2(1) - Z2(0), Z2(1));
}

TEST(Rank2Class, PresenceRule) {
    EXPECT_THROW(Rank2BundleClass::make(1, 2, Z2(0)), DomainError);
    EXPECT_THROW(Rank2BundleClass::make(2, 1), DomainError);
    EXPECT_THROW(Rank2BundleClass::make(1, 1), DomainError);
    EXPECT_NO_THROW(Rank2BundleClass::make(1, 2));
}

TEST(Epsilon, Values) {
    EXPECT_EQ(epsilon(4), Z2(1));
    EXPECT_EQ(epsilon(0), Z2(0));
    EXPECT_EQ(epsilon(-4), Z2(1));
    EXPECT_EQ(epsilon(12), Z2(1));
    EXPECT_EQ(epsilon(8), Z2(0));
    EXPECT_EQ(epsilon(2), Z2(0));
    EXPECT_THROW(epsilon(3), DomainError);
}

TEST(Delta, Values) {
    EXPECT_EQ(delta(0, -4), 4);
    EXPECT_EQ(delta(2, 1), 0);
    EXPECT_EQ(delta(6, 5), 4);
    for (std::int64_t b = -9; b <= 9; ++b) EXPECT_EQ(delta(0, -b * b), b * b);
    EXPECT_THROW(delta(1, 0), DomainError);
}

TEST(AlphaExtendable, Cases) {
    EXPECT_EQ(alpha_extendable(0, -4), Z2(1));   // b = 2
    EXPECT_EQ(alpha_extendable(2, 1), Z2(0));    // Delta = 0
    EXPECT_EQ(alpha_extendable(0, -16), Z2(0));  // b = 4
    EXPECT_EQ(alpha_extendable(0, -9), Z2(0));   // b = 3
    EXPECT_THROW(alpha_extendable(0, 2), FormulaNotApplicable);
    EXPECT_THROW(alpha_extendable(1, 2), DomainError);
}

TEST(AlphaExtendable, NotApplicableIsNotDomainError) {
    try {
        alpha_extendable(0, 2);
        FAIL();
    } catch (const DomainError&) {
        FAIL() << "should be FormulaNotApplicable";
    } catch (const FormulaNotApplicable&) {
    }
}

TEST(Split, Examples) {
    EXPECT_EQ(split_rank2(2, -2), cls(0, -4, 1));
    EXPECT_EQ(split_rank2(0, 0), cls(0, 0, 0));
    EXPECT_EQ(split_rank2(3, 0), cls(3, 0));
}

TEST(Split, AlphaTwoWays) {
    for (std::int64_t x = -50; x <= 50; ++x)
        for (std::int64_t y = -50; y <= 50; ++y) {
            if ((x + y) % 2 != 0) continue;
            ASSERT_EQ(*split_rank2(x, y).alpha(), oracle::alpha_split_by_twist(x, y)) << x << ' ' << y;
        }
}

TEST(CountClasses, Values) {
    EXPECT_EQ(count_classes(0, 0), 2);
    EXPECT_EQ(count_classes(1, 2), 1);
    EXPECT_EQ(count_classes(1, 1), 0);
}

TEST(PlainGroup, Examples) {
    const auto g0 = Rank2Group::plain(0);
    EXPECT_EQ(g0.add(split_rank2(1, -1), split_rank2(2, -2)), cls(0, -5, 1));
    const auto g4 = Rank2Group::plain(4);
    EXPECT_EQ(g4.add(split_rank2(2, 2), split_rank2(2, 2)), cls(4, 8, 1));
}

TEST(PlainGroup, IdentityCarriesEpsilon) {
    for (std::int64_t a = -20; a <= 20; a += 2)
        EXPECT_EQ(*Rank2Group::plain(a).identity().alpha(), epsilon(a)) << a;
}

TEST(PlainGroup, Negate) {
    const auto g = Rank2Group::plain(0);
    EXPECT_EQ(g.negate(g.identity()), g.identity());
    EXPECT_EQ(g.negate(cls(0, 5, 1)), cls(0, -5, 1));
}

TEST(PlainGroup, MismatchedC1) {
    EXPECT_THROW((void)Rank2Group::plain(0).add(cls(0, 1, 0), cls(2, 1, 0)), DomainError);
}

TEST(ShiftedGroup, IdentityIsTheShiftedSplit) {
    for (std::int64_t a1 = -6; a1 <= 6; ++a1)
        for (std::int64_t b = -5; b <= 5; ++b) {
            const auto g = Rank2Group::shifted(a1, b);
            EXPECT_EQ(g.identity(), split_rank2(a1 - b, b));
            testing_support::Gen gen(static_cast<std::uint64_t>(100 * a1 + b + 1000));
            for (int i = 0; i < 20; ++i) {
                const auto v = gen.rank2(a1);
                EXPECT_EQ(g.add(v, g.identity()), v);
            }
        }
}

TEST(ShiftedGroup, ZeroShiftIsPlain) {
    testing_support::Gen gen(11);
    for (std::int64_t a1 = -10; a1 <= 10; ++a1) {
        const auto p = Rank2Group::plain(a1);
        const auto s = Rank2Group::shifted(a1, 0);
        for (int i = 0; i < 30; ++i) {
            const auto v = gen.rank2(a1), w = gen.rank2(a1);
            EXPECT_EQ(p.add(v, w), s.add(v, w));
        }
    }
}

TEST(Horrocks, Values) {
    EXPECT_EQ(horrocks_sum(cls(-1, 2), cls(-1, 4)), cls(-1, 6));
    EXPECT_EQ(horrocks_sum(cls(-4, 0, 0), cls(-4, 0, 0)), cls(-4, 0, 1));
    EXPECT_EQ(horrocks_sum(cls(0, 3, 1), cls(0, 2, 1)), cls(0, 5, 0));
    EXPECT_EQ(horrocks_sum(cls(-2, 3, 1), cls(-2, 2, 0)), cls(-2, 5, 1));
}

TEST(Horrocks, UndefinedForPositiveC1) {
    EXPECT_THROW(horrocks_sum(cls(2, 0, 0), cls(2, 0, 0)), DomainError);
    EXPECT_THROW(horrocks_sum(cls(-2, 0, 0), cls(-4, 0, 0)), DomainError);
}

TEST(Agreement, MinusFourAndZero) {
    EXPECT_TRUE(agreement_check(cls(-4, 1, 0), cls(-4, 3, 0)));
    EXPECT_EQ(Rank2Group::plain(-4).add(cls(-4, 1, 0), cls(-4, 3, 0)).alpha(), Z2(1));
    EXPECT_EQ(Rank2Group::plain(0).add(cls(0, 1, 1), cls(0, 3, 1)), cls(0, 4, 0));
}

TEST(Agreement, EpsilonMatchesHorrocksRule) {
    for (std::int64_t n = 0; n <= 200; ++n) EXPECT_EQ(epsilon(-2 * n), Z2(n % 4 == 2 ? 1 : 0)) << n;
}

TEST(Tensor, Basics) {
    const auto v = cls(2, 5, 1);
    EXPECT_EQ(tensor_line(v, 0), v);
    EXPECT_EQ(tensor_line(v, 3), cls(8, 20, 1));
    EXPECT_EQ(tensor_line(tensor_line(v, 2), -5), tensor_line(v, -3));
    EXPECT_EQ(tensor_line(split_rank2(3, -1), -1).alpha(), split_rank2(2, -2).alpha());
    EXPECT_EQ(*split_rank2(3, -1).alpha(), Z2(1));
}

TEST(Generation, TrivialC1Column) {
    // A one-column target doubles to one column, where tensoring cannot act;
    // the search box has to reach negative c1.
    const auto rep = generation_closure({0, 0, 10}, {-8, 0, 20});
    EXPECT_EQ(rep.unreached_count(), 0u);
    EXPECT_EQ(rep.entries.size(), 42u);
    for (const auto& e : rep.entries)
        if (e.depth == 0) EXPECT_TRUE(e.witness.find("+H") == std::string::npos) << e.witness;
}

TEST(Generation, SplitClassesAtDepthZero) {
    const auto rep = generation_closure({-4, 0, 6});
    for (const auto& e : rep.entries) {
        bool split = false;
        for (std::int64_t x = -10; x <= 10 && !split; ++x) split = split_rank2(x, e.cls.c1() - x) == e.cls;
        if (split) EXPECT_EQ(e.depth, 0) << e.cls.to_string();
        else EXPECT_GT(e.depth, 0) << e.cls.to_string();
    }
}

TEST(Generation, NonSplitIdentityPartnerAtMinusFour) {
    const auto partner = cls(-4, 0, 1 - split_rank2(-4, 0).alpha()->value());
    const auto rep = generation_closure({-4, -4, 2}, {-8, 0, 20});
    bool seen = false;
    for (const auto& e : rep.entries)
        if (e.cls == partner) {
            seen = true;
            EXPECT_TRUE(e.reached);
            EXPECT_NE(e.witness.find("+H"), std::string::npos) << e.witness;
        }
    EXPECT_TRUE(seen);
}

TEST(Generation, DesktopBoxFullyReached) {
    const auto rep = generation_closure({-6, 0, 8});
    EXPECT_EQ(rep.entries.size(), 163u);
    EXPECT_EQ(rep.unreached_count(), 0u);
    EXPECT_EQ(rep.search.c1_min, -12);
    EXPECT_EQ(rep.search.c2_bound, 16);
}
