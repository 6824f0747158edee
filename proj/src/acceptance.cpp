#include "bundle_arith/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "bundle_arith/cohomology.hpp"
#include "bundle_arith/diophantine.hpp"
#include "bundle_arith/errors.hpp"
#include "bundle_arith/oracles.hpp"
#include "bundle_arith/rank2.hpp"
#include "bundle_arith/rank3.hpp"

namespace bundle_arith::acceptance {

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

std::string triple(const std::array<std::int64_t, 3>& t) { return cat('(', t[0], ", ", t[1], ", ", t[2], ')'); }

// Criterion bodies fill in notes and return the verdict ignoring time.
using Body = std::function<bool(std::vector<std::string>&)>;

bool realizability_law(std::vector<std::string>& notes) {
    std::size_t cases = 0, mismatches = 0;
    for (std::int64_t c1 = -50; c1 <= 50; ++c1)
        for (std::int64_t c2 = -50; c2 <= 50; ++c2) {
            ++cases;
            if (is_feasible(ChernVector(2, 3, {c1, c2})) != oracle::rank2_realizable(c1, c2)) {
                if (mismatches < 5) notes.push_back(cat("mismatch at (", c1, ", ", c2, ")"));
                ++mismatches;
            }
        }
    notes.push_back(cat(cases, " cases, ", mismatches, " mismatches"));
    return cases == 10201 && mismatches == 0;
}

bool agreement_theorem(std::vector<std::string>& notes) {
    std::size_t cases = 0, disagreements = 0;
    for (std::int64_t c1 = 0; c1 >= -40; c1 -= 2)
        for (std::int64_t c2v = -10; c2v <= 10; ++c2v)
            for (std::int64_t c2w = -10; c2w <= 10; ++c2w)
                for (int av = 0; av < 2; ++av)
                    for (int aw = 0; aw < 2; ++aw) {
                        ++cases;
                        const auto v = Rank2BundleClass::make(c1, c2v, Z2(av));
                        const auto w = Rank2BundleClass::make(c1, c2w, Z2(aw));
                        if (!agreement_check(v, w)) ++disagreements;
                    }
    std::size_t eps_bad = 0;
    for (std::int64_t n = 0; n <= 20; ++n)
        if (epsilon(-2 * n) != Z2(n % 4 == 2 ? 1 : 0)) ++eps_bad;
    notes.push_back(cat(cases, " pairs compared, ", disagreements, " disagreements"));
    notes.push_back(cat("epsilon(-2n) vs [n = 2 mod 4] for n = 0..20: ", eps_bad, " mismatches"));
    return disagreements == 0 && eps_bad == 0;
}

bool alpha_case_table(std::vector<std::string>& notes) {
    std::size_t bad = 0, ones = 0;
    for (std::int64_t b = -100; b <= 100; ++b) {
        const Z2 by_delta = alpha_extendable(0, -b * b);
        const Z2 by_divisibility = oracle::alpha_symmetric_by_divisibility(b);
        const Z2 expected(floor_mod(b, 4) == 2 ? 1 : 0);
        const Z2 split_alpha = *split_rank2(-b, b).alpha();
        if (by_delta != by_divisibility || by_delta != expected || split_alpha != expected) {
            if (bad < 5) notes.push_back(cat("disagreement at b = ", b));
            ++bad;
        }
        ones += static_cast<std::size_t>(by_delta.value());
    }
    notes.push_back(cat("201 values of b, ", ones, " with alpha = 1, ", bad, " disagreements"));
    return bad == 0;
}

bool example_index_six(std::vector<std::string>& notes) {
    bool ok = true;
    const QuadricSolution s = param_family1(1, 0, 1, 1);
    const bool param_ok = s.x == 2 && s.y == -1 && s.z == 2 && s.a == 3 && s.b == 0;
    const Rank3BundleClass w = split_rank3(s.x, s.y, s.z);
    notes.push_back(cat("[", param_ok ? "ok" : "FAIL", "] family1(u=1,l=0,v=1,w=1) -> W = O(", s.x, ")+O(", s.y,
                        ")+O(", s.z, "), V0 = O(", s.a, ")+O(", s.b, "), c(W) = ", w.to_string()));
    ok = ok && param_ok && w.c1() == 3 && w.c2() == 0;

    std::vector<std::int64_t> feasible, evens;
    for (std::int64_t c3 = -20; c3 <= 20; ++c3) {
        if (is_feasible(ChernVector(3, 5, {3, 0, c3}))) feasible.push_back(c3);
        if (c3 % 2 == 0) evens.push_back(c3);
    }
    const bool parity_ok = feasible == evens;
    std::string list;
    for (auto c : feasible) list += (list.empty() ? "" : " ") + std::to_string(c);
    notes.push_back(cat("[", parity_ok ? "ok" : "FAIL", "] feasible c3 over (3, 0), |c3| <= 20, expected the even values; got {",
                        list, "}"));
    ok = ok && parity_ok;

    const GroupDescriptorV0 g = make_group(3, 0, 20);
    const auto index = subgroup_index(g, w);
    const bool index_ok = index && *index == 6;
    notes.push_back(cat("[", index_ok ? "ok" : "FAIL", "] subgroup index of <W>: expected 6, got ",
                        index ? std::to_string(*index) : "infinite", " (lattice generator d = ", g.c3_generator,
                        ", kernel ", g.kernel_kind == KernelKind::z3 ? "Z/3" : "trivial", ")"));
    return ok && index_ok;
}

bool prime_witnesses(std::vector<std::string>& notes) {
    bool ok = true;
    const GroupDescriptorV0 g = make_group(3, 0);
    const Rank3BundleClass w = split_rank3(2, -1, 2);
    const auto n = smallest_nonsplit_multiple(g, w, 50);
    notes.push_back(cat("smallest non-split multiple of (3, 0, -4): ", n ? std::to_string(*n) : "none"));
    ok = ok && n && *n == 2;
    const PrimeWitness pw = prime_witness(g, w);
    notes.push_back(cat("prime witness for (3, 0, -4): p = ", pw.p, ", non-split verified: ", pw.verified));
    ok = ok && pw.p == 13 && pw.verified;

    std::mt19937_64 rng(20241015);
    std::uniform_int_distribution<std::int64_t> param(-3, 3), scale(1, 2);
    int samples = 0, verified = 0;
    while (samples < 20) {
        const QuadricSolution s = param_family1(param(rng), param(rng), param(rng), scale(rng));
        if (s.x == 0 || s.y == 0 || s.z == 0) continue;
        ++samples;
        const GroupDescriptorV0 base = make_group(s.a + s.b, s.a * s.b);
        const PrimeWitness p = prime_witness(base, split_rank3(s.x, s.y, s.z));
        if (p.verified) ++verified;
        else notes.push_back(cat("not verified for ", describe(s.provenance), " p = ", p.p));
    }
    notes.push_back(cat(verified, "/", samples, " parametrized samples verified"));
    return ok && verified == samples;
}

bool group_axioms(std::vector<std::string>& notes) {
    std::mt19937_64 rng(7);
    std::size_t failures = 0;
    const auto fail = [&](const std::string& what) {
        if (failures < 5) notes.push_back(what);
        ++failures;
    };

    const auto random_rank2 = [&](std::int64_t a1) {
        std::uniform_int_distribution<std::int64_t> c2d(-100, 100);
        std::uniform_int_distribution<int> bit(0, 1);
        std::int64_t c2 = c2d(rng);
        if (floor_mod(a1, 2) == 1 && floor_mod(c2, 2) == 1) ++c2;
        if (floor_mod(a1, 2) == 1) return Rank2BundleClass::make(a1, c2);
        return Rank2BundleClass::make(a1, c2, Z2(bit(rng)));
    };
    const auto check_rank2_group = [&](const Rank2Group& g, int cases) {
        const auto e = g.identity();
        for (int i = 0; i < cases; ++i) {
            const auto u = random_rank2(g.a1()), v = random_rank2(g.a1()), w = random_rank2(g.a1());
            const std::string tag = cat("a1=", g.a1(), g.shift() ? cat(", b=", *g.shift()) : "");
            if (g.add(g.add(u, v), w) != g.add(u, g.add(v, w))) fail("associativity " + tag);
            if (g.add(u, v) != g.add(v, u)) fail("commutativity " + tag);
            if (g.add(u, e) != u) fail("identity " + tag);
            if (g.add(u, g.negate(u)) != e) fail("inverse " + tag);
        }
    };

    std::size_t plain_groups = 0, shifted_groups = 0;
    for (std::int64_t a1 = -10; a1 <= 10; ++a1) {
        check_rank2_group(Rank2Group::plain(a1), 1000);
        ++plain_groups;
        for (std::int64_t b = -5; b <= 5; ++b) {
            check_rank2_group(Rank2Group::shifted(a1, b), 1000);
            ++shifted_groups;
        }
    }
    notes.push_back(cat(plain_groups, " plain groups and ", shifted_groups, " shifted groups, 1000 cases each"));

    std::size_t mixed = 0;
    std::uniform_int_distribution<std::int64_t> a1d(-10, 10), bd(-5, 5);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t a1 = a1d(rng), b = bd(rng);
        const Rank2Group plus = Rank2Group::plain(a1), star = Rank2Group::shifted(a1, b);
        const auto v = random_rank2(a1), w = random_rank2(a1), z = random_rank2(a1);
        if (star.add(plus.add(v, w), z) != plus.add(v, star.add(w, z))) fail(cat("mixed associativity a1=", a1, " b=", b));
        ++mixed;
    }
    notes.push_back(cat(mixed, " mixed-associativity triples"));

    std::size_t v0_groups = 0;
    for (auto [c1, c2] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 0}, {0, 0}, {1, 0}, {0, 3}, {5, 4}}) {
        const GroupDescriptorV0 g = make_group(c1, c2);
        std::uniform_int_distribution<std::int64_t> kd(-50, 50);
        const auto random_member = [&] { return Rank3BundleClass::make(c1, c2, g.c3_generator * kd(rng)); };
        const auto e = g.identity();
        for (int i = 0; i < 1000; ++i) {
            const auto u = random_member(), v = random_member(), w = random_member();
            const std::string tag = cat("V0=(", c1, ", ", c2, ")");
            if (add(g, add(g, u, v), w) != add(g, u, add(g, v, w))) fail("associativity " + tag);
            if (add(g, u, v) != add(g, v, u)) fail("commutativity " + tag);
            if (add(g, u, e) != u) fail("identity " + tag);
            if (add(g, u, negate(g, u)) != e) fail("inverse " + tag);
        }
        ++v0_groups;
    }
    notes.push_back(cat(v0_groups, " G_V0 groups, 1000 cases each; ", failures, " failures"));
    return failures == 0;
}

bool generation(std::vector<std::string>& notes) {
    const ClassBox target{-6, 0, 8};
    const GenerationReport report = generation_closure(target);
    int max_depth = 0;
    for (const auto& e : report.entries) {
        if (!e.reached) notes.push_back("unreached: " + e.cls.to_string());
        max_depth = std::max(max_depth, e.depth);
    }
    notes.push_back(cat(report.entries.size(), " feasible target classes, ", report.unreached_count(),
                        " unreached; search box c1 in [", report.search.c1_min, ", ", report.search.c1_max,
                        "], |c2| <= ", report.search.c2_bound, "; max witness depth ", max_depth, "; ",
                        report.rounds, " rounds"));
    return report.unreached_count() == 0;
}

bool quadric_coverage(std::vector<std::string>& notes) {
    bool ok = true;
    for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 0}, {0, 0}, {4, 1}}) {
        const CoverageReport r = coverage_check(a, b, 6, 12);
        notes.push_back(cat("(a, b) = (", a, ", ", b, "): ", r.matched(), "/", r.entries.size(), " matched"));
        for (const auto& s : r.unmatched()) {
            notes.push_back("  unmatched " + triple({s.x, s.y, s.z}));
            if (a == 3 && b == 0 && s.canonical_triple() == std::array<std::int64_t, 3>{2, 2, -1}) ok = false;
        }
    }
    return ok;
}

bool oracle_consistency(std::vector<std::string>& notes) {
    std::size_t ch_cases = 0, ch_bad = 0;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::vector<std::int64_t> twists(static_cast<std::size_t>(r), -10);
            for (;;) {
                ++ch_cases;
                const auto ch = chern_character(ChernVector::split(n, twists));
                const auto expect = oracle::exp_sum(twists, n);
                if (!std::equal(expect.begin(), expect.end(), ch.coefficients().begin())) ++ch_bad;
                std::size_t i = 0;
                while (i < twists.size() && twists[i] == 10) twists[i++] = -10;
                if (i == twists.size()) break;
                ++twists[i];
            }
        }
    std::size_t chi_cases = 0, chi_bad = 0;
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::vector<std::int64_t> twists(static_cast<std::size_t>(r), 0);
            for (;;) {
                for (std::int64_t t = 0; t <= 3; ++t) {
                    ++chi_cases;
                    BigInt expect = 0;
                    for (auto a : twists) expect += oracle::chi_line_bundle(n, a + t);
                    if (euler_characteristic(ChernVector::split(n, twists), t) != Rational(expect)) ++chi_bad;
                }
                std::size_t i = 0;
                while (i < twists.size() && twists[i] == 5) twists[i++] = 0;
                if (i == twists.size()) break;
                ++twists[i];
            }
        }
    notes.push_back(cat("chern_character vs exp-sum: ", ch_cases, " split vectors, ", ch_bad, " mismatches"));
    notes.push_back(cat("euler_characteristic vs binomial: ", chi_cases, " cases, ", chi_bad, " mismatches"));
    return ch_bad == 0 && chi_bad == 0;
}

struct Check {
    const char* title;
    double limit;
    Body body;
};

const std::vector<Check>& checks() {
    static const std::vector<Check> all = {
        {"rank-2 realizability on CP^3 equals c1*c2 even, |c1|,|c2| <= 50", 10.0, realizability_law},
        {"Horrocks sum agrees with +_{c1} for c1 in {0,...,-40}, |c2| <= 10", 1.0, agreement_theorem},
        {"alpha(O(-b)+O(b)) = [b = 2 mod 4] by Delta formula and divisibility, |b| <= 100", 0.0, alpha_case_table},
        {"O(2)+O(-1)+O(2) over O(3)+O(0): c3 parity and subgroup index 6", 30.0, example_index_six},
        {"non-split multiples and prime witnesses", 0.0, prime_witnesses},
        {"group axioms for +_{a1}, +_{a1,b}, +_{V0} and mixed associativity", 0.0, group_axioms},
        {"generation from split classes, c1 in [-6,0], |c2| <= 8", 60.0, generation},
        {"quadric coverage by families (1*) and (2*), box 6, parameters <= 12", 60.0, quadric_coverage},
        {"Chern character and Euler characteristic oracles", 0.0, oracle_consistency},
    };
    return all;
}

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriterionCount) throw UsageError("no acceptance criterion " + std::to_string(id));
    const Check& check = checks()[static_cast<std::size_t>(id) - 1];
    CriterionResult result;
    result.id = id;
    result.title = check.title;
    result.limit_seconds = check.limit;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = check.body(result.notes);
    } catch (const std::exception& e) {
        result.notes.push_back(std::string("exception: ") + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.limit > 0 && result.seconds > check.limit) {
        result.notes.push_back(cat("exceeded time limit of ", check.limit, " s"));
        ok = false;
    }
    result.passed = ok;
    return result;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

std::string format_table(const std::vector<CriterionResult>& results, bool with_notes) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << "  " << r.title << "  (" << r.seconds << " s";
        if (r.limit_seconds > 0) os << " / " << r.limit_seconds << " s";
        os << ")\n";
        if (with_notes)
            for (const auto& n : r.notes) os << "         " << n << '\n';
    }
    return os.str();
}

}  // namespace bundle_arith::acceptance
