#include "bundle_arith/rank2.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bundle_arith/errors.hpp"
#include "checked.hpp"

namespace bundle_arith {

using detail::checked_add;
using detail::checked_mul;

Rank2BundleClass Rank2BundleClass::make(std::int64_t c1, std::int64_t c2, std::optional<Z2> alpha) {
    if (floor_mod(c1, 2) == 1 && floor_mod(c2, 2) == 1)
        throw DomainError("(" + std::to_string(c1) + ", " + std::to_string(c2) +
                          ") is not realizable: c1*c2 must be even");
    const bool even = floor_mod(c1, 2) == 0;
    if (even && !alpha) throw DomainError("alpha is required when c1 is even");
    if (!even && alpha) throw DomainError("alpha is only defined for even c1");
    return Rank2BundleClass(c1, c2, alpha);
}

std::string Rank2BundleClass::to_string() const {
    std::ostringstream os;
    os << '(' << c1_ << ", " << c2_;
    if (alpha_) os << ", alpha=" << alpha_->value();
    os << ')';
    return os.str();
}

Z2 epsilon(std::int64_t a) {
    if (floor_mod(a, 2) != 0) throw DomainError("epsilon needs an even argument, got " + std::to_string(a));
    return Z2(floor_mod(a, 8) == 4 ? 1 : 0);
}

std::int64_t delta(std::int64_t c1, std::int64_t c2) {
    if (floor_mod(c1, 2) != 0) throw DomainError("Delta needs even c1, got " + std::to_string(c1));
    const std::int64_t half = c1 / 2;
    return checked_add(checked_mul(half, half), -c2);
}

Z2 alpha_extendable(std::int64_t c1, std::int64_t c2) {
    const std::int64_t d = delta(c1, c2);
    const std::int64_t num = checked_mul(d, d - 1);
    if (num % 12 != 0)
        throw FormulaNotApplicable("Delta(Delta-1) = " + std::to_string(num) +
                                   " is not divisible by 12; extendable alpha formula does not apply");
    return Z2(num / 12);
}

Rank2BundleClass split_rank2(std::int64_t x, std::int64_t y) {
    const std::int64_t c1 = checked_add(x, y);
    const std::int64_t c2 = checked_mul(x, y);
    if (floor_mod(c1, 2) != 0) return Rank2BundleClass::make(c1, c2);
    return Rank2BundleClass::make(c1, c2, alpha_extendable(c1, c2));
}

Rank2BundleClass tensor_line(const Rank2BundleClass& v, std::int64_t k) {
    const std::int64_t c1 = checked_add(v.c1(), checked_mul(2, k));
    const std::int64_t c2 = checked_add(checked_add(v.c2(), checked_mul(k, v.c1())), checked_mul(k, k));
    return Rank2BundleClass::make(c1, c2, v.alpha());
}

int count_classes(std::int64_t c1, std::int64_t c2) {
    const bool c1_even = floor_mod(c1, 2) == 0;
    if (!c1_even && floor_mod(c2, 2) == 1) return 0;
    return c1_even ? 2 : 1;
}

Rank2Group Rank2Group::plain(std::int64_t a1) {
    Rank2Group g(a1, std::nullopt);
    if (floor_mod(a1, 2) == 0) {
        const Rank2BundleClass e = split_rank2(a1, 0);
        if (*e.alpha() != epsilon(a1))
            throw ConsistencyError("alpha(O(" + std::to_string(a1) + ") + O) differs from epsilon(" +
                                   std::to_string(a1) + ")");
    }
    return g;
}

Rank2Group Rank2Group::shifted(std::int64_t a1, std::int64_t b) { return Rank2Group(a1, b); }

Rank2BundleClass Rank2Group::identity() const {
    const std::int64_t b = shift_.value_or(0);
    return split_rank2(a1_ - b, b);
}

void Rank2Group::require_member(const Rank2BundleClass& v) const {
    if (!contains(v))
        throw DomainError("class " + v.to_string() + " does not have c1 = " + std::to_string(a1_));
}

Rank2BundleClass Rank2Group::add(const Rank2BundleClass& v, const Rank2BundleClass& w) const {
    require_member(v);
    require_member(w);
    if (shift_) {
        const Rank2Group base = plain(a1_);
        return base.add(base.add(v, w), base.negate(identity()));
    }
    const std::int64_t c2 = checked_add(v.c2(), w.c2());
    if (!v.alpha()) return Rank2BundleClass::make(a1_, c2);
    return Rank2BundleClass::make(a1_, c2, *v.alpha() + *w.alpha() + epsilon(a1_));
}

Rank2BundleClass Rank2Group::negate(const Rank2BundleClass& v) const {
    require_member(v);
    if (shift_) {
        // V * X = V + X - e = e forces X = 2e - V in the plain group.
        const Rank2Group base = plain(a1_);
        const Rank2BundleClass e = identity();
        return base.add(base.add(e, e), base.negate(v));
    }
    // alpha(V) + alpha(-V) + eps = alpha(identity) = eps, so alpha(-V) = alpha(V).
    return Rank2BundleClass::make(a1_, -v.c2(), v.alpha());
}

Rank2BundleClass horrocks_sum(const Rank2BundleClass& v, const Rank2BundleClass& w) {
    if (v.c1() != w.c1())
        throw DomainError("Horrocks sum needs equal c1, got " + std::to_string(v.c1()) + " and " +
                          std::to_string(w.c1()));
    if (v.c1() > 0)
        throw DomainError("Horrocks sum undefined for positive c1 = " + std::to_string(v.c1()));
    const std::int64_t m = -v.c1();
    const std::int64_t c2 = checked_add(v.c2(), w.c2());
    if (m % 2 == 1) return Rank2BundleClass::make(v.c1(), c2);
    const std::int64_t n = m / 2;
    const Z2 correction(n % 4 == 2 ? 1 : 0);
    return Rank2BundleClass::make(v.c1(), c2, *v.alpha() + *w.alpha() + correction);
}

bool agreement_check(const Rank2BundleClass& v, const Rank2BundleClass& w) {
    const Rank2BundleClass horrocks = horrocks_sum(v, w);
    const Rank2BundleClass topological = Rank2Group::plain(v.c1()).add(v, w);
    if (floor_mod(v.c1(), 2) == 0) {
        const std::int64_t n = -v.c1() / 2;
        if (epsilon(v.c1()) != Z2(n % 4 == 2 ? 1 : 0))
            throw ConsistencyError("epsilon(" + std::to_string(v.c1()) + ") disagrees with the n = 2 mod 4 rule");
    }
    return horrocks == topological;
}

std::size_t GenerationReport::unreached_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const ReachEntry& e) { return !e.reached; }));
}

namespace {

struct Derivation {
    enum class Kind { split, tensor, horrocks } kind;
    int depth;
    std::int64_t x = 0, y = 0;  // split twists, or k in x for tensor
    std::optional<Rank2BundleClass> lhs, rhs;
};

void add_feasible_classes(const ClassBox& box, std::vector<Rank2BundleClass>& out) {
    for (std::int64_t c1 = box.c1_min; c1 <= box.c1_max; ++c1)
        for (std::int64_t c2 = -box.c2_bound; c2 <= box.c2_bound; ++c2) {
            const int count = count_classes(c1, c2);
            if (count == 1) out.push_back(Rank2BundleClass::make(c1, c2));
            if (count == 2) {
                out.push_back(Rank2BundleClass::make(c1, c2, Z2(0)));
                out.push_back(Rank2BundleClass::make(c1, c2, Z2(1)));
            }
        }
}

}  // namespace

GenerationReport generation_closure(const ClassBox& target, const ClassBox& search) {
    std::map<Rank2BundleClass, Derivation> seen;
    const auto in_search = [&](const Rank2BundleClass& v) { return search.contains(v.c1(), v.c2()); };

    for (std::int64_t c1 = search.c1_min; c1 <= search.c1_max; ++c1) {
        const std::int64_t reach = (c1 < 0 ? -c1 : c1) + search.c2_bound + 1;
        for (std::int64_t x = -reach; x <= reach; ++x) {
            const std::int64_t y = c1 - x;
            if (x < y) continue;  // O(x)+O(y) and O(y)+O(x) agree
            const Rank2BundleClass s = split_rank2(x, y);
            if (in_search(s) && !seen.contains(s))
                seen.emplace(s, Derivation{Derivation::Kind::split, 0, x, y, {}, {}});
        }
    }

    int round = 0;
    for (bool grew = true; grew;) {
        grew = false;
        ++round;
        std::vector<Rank2BundleClass> current;
        current.reserve(seen.size());
        for (const auto& [cls, _] : seen) current.push_back(cls);

        std::vector<std::pair<Rank2BundleClass, Derivation>> fresh;
        const auto offer = [&](const Rank2BundleClass& cls, Derivation d) {
            if (!in_search(cls) || seen.contains(cls)) return;
            fresh.emplace_back(cls, std::move(d));
        };
        for (const auto& v : current) {
            for (std::int64_t c1 = search.c1_min; c1 <= search.c1_max; ++c1) {
                if (c1 == v.c1() || floor_mod(c1 - v.c1(), 2) != 0) continue;
                const std::int64_t k = (c1 - v.c1()) / 2;
                offer(tensor_line(v, k), Derivation{Derivation::Kind::tensor, round, k, 0, v, {}});
            }
        }
        // `current` is sorted by c1 first, so classes sharing c1 are contiguous.
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (current[i].c1() > 0) break;
            for (std::size_t j = i; j < current.size() && current[j].c1() == current[i].c1(); ++j)
                offer(horrocks_sum(current[i], current[j]),
                      Derivation{Derivation::Kind::horrocks, round, 0, 0, current[i], current[j]});
        }
        for (auto& [cls, d] : fresh) {
            if (seen.contains(cls)) continue;
            seen.emplace(cls, std::move(d));
            grew = true;
        }
    }

    std::map<Rank2BundleClass, std::string> rendered;
    std::function<std::string(const Rank2BundleClass&)> render = [&](const Rank2BundleClass& cls) -> std::string {
        if (auto it = rendered.find(cls); it != rendered.end()) return it->second;
        const Derivation& d = seen.at(cls);
        std::string s;
        switch (d.kind) {
            case Derivation::Kind::split:
                s = "O(" + std::to_string(d.x) + ")+O(" + std::to_string(d.y) + ")";
                break;
            case Derivation::Kind::tensor:
                s = "[" + render(*d.lhs) + "](x)O(" + std::to_string(d.x) + ")";
                break;
            case Derivation::Kind::horrocks:
                s = "[" + render(*d.lhs) + " +H " + render(*d.rhs) + "]";
                break;
        }
        rendered.emplace(cls, s);
        return s;
    };

    GenerationReport report{target, search, round, seen.size(), {}};
    std::vector<Rank2BundleClass> wanted;
    add_feasible_classes(target, wanted);
    for (const auto& cls : wanted) {
        ReachEntry entry{cls, false, -1, {}};
        if (auto it = seen.find(cls); it != seen.end()) {
            entry.reached = true;
            entry.depth = it->second.depth;
            entry.witness = render(cls);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace bundle_arith
