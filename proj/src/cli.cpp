#include "bundle_arith/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bundle_arith/acceptance.hpp"
#include "bundle_arith/cohomology.hpp"
#include "bundle_arith/diophantine.hpp"
#include "bundle_arith/errors.hpp"
#include "bundle_arith/rank2.hpp"
#include "bundle_arith/rank3.hpp"

namespace bundle_arith::cli {

using json = nlohmann::json;
using i64 = std::int64_t;

int exit_code(Status s) noexcept {
    switch (s) {
        case Status::ok: return 0;
        case Status::domain_error: return 2;
        case Status::consistency_error: return 3;
        case Status::usage_error: return 64;
    }
    return 64;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::domain_error: return "domain_error";
        case Status::consistency_error: return "consistency_error";
        case Status::usage_error: return "usage_error";
    }
    return "usage_error";
}

Status status_from_string(const std::string& s) {
    if (s == "ok") return Status::ok;
    if (s == "domain_error") return Status::domain_error;
    if (s == "consistency_error") return Status::consistency_error;
    if (s == "usage_error") return Status::usage_error;
    throw UsageError("unknown status '" + s + "'");
}

void to_json(json& j, const CommandResult& r) {
    j = json{{"status", to_string(r.status)}, {"command", r.command}, {"payload", r.payload}, {"notes", r.notes}};
}

void from_json(const json& j, CommandResult& r) {
    r.status = status_from_string(j.at("status").get<std::string>());
    r.command = j.at("command").get<std::string>();
    r.payload = j.at("payload");
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

std::string serialize(const CommandResult& r) { return json(r).dump(2) + "\n"; }

CommandResult parse(const std::string& text) { return json::parse(text).get<CommandResult>(); }

namespace {

struct Outcome {
    CommandResult result;
    std::vector<std::string> human;  ///< headline lines for the text mode
};

template <typename... Args>
std::string cat(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

std::string str(const Rational& q) { return q.str(); }

json to_j(const Rank2BundleClass& v) {
    return json{{"c1", v.c1()}, {"c2", v.c2()}, {"alpha", v.alpha() ? json(v.alpha()->value()) : json(nullptr)}};
}

json to_j(const Rank3BundleClass& v) { return json{{"c1", v.c1()}, {"c2", v.c2()}, {"c3", v.c3()}}; }

json to_j(const QuadricSolution& s) {
    return json{{"x", s.x}, {"y", s.y}, {"z", s.z}, {"a", s.a}, {"b", s.b}, {"provenance", describe(s.provenance)}};
}

json to_j(const ClassBox& b) { return json{{"c1_min", b.c1_min}, {"c1_max", b.c1_max}, {"c2_bound", b.c2_bound}}; }

std::string tuple5(const QuadricSolution& s) { return cat('(', s.x, ", ", s.y, ", ", s.z, ", ", s.a, ", ", s.b, ')'); }

Rank2BundleClass rank2_from(const std::vector<i64>& t) {
    if (t.size() < 2 || t.size() > 3) throw UsageError("a rank-2 class is c1 c2 [alpha]");
    if (t.size() == 2) return Rank2BundleClass::make(t[0], t[1]);
    if (t[2] != 0 && t[2] != 1) throw DomainError("alpha token must be 0 or 1");
    return Rank2BundleClass::make(t[0], t[1], Z2(t[2]));
}

Rank3BundleClass rank3_from(const std::vector<i64>& t) {
    if (t.size() != 3) throw UsageError("a rank-3 class is c1 c2 c3");
    return Rank3BundleClass::make(t[0], t[1], t[2]);
}

std::vector<Rank2BundleClass> rank2_list(const std::vector<std::vector<i64>>& raw, std::size_t want) {
    if (raw.size() != want) throw UsageError(cat("expected ", want, " --class options, got ", raw.size()));
    std::vector<Rank2BundleClass> out;
    for (const auto& t : raw) out.push_back(rank2_from(t));
    return out;
}

std::vector<Rank3BundleClass> rank3_list(const std::vector<std::vector<i64>>& raw, std::size_t want) {
    if (raw.size() != want) throw UsageError(cat("expected ", want, " --class options, got ", raw.size()));
    std::vector<Rank3BundleClass> out;
    for (const auto& t : raw) out.push_back(rank3_from(t));
    return out;
}

std::string epsilon_note(i64 a) {
    const i64 r = floor_mod(a, 8);
    return cat("epsilon(", a, ") = ", epsilon(a).value(), " since ", a, " = ", r, " (mod 8)",
               r == 4 ? ", the a = 4 (mod 8) case" : "");
}

Outcome make_outcome(std::string command) {
    Outcome o;
    o.result.command = std::move(command);
    o.result.payload = json::object();
    return o;
}

// ---- rank 2 -----------------------------------------------------------------

Outcome do_feasible(const std::vector<i64>& args) {
    if (args.size() < 2) throw UsageError("feasible needs RANK DIM c1 .. c_rank");
    const auto rank = static_cast<int>(args[0]);
    const auto dim = static_cast<int>(args[1]);
    const ChernVector v(rank, dim, std::vector<i64>(args.begin() + 2, args.end()));

    auto o = make_outcome("feasible");
    const auto ch = chern_character(v);
    o.result.notes.push_back("ch = " + ch.to_string());
    o.result.notes.push_back(cat("Td(CP^", dim, ") = ", todd_class(dim).to_string()));
    json chis = json::array();
    bool ok = true;
    for (int t = 0; t <= dim; ++t) {
        const Rational chi = euler_characteristic(v, t);
        const bool integral = denominator(chi) == 1;
        ok = ok && integral;
        chis.push_back(str(chi));
        o.result.notes.push_back(cat("chi(V(", t, ")) = ", str(chi), integral ? "" : "  not an integer"));
    }
    o.result.payload = {{"rank", rank}, {"dim", dim}, {"chern", std::vector<i64>(v.chern().begin(), v.chern().end())}, {"feasible", ok}, {"chi", chis}};
    o.human.push_back(cat("feasible = ", ok ? "yes" : "no"));
    return o;
}

Outcome do_count(i64 c1, i64 c2) {
    auto o = make_outcome("count-rank2");
    const int n = count_classes(c1, c2);
    if (c1 % 2 != 0 && c2 % 2 != 0)
        o.result.notes.push_back(cat("c1*c2 is odd: no rank-2 bundle"));
    else if (c1 % 2 != 0)
        o.result.notes.push_back("c1 odd: alpha is not defined, one class");
    else
        o.result.notes.push_back("c1 even: alpha ranges over Z/2, two classes");
    o.result.payload = {{"c1", c1}, {"c2", c2}, {"count", n}};
    o.human.push_back(cat("classes = ", n));
    return o;
}

Outcome do_alpha(const std::vector<i64>& split, const std::vector<i64>& chern) {
    auto o = make_outcome("alpha");
    i64 c1 = 0, c2 = 0;
    if (!split.empty() == !chern.empty()) throw UsageError("alpha takes either X Y or --chern C1 C2");
    if (!split.empty()) {
        const auto v = split_rank2(split[0], split[1]);
        c1 = v.c1();
        c2 = v.c2();
        o.result.notes.push_back(cat("O(", split[0], ") + O(", split[1], ") has c1 = ", c1, ", c2 = ", c2));
        if (!v.alpha()) {
            o.result.notes.push_back("c1 odd: alpha is not defined");
            o.result.payload = {{"c1", c1}, {"c2", c2}, {"alpha", nullptr}};
            o.human.push_back("alpha undefined (odd c1)");
            return o;
        }
        const i64 b = (split[0] - split[1]) / 2;
        o.result.notes.push_back(cat("normalized twist b = ", b, ", |b| mod 4 = ", floor_mod(b < 0 ? -b : b, 4)));
    } else {
        c1 = chern[0];
        c2 = chern[1];
    }
    const i64 d = delta(c1, c2);
    o.result.notes.push_back(cat("Delta = (c1^2 - 4 c2)/4 = ", d));
    o.result.notes.push_back(cat("Delta(Delta-1)/12 mod 2, Delta(Delta-1) = ", BigInt(d) * (d - 1)));
    const Z2 a = alpha_extendable(c1, c2);
    o.result.payload = {{"c1", c1}, {"c2", c2}, {"delta", d}, {"alpha", a.value()}};
    o.human.push_back(cat("alpha = ", a.value()));
    return o;
}

Outcome do_add_rank2(i64 a1, std::optional<i64> shift, const std::vector<std::vector<i64>>& raw) {
    auto o = make_outcome("add-rank2");
    const auto cls = rank2_list(raw, 2);
    const auto g = shift ? Rank2Group::shifted(a1, *shift) : Rank2Group::plain(a1);
    const auto sum = g.add(cls[0], cls[1]);
    auto& n = o.result.notes;
    if (a1 % 2 == 0) n.push_back(epsilon_note(a1));
    if (shift) {
        n.push_back("identity e* = " + g.identity().to_string());
        n.push_back("V + W - e* taken in the plain group of c1 = " + std::to_string(a1));
    } else {
        n.push_back("identity = " + g.identity().to_string());
        n.push_back(cat("c2 = ", cls[0].c2(), " + ", cls[1].c2(), " = ", sum.c2()));
        if (a1 % 2 == 0)
            n.push_back(cat("alpha = ", cls[0].alpha()->value(), " + ", cls[1].alpha()->value(), " + ",
                            epsilon(a1).value(), " = ", sum.alpha()->value(), " (mod 2)"));
    }
    o.result.payload = {{"a1", a1}, {"shift", shift ? json(*shift) : json(nullptr)}, {"sum", to_j(sum)},
                        {"identity", to_j(g.identity())}};
    o.human.push_back("sum = " + sum.to_string());
    return o;
}

Outcome do_horrocks(const std::vector<std::vector<i64>>& raw) {
    auto o = make_outcome("horrocks");
    const auto cls = rank2_list(raw, 2);
    const auto h = horrocks_sum(cls[0], cls[1]);
    const i64 m = -cls[0].c1();
    o.result.notes.push_back(cat("m = -c1 = ", m));
    if (m % 2 == 0) {
        const i64 half = m / 2;
        o.result.notes.push_back(cat("m = 2n with n = ", half, ", n mod 4 = ", floor_mod(half, 4),
                                     floor_mod(half, 4) == 2 ? ": extra 1 in alpha" : ": no correction"));
    } else {
        o.result.notes.push_back("m odd: alpha is not defined");
    }
    o.result.payload = {{"sum", to_j(h)}};
    o.human.push_back("horrocks sum = " + h.to_string());
    return o;
}

Outcome do_agree(i64 c1_min, i64 c2_bound) {
    if (c1_min > 0) throw DomainError("agree sweeps c1 = 0, -2, ..., c1_min <= 0");
    auto o = make_outcome("agree");
    std::size_t checked = 0;
    json bad = json::array();
    for (i64 c1 = 0; c1 >= c1_min; c1 -= 2)
        for (i64 p = -c2_bound; p <= c2_bound; ++p)
            for (i64 q = -c2_bound; q <= c2_bound; ++q)
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y) {
                        const auto v = Rank2BundleClass::make(c1, p, Z2(x));
                        const auto w = Rank2BundleClass::make(c1, q, Z2(y));
                        ++checked;
                        if (!agreement_check(v, w)) bad.push_back(json{{"v", to_j(v)}, {"w", to_j(w)}});
                    }
    json table = json::array();
    for (i64 n = 0; 2 * n <= -c1_min; ++n) {
        const int eps = epsilon(-2 * n).value();
        const int rule = floor_mod(n, 4) == 2 ? 1 : 0;
        table.push_back(json{{"n", n}, {"epsilon", eps}, {"rule", rule}});
        o.result.notes.push_back(cat("n = ", n, ": epsilon(", -2 * n, ") = ", eps, ", [n = 2 mod 4] = ", rule));
    }
    o.result.payload = {{"checked", checked}, {"disagreements", bad}, {"epsilon_table", table}};
    if (!bad.empty()) o.result.status = Status::consistency_error;
    o.human.push_back(cat("checked ", checked, " pairs, ", bad.size(), " disagreements"));
    return o;
}

Outcome do_tensor(const std::vector<std::vector<i64>>& raw, i64 k) {
    auto o = make_outcome("tensor");
    const auto v = rank2_list(raw, 1)[0];
    const auto t = tensor_line(v, k);
    o.result.notes.push_back(cat("c1 + 2k = ", t.c1(), ", c2 + k c1 + k^2 = ", t.c2(), ", alpha unchanged"));
    o.result.payload = {{"k", k}, {"result", to_j(t)}};
    o.human.push_back(cat("V(", k, ") = ", t.to_string()));
    return o;
}

Outcome do_generate(const ClassBox& target, const std::optional<ClassBox>& search) {
    auto o = make_outcome("generate");
    const auto rep = search ? generation_closure(target, *search) : generation_closure(target);
    json entries = json::array();
    json unreached = json::array();
    for (const auto& e : rep.entries) {
        entries.push_back(json{{"class", to_j(e.cls)}, {"reached", e.reached}, {"depth", e.depth},
                               {"witness", e.witness}});
        if (!e.reached) unreached.push_back(to_j(e.cls));
        o.result.notes.push_back(e.reached ? cat(e.cls.to_string(), "  depth ", e.depth, "  ", e.witness)
                                           : e.cls.to_string() + "  unreached");
    }
    o.result.payload = {{"target", to_j(rep.target)}, {"search", to_j(rep.search)}, {"rounds", rep.rounds},
                        {"classes_in_search_box", rep.classes_in_search_box}, {"entries", entries},
                        {"unreached", unreached}};
    o.human.push_back(cat(rep.entries.size() - rep.unreached_count(), " of ", rep.entries.size(),
                          " feasible classes reached in ", rep.rounds, " rounds"));
    return o;
}

// ---- rank 3 -----------------------------------------------------------------

GroupDescriptorV0 group_from(const std::vector<i64>& base, i64 scan, std::vector<std::string>& notes) {
    if (base.size() != 2) throw UsageError("--base takes c1 c2");
    const auto g = make_group(base[0], base[1], scan);
    notes.push_back(cat("G_V0 for (c1, c2) = (", g.base_c1, ", ", g.base_c2, "), kernel ",
                        g.kernel_kind == KernelKind::z3 ? "Z/3 (c1 = c2 = 0 mod 3)" : "trivial"));
    notes.push_back(cat("feasible c3 with |c3| <= ", scan, " form ", g.c3_generator, "Z"));
    return g;
}

json group_j(const GroupDescriptorV0& g) {
    return json{{"base_c1", g.base_c1}, {"base_c2", g.base_c2},
                {"kernel", g.kernel_kind == KernelKind::z3 ? "Z/3" : "trivial"}, {"c3_generator", g.c3_generator}};
}

Outcome do_rank3(const std::string& op, const std::vector<i64>& base, const std::vector<std::vector<i64>>& raw,
                 i64 scan, i64 n, i64 bound, const std::vector<i64>& twists) {
    auto o = make_outcome("rank3 " + op);
    auto& notes = o.result.notes;
    auto& p = o.result.payload;

    if (op == "split") {
        if (!twists.empty() == !raw.empty()) throw UsageError("rank3 split takes either X Y Z or --class c1 c2 c3");
        if (!twists.empty()) {
            if (twists.size() != 3) throw UsageError("rank3 split takes three twists");
            const auto v = split_rank3(twists[0], twists[1], twists[2]);
            notes.push_back("elementary symmetric functions of the twists");
            p = {{"twists", twists}, {"class", to_j(v)}};
            o.human.push_back("class = " + v.to_string());
            return o;
        }
        if (raw.size() != 1 || raw[0].size() != 3) throw UsageError("--class takes c1 c2 c3");
        const auto& c = raw[0];
        const auto roots = is_split_realizable(c[0], c[1], c[2]);
        notes.push_back(cat("integer roots of t^3 - (", c[0], ")t^2 + (", c[1], ")t - (", c[2], ")"));
        p = {{"class", json{{"c1", c[0]}, {"c2", c[1]}, {"c3", c[2]}}},
             {"split", roots.has_value()},
             {"twists", roots ? json(*roots) : json(nullptr)}};
        o.human.push_back(roots ? cat("split: O(", (*roots)[0], ") + O(", (*roots)[1], ") + O(", (*roots)[2], ")")
                                : std::string("not split"));
        return o;
    }

    const auto g = group_from(base, scan, notes);
    p["group"] = group_j(g);
    if (op == "group") {
        o.human.push_back(cat("c3 image = ", g.c3_generator, "Z, kernel ",
                              g.kernel_kind == KernelKind::z3 ? "Z/3" : "trivial"));
        return o;
    }
    if (op == "add") {
        const auto cls = rank3_list(raw, 2);
        const auto s = add(g, cls[0], cls[1]);
        notes.push_back(cat("c3 = ", cls[0].c3(), " + ", cls[1].c3(), " = ", s.c3()));
        p["sum"] = to_j(s);
        o.human.push_back("sum = " + s.to_string());
        return o;
    }
    if (op == "negate") {
        const auto w = rank3_list(raw, 1)[0];
        const auto s = negate(g, w);
        p["negation"] = to_j(s);
        o.human.push_back("negation = " + s.to_string());
        return o;
    }
    const auto w = rank3_list(raw, 1)[0];
    p["class"] = to_j(w);
    if (op == "iterate") {
        const auto s = iterate(g, w, n);
        const auto roots = is_split_realizable(s.c1(), s.c2(), s.c3());
        notes.push_back(cat(n, " * c3 = ", s.c3()));
        notes.push_back(roots ? cat("split as O(", (*roots)[0], ") + O(", (*roots)[1], ") + O(", (*roots)[2], ")")
                              : std::string("cubic has no integer factorization: not split"));
        p["n"] = n;
        p["result"] = to_j(s);
        p["split"] = roots.has_value();
        o.human.push_back(cat(n, "W = ", s.to_string(), roots ? "  split" : "  not split"));
        return o;
    }
    if (op == "index") {
        const auto idx = subgroup_index(g, w);
        if (idx) {
            const i64 k = w.c3() / g.c3_generator;
            notes.push_back(cat("c3(W) = ", w.c3(), " = ", k, " * ", g.c3_generator));
            if (g.kernel_kind == KernelKind::z3)
                notes.push_back(cat("index = |det| of Smith form of [[", k, ", r], [0, 3]], the same for r = 0, 1, 2"));
        } else {
            notes.push_back("c3(W) = 0: W generates a finite subgroup");
        }
        p["index"] = idx ? json(*idx) : json("infinite");
        o.human.push_back(idx ? cat("index = ", *idx) : std::string("index = infinite"));
        return o;
    }
    if (op == "prime-witness") {
        const auto pw = prime_witness(g, w);
        notes.push_back(cat("smallest prime > max(3|c1|, 3|c3|) = max(", 3 * (w.c1() < 0 ? -w.c1() : w.c1()), ", ",
                            3 * (w.c3() < 0 ? -w.c3() : w.c3()), ")"));
        p["p"] = pw.p;
        p["verified"] = pw.verified;
        if (!pw.verified) {
            o.result.status = Status::consistency_error;
            notes.push_back("the p-fold sum splits, contradicting the non-splitness claim");
        }
        o.human.push_back(cat("p = ", pw.p, pw.verified ? "  (pW is not split)" : "  (pW splits)"));
        return o;
    }
    if (op == "nonsplit") {
        const auto m = smallest_nonsplit_multiple(g, w, bound);
        p["bound"] = bound;
        p["multiple"] = m ? json(*m) : json(nullptr);
        o.human.push_back(m ? cat("smallest non-split multiple = ", *m)
                            : cat("every multiple up to ", bound, " splits"));
        return o;
    }
    throw UsageError("unknown rank3 operation " + op);
}

// ---- quadric ----------------------------------------------------------------

Outcome do_quadric(const std::string& op, const std::vector<i64>& args, i64 box, i64 param_bound) {
    auto o = make_outcome("quadric " + op);
    auto& notes = o.result.notes;
    auto& p = o.result.payload;
    auto need = [&](std::size_t k, const char* names) {
        if (args.size() != k) throw UsageError(cat("quadric ", op, " takes ", names));
    };
    if (op == "param1") {
        need(4, "U L V W");
        const auto s = param_family1(args[0], args[1], args[2], args[3]);
        const auto q = solution_to_point(s);
        notes.push_back(cat("point [a : b : c : d] = [", q.a, " : ", q.b, " : ", q.c, " : ", q.d, "], Q = ",
                            quadric_Q(q.a, q.b, q.c, q.d)));
        p = {{"solution", to_j(s)}, {"point", json{q.a, q.b, q.c, q.d}}};
        o.human.push_back("(x, y, z, a, b) = " + tuple5(s));
        return o;
    }
    if (op == "param2") {
        need(2, "T L");
        const auto [s1, s2] = param_family2(args[0], args[1]);
        p = {{"solutions", json{to_j(s1), to_j(s2)}}};
        o.human.push_back("(x, y, z, a, b) = " + tuple5(s1));
        o.human.push_back("(x, y, z, a, b) = " + tuple5(s2));
        return o;
    }
    need(2, "A B");
    const i64 a = args[0], b = args[1];
    if (op == "solve") {
        const auto sols = brute_force_solutions(a, b, box);
        json arr = json::array();
        for (const auto& s : sols) {
            arr.push_back(json{s.x, s.y, s.z});
            o.human.push_back(cat("(", s.x, ", ", s.y, ", ", s.z, ")"));
        }
        notes.push_back(cat("x + y + z = ", a + b, ", xy + yz + zx = ", a * b, ", |x|, |y|, |z| <= ", box));
        p = {{"a", a}, {"b", b}, {"box", box}, {"solutions", arr}};
        o.human.insert(o.human.begin(), cat(sols.size(), " solutions"));
        return o;
    }
    if (op == "cover") {
        const auto rep = coverage_check(a, b, box, param_bound);
        json arr = json::array();
        for (const auto& e : rep.entries) {
            arr.push_back(json{{"triple", json{e.solution.x, e.solution.y, e.solution.z}},
                               {"generator", e.generator ? json(describe(*e.generator)) : json(nullptr)}});
            notes.push_back(cat("(", e.solution.x, ", ", e.solution.y, ", ", e.solution.z, ")  ",
                                e.generator ? describe(*e.generator) : std::string("unmatched")));
        }
        p = {{"a", a}, {"b", b}, {"box", box}, {"param_bound", param_bound}, {"entries", arr},
             {"matched", rep.matched()}, {"total", rep.entries.size()}};
        o.human.push_back(cat(rep.matched(), " of ", rep.entries.size(), " solutions matched"));
        return o;
    }
    if (op == "splits") {
        const auto cls = enumerate_nonidentity_splits(a, b, box);
        json arr = json::array();
        for (const auto& c : cls) {
            arr.push_back(to_j(c));
            o.human.push_back(c.to_string());
        }
        p = {{"a", a}, {"b", b}, {"box", box}, {"classes", arr}};
        return o;
    }
    throw UsageError("unknown quadric operation " + op);
}

// ---- report -----------------------------------------------------------------

Outcome do_report() {
    auto o = make_outcome("report");
    const auto results = acceptance::run_all();
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        arr.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                           {"limit_seconds", r.limit_seconds}, {"notes", r.notes}});
    }
    o.result.payload = {{"criteria", arr}};
    if (!all) o.result.status = Status::consistency_error;
    // Timings only appear in the text table so that --json stays reproducible.
    o.human.push_back(acceptance::format_table(results));
    return o;
}

// ---- parsing ----------------------------------------------------------------

std::string first_word(const std::vector<std::string>& args) {
    for (const auto& a : args)
        if (!a.empty() && a.front() != '-') return a;
    return {};
}

struct Invocation {
    Outcome outcome;
    bool json_mode = false;
    std::string out_file;
    bool help = false;
};

Invocation dispatch(const std::vector<std::string>& args) {
    Invocation inv;
    CLI::App app{"Exact invariants of topological vector bundles on CP^3 and CP^5", "bundle-arith"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", inv.json_mode, "machine-readable output");
    app.add_option("--out", inv.out_file, "write the output to FILE instead of stdout");

    std::function<Outcome()> action;
    auto bind = [&action](CLI::App* sub, std::function<Outcome()> fn) {
        sub->callback([&action, fn = std::move(fn)] { action = fn; });
    };

    std::vector<i64> nums, chern, base, twists;
    std::vector<std::vector<i64>> classes;
    i64 a1 = 0, k = 0, scan = 64, n = 1, bound = 50, box = 6, param_bound = 12;
    std::optional<i64> shift;
    i64 c1_min = -40, c2_bound = 10;
    ClassBox target{-6, 0, 8};
    std::vector<i64> search;

    auto* feas = app.add_subcommand("feasible", "HRR integrality of RANK DIM c1 .. c_rank");
    feas->add_option("values", nums)->required();
    bind(feas, [&] { return do_feasible(nums); });

    auto* count = app.add_subcommand("count-rank2", "number of rank-2 classes on CP^3 with c1 c2");
    count->add_option("values", nums)->required()->expected(2);
    bind(count, [&] { return do_count(nums[0], nums[1]); });

    auto* alpha = app.add_subcommand("alpha", "alpha of O(X) + O(Y), or of an extendable class via --chern");
    alpha->add_option("split", nums)->expected(2);
    alpha->add_option("--chern", chern)->expected(2);
    bind(alpha, [&] { return do_alpha(nums, chern); });

    auto* add2 = app.add_subcommand("add-rank2", "sum in the group of rank-2 classes with c1 = a1");
    add2->add_option("--a1", a1)->required();
    add2->add_option("--shift", shift, "identity O(a1 - b) + O(b)");
    add2->add_option("--class", classes, "c1 c2 [alpha]; give twice")->expected(2, 3);
    bind(add2, [&] { return do_add_rank2(a1, shift, classes); });

    auto* horr = app.add_subcommand("horrocks", "Horrocks sum of two classes with c1 <= 0");
    horr->add_option("--class", classes, "c1 c2 [alpha]; give twice")->expected(2, 3);
    bind(horr, [&] { return do_horrocks(classes); });

    auto* agree = app.add_subcommand("agree", "sweep Horrocks sum against the group law");
    agree->add_option("--c1-min", c1_min, "most negative even c1")->capture_default_str();
    agree->add_option("--c2-bound", c2_bound)->capture_default_str();
    bind(agree, [&] { return do_agree(c1_min, c2_bound); });

    auto* tens = app.add_subcommand("tensor", "V (x) O(k)");
    tens->add_option("--class", classes, "c1 c2 [alpha]")->expected(2, 3);
    tens->add_option("--k", k)->required();
    bind(tens, [&] { return do_tensor(classes, k); });

    auto* gen = app.add_subcommand("generate", "closure of split classes under tensor and Horrocks sums");
    gen->add_option("--c1-min", target.c1_min)->capture_default_str();
    gen->add_option("--c1-max", target.c1_max)->capture_default_str();
    gen->add_option("--c2-bound", target.c2_bound)->capture_default_str();
    gen->add_option("--search", search, "C1_MIN C1_MAX C2_BOUND; default doubles the target box")->expected(3);
    bind(gen, [&] {
        std::optional<ClassBox> s;
        if (!search.empty()) s = ClassBox{search[0], search[1], search[2]};
        return do_generate(target, s);
    });

    auto* r3 = app.add_subcommand("rank3", "rank-3 classes on CP^5 in G_V0");
    r3->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> rank3_ops{
        {"group", "kernel and c3 lattice of G_V0"},
        {"add", "sum of two classes"},
        {"negate", "inverse of a class"},
        {"iterate", "n-fold sum of a class"},
        {"index", "index of the subgroup generated by a class"},
        {"split", "Chern classes of O(X)+O(Y)+O(Z), or the twists of --class"},
        {"prime-witness", "prime p with pW not split"},
        {"nonsplit", "least n with nW not split"}};
    for (const auto& [op, about] : rank3_ops) {
        auto* sub = r3->add_subcommand(op, about);
        if (op == "split") {
            sub->add_option("twists", twists)->expected(3);
            sub->add_option("--class", classes, "c1 c2 c3")->expected(3);
        } else {
            sub->add_option("--base", base, "c1 c2 of V0")->required()->expected(2);
            sub->add_option("--scan", scan, "half-width of the c3 feasibility scan")->capture_default_str();
            if (op != "group") sub->add_option("--class", classes, "c1 c2 c3")->expected(3);
        }
        if (op == "iterate") sub->add_option("--n", n)->required();
        if (op == "nonsplit") sub->add_option("--bound", bound)->capture_default_str();
        bind(sub, [&, op] { return do_rank3(op, base, classes, scan, n, bound, twists); });
    }

    auto* quad = app.add_subcommand("quadric", "split solutions x + y + z = a + b, xy + yz + zx = ab");
    quad->require_subcommand(1);
    const std::vector<std::pair<std::string, std::string>> quadric_ops{
        {"solve", "A B: every solution in the box"},
        {"param1", "U L V W: family (1*)"},
        {"param2", "T L: family (2*)"},
        {"cover", "A B: match brute-force solutions to the families"},
        {"splits", "A B: classes of solutions with xyz != 0"}};
    for (const auto& [op, about] : quadric_ops) {
        auto* sub = quad->add_subcommand(op, about);
        sub->add_option("values", nums)->required();
        if (op == "solve" || op == "cover" || op == "splits")
            sub->add_option("--box", box, "bound on |x|, |y|, |z|")->capture_default_str();
        if (op == "cover") sub->add_option("--param-bound", param_bound)->capture_default_str();
        bind(sub, [&, op] { return do_quadric(op, nums, box, param_bound); });
    }

    auto* rep = app.add_subcommand("report", "run every acceptance check and print a summary");
    bind(rep, [] { return do_report(); });

    std::vector<std::string> argv_store{"bundle-arith"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* cur = &app;
        while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
        inv.help = true;
        inv.outcome = make_outcome("help");
        inv.outcome.human.push_back(cur->help());
        return inv;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (const auto& a : args) {
            if (a.empty() || a.front() == '-') continue;
            if (app.get_subcommand_no_throw(a) == nullptr) msg = "unknown subcommand '" + a + "'";
            break;
        }
        inv.outcome = make_outcome(first_word(args));
        inv.outcome.result.status = Status::usage_error;
        inv.outcome.result.payload = {{"error", msg}};
        return inv;
    }
    inv.outcome = action();
    return inv;
}

Invocation guarded(const std::vector<std::string>& args) {
    auto fail = [&](Status s, const std::string& msg) {
        Invocation inv;
        for (const auto& a : args) inv.json_mode = inv.json_mode || a == "--json";
        inv.outcome = make_outcome(first_word(args));
        inv.outcome.result.status = s;
        inv.outcome.result.payload = {{"error", msg}};
        return inv;
    };
    try {
        return dispatch(args);
    } catch (const FormulaNotApplicable& e) {
        return fail(Status::domain_error, std::string("formula not applicable: ") + e.what());
    } catch (const UsageError& e) {
        return fail(Status::usage_error, e.what());
    } catch (const DomainError& e) {
        return fail(Status::domain_error, e.what());
    } catch (const ConsistencyError& e) {
        return fail(Status::consistency_error, e.what());
    }
}

std::string render_text(const Outcome& o) {
    std::ostringstream os;
    const auto& r = o.result;
    if (r.status != Status::ok && r.payload.contains("error")) {
        os << "error (" << to_string(r.status) << "): " << r.payload["error"].get<std::string>() << "\n";
        return os.str();
    }
    for (const auto& line : o.human) {
        os << line;
        if (line.empty() || line.back() != '\n') os << '\n';
    }
    if (!r.notes.empty()) {
        os << "trace:\n";
        for (const auto& n : r.notes) os << "  " << n << '\n';
    }
    if (r.status != Status::ok) os << "status: " << to_string(r.status) << '\n';
    return os.str();
}

}  // namespace

CommandResult execute(const std::vector<std::string>& args) { return guarded(args).outcome.result; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto inv = guarded(args);
    const auto& r = inv.outcome.result;
    const std::string text = inv.json_mode && !inv.help ? serialize(r) : render_text(inv.outcome);

    if (!inv.out_file.empty()) {
        std::ofstream f(inv.out_file, std::ios::binary);
        if (!f) {
            err << "error: cannot write " << inv.out_file << "\n";
            return exit_code(Status::usage_error);
        }
        f << text;
    } else if (r.payload.contains("error") && !inv.json_mode) {
        err << text;
    } else {
        out << text;
    }
    if (r.status == Status::usage_error && !inv.json_mode) err << "Run with --help for more information.\n";
    return exit_code(r.status);
}

}  // namespace bundle_arith::cli
