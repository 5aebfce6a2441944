#pragma once
// The acceptance checklist: thirteen self-contained checks over the
// built-in corpus, each returning pass/fail plus a human-readable detail
// line.  The CLI `verify` subcommand and the standalone acceptance binary
// both run these.  All comparisons are exact except the walk-sum oracle,
// whose tolerance is pinned here.

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotwalk/corpus.hpp"
#include "knotwalk/invariants.hpp"
#include "knotwalk/io.hpp"
#include "knotwalk/markov.hpp"
#include "knotwalk/twisting.hpp"

namespace knotwalk {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::string only;                  // empty = run everything
    bool inject_golden_fault = false;  // self-test: corrupt one golden value
};

namespace verify_detail {

constexpr double kWalkTolerance = 1e-6;
constexpr int kWalkMaxLen = 60;

inline TwistedFamily t2_family() {
    TwistedFamily f;
    f.m = 2;
    f.prefix = BraidWord{2, {1}};
    f.suffix = BraidWord{2, {}};
    f.slot_lo = 1;
    f.slot_hi = 2;
    f.cut = 1;
    return f;
}

inline TwistedFamily t3_family() {
    TwistedFamily f;
    f.m = 3;
    f.prefix = BraidWord{3, {1, 2}};
    f.suffix = BraidWord{3, {}};
    f.slot_lo = 1;
    f.slot_hi = 3;
    f.cut = 1;
    return f;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline CheckResult check_rho1_goldens(bool inject_fault) {
    CheckResult res{"rho1-goldens", true, ""};
    int checked = 0;
    for (const CorpusEntry& e : corpus()) {
        if (!e.rho1_golden) continue;
        LaurentPoly expected = *e.rho1_golden;
        if (inject_fault && e.name == "t2-3") expected += LaurentPoly::one();
        LaurentPoly actual = rho1(corpus_diagram(e));
        ++checked;
        if (actual != expected) {
            res.pass = false;
            res.detail = e.name + ": expected " + poly_to_text(expected) + ", actual " +
                         poly_to_text(actual);
            return res;
        }
    }
    res.detail = std::to_string(checked) + " published values match exactly";
    return res;
}

inline CheckResult check_growth_rate() {
    CheckResult res{"growth-rate", true, ""};
    const LaurentPoly one = LaurentPoly::one();
    const LaurentPoly t = LaurentPoly::var();
    RatFun expected(-one, (one + t) * (one + t));
    RatFun actual = growth_rate(t2_family());
    res.pass = (actual == expected);
    res.detail = res.pass ? "T(2,*) growth rate = " + ratfun_to_text(actual)
                          : "expected " + ratfun_to_text(expected) + ", actual " +
                                ratfun_to_text(actual);
    return res;
}

inline CheckResult check_alexander_limit() {
    CheckResult res{"alexander-limit", true, ""};
    const LaurentPoly one = LaurentPoly::one();
    RatFun expected(one, one + LaurentPoly::var());
    RatFun actual = alexander_limit(t2_family());
    res.pass = (actual == expected);
    res.detail = res.pass ? "T(2,*) limit = " + ratfun_to_text(actual)
                          : "expected " + ratfun_to_text(expected) + ", actual " +
                                ratfun_to_text(actual);
    return res;
}

inline CheckResult check_t_equals_1_laws() {
    CheckResult res{"t-equals-1-laws", true, ""};
    struct Case {
        TwistedFamily f;
        int n;
    };
    const std::vector<Case> cases = {{t2_family(), 2}, {t3_family(), 3}};
    std::ostringstream detail;
    for (const Case& c : cases) {
        Rat alim = rat_abs(alexander_limit(c.f).evaluate(Rat(1)));
        Rat grow = rat_abs(growth_rate(c.f).evaluate(Rat(1)));
        Rat alim_want(1, c.n);
        Rat grow_want(c.n - 1, 2 * c.n);
        if (alim != alim_want || grow != grow_want) {
            res.pass = false;
            res.detail = "n=" + std::to_string(c.n) + ": |limit(1)|=" + alim.str() +
                         " (want " + alim_want.str() + "), |growth(1)|=" + grow.str() +
                         " (want " + grow_want.str() + ")";
            return res;
        }
        if (detail.tellp() > 0) detail << "; ";
        detail << "n=" << c.n << ": |limit(1)|=" << alim.str() << ", |growth(1)|=" << grow.str();
    }
    res.detail = detail.str();
    return res;
}

inline CheckResult check_stabilization() {
    CheckResult res{"stabilization", true, ""};
    const long long r0 = 6;
    GrowthReport rep = convergence_report(t2_family(), 8, r0);
    int first_full = -1;
    for (std::size_t t = 0; t < rep.agreement_depth.size(); ++t) {
        if (rep.agreement_depth[t] == r0) {
            first_full = static_cast<int>(t);
            break;
        }
    }
    bool persists = first_full >= 0;
    for (std::size_t t = first_full >= 0 ? static_cast<std::size_t>(first_full) : 0;
         persists && t < rep.agreement_depth.size(); ++t)
        if (rep.agreement_depth[t] != r0) persists = false;
    res.pass = (first_full >= 0 && first_full <= 8 && persists && rep.depths_nondecreasing);
    std::ostringstream os;
    os << "depths(t=0..8) =";
    for (long long dep : rep.agreement_depth) os << " " << dep;
    if (first_full >= 0)
        os << "; full agreement from t=" << first_full << (persists ? ", persists" : ", BROKEN");
    else
        os << "; depth " << r0 << " never reached";
    res.detail = os.str();
    return res;
}

inline CheckResult check_burau_closed_forms() {
    CheckResult res{"burau-closed-forms", true, ""};
    const LaurentPoly one = LaurentPoly::one();
    for (int n = 2; n <= 4; ++n) {
        const BraidWord twist = full_twist_word(n);
        RatMatrix byword = RatMatrix::identity(static_cast<std::size_t>(n));
        for (int k = 1; k <= 3; ++k) {
            byword = byword * burau(twist);
            if (full_twist_power(n, k) != byword) {
                res.pass = false;
                res.detail = "full twist power mismatch at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k);
                return res;
            }
            LaurentPoly lhs = p_nk(n, k + 1);
            LaurentPoly rhs = one - LaurentPoly::var() + LaurentPoly::term(n, 1) * p_nk(n, k);
            if (lhs != rhs) {
                res.pass = false;
                res.detail = "corner-entry recurrence fails at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k);
                return res;
            }
        }
    }
    res.detail = "closed form matches word products for n in {2,3,4}, k in {1,2,3}";
    return res;
}

inline CheckResult check_infinite_twist_laws() {
    CheckResult res{"infinite-twist-laws", true, ""};
    for (int n = 2; n <= 5; ++n) {
        RatMatrix w = burau(full_twist_word(n));
        RatMatrix lim = full_twist_limit(n);
        if (w * lim != lim || lim * w * lim != lim) {
            res.pass = false;
            res.detail = "absorption law fails at n=" + std::to_string(n);
            return res;
        }
    }
    res.detail = "twist absorbs into its stabilized limit for n in {2..5}";
    return res;
}

inline CheckResult check_cartier_foata() {
    CheckResult res{"cartier-foata", true, ""};
    int run = 0;
    std::vector<std::string> skipped;
    for (const CorpusEntry& e : corpus()) {
        UprightDiagram d = corpus_diagram(e);
        if (d.crossings.size() > 8) continue;  // outside this criterion's scope
        TangleChain m = chain_from_diagram(d);
        if (m.states.size() > detail::kMulticycleStateGuard) {
            skipped.push_back(e.name);
            continue;
        }
        auto [sum, det] = cartier_foata_check(m);
        ++run;
        if (sum != det) {
            res.pass = false;
            res.detail = e.name + ": multicycle sum " + ratfun_to_text(sum) + " != det " +
                         ratfun_to_text(det);
            return res;
        }
    }
    std::ostringstream os;
    os << "multicycle sum equals det(I-A) on " << run << " diagrams";
    if (!skipped.empty()) {
        os << "; skipped by the 16-state guard:";
        for (const std::string& s : skipped) os << " " << s;
    }
    res.pass = res.pass && run > 0;
    res.detail = os.str();
    return res;
}

inline CheckResult check_contraction() {
    CheckResult res{"contraction", true, ""};
    int det_checks = 0, greens_checks = 0, refusals = 0;
    for (const CorpusEntry& e : corpus()) {
        if (e.bare_unknot) continue;
        UprightDiagram d = corpus_diagram(e);
        TangleChain m = chain_from_diagram(d);
        RatMatrix g_before = greens_matrix(m);
        std::vector<std::vector<std::size_t>> regions;
        for (std::size_t q = 0; q < d.crossings.size(); ++q) regions.push_back({q});
        for (std::size_t q = 0; q + 1 < d.crossings.size(); ++q) regions.push_back({q, q + 1});
        for (const auto& picks : regions) {
            Region r = region_of_crossings(d, picks);
            if (region_has_cycle(m, r.interior)) {
                bool threw = false;
                try {
                    det_after_contract(m, r.interior, r.inputs, r.outputs);
                } catch (const std::invalid_argument&) {
                    threw = true;
                }
                if (!threw) {
                    res.pass = false;
                    res.detail = e.name + ": cyclic region was not refused";
                    return res;
                }
                ++refusals;
                continue;
            }
            auto [before, after] = det_after_contract(m, r.interior, r.inputs, r.outputs);
            ++det_checks;
            if (before != after) {
                res.pass = false;
                res.detail = e.name + ": det changed under contraction, " +
                             ratfun_to_text(before) + " -> " + ratfun_to_text(after);
                return res;
            }
            TangleChain c = contract(m, r.interior, r.inputs, r.outputs);
            RatMatrix g_after = greens_matrix(c);
            for (std::size_t a = 0; a < c.states.size(); ++a)
                for (std::size_t b = 0; b < c.states.size(); ++b) {
                    std::size_t oa = chain_index(m, c.states[a]);
                    std::size_t ob = chain_index(m, c.states[b]);
                    if (g_after.at(a, b) != g_before.at(oa, ob)) {
                        res.pass = false;
                        res.detail = e.name + ": Green's entry (" +
                                     std::to_string(c.states[a]) + "," +
                                     std::to_string(c.states[b]) + ") changed under contraction";
                        return res;
                    }
                }
            ++greens_checks;
        }
    }
    // The whole-word region of the trefoil contains a cycle and must be refused.
    {
        UprightDiagram d = corpus_diagram(corpus_entry("t2-3"));
        TangleChain m = chain_from_diagram(d);
        Region r = region_of_crossings(d, {0, 1, 2});
        bool threw = false;
        try {
            det_after_contract(m, r.interior, r.inputs, r.outputs);
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        if (!threw) {
            res.pass = false;
            res.detail = "t2-3 whole-word cyclic region was not refused";
            return res;
        }
        ++refusals;
    }
    res.detail = std::to_string(greens_checks) + " regions preserve Green's entries and " +
                 std::to_string(det_checks) + " preserve det(I-A); " +
                 std::to_string(refusals) + " cyclic regions refused";
    return res;
}

inline CheckResult check_bad_multicycles() {
    CheckResult res{"bad-multicycles", true, ""};
    const RatFun w1(LaurentPoly::var());                                      // T
    const RatFun w2(LaurentPoly::one() - LaurentPoly::var());                 // 1-T
    const RatFun w3(LaurentPoly::one() + LaurentPoly::var());                 // 1+T
    const RatFun w4(LaurentPoly::term(-1, 1));                                // T^-1
    const RatFun w5(LaurentPoly::term(2, 1));                                 // T^2
    const RatFun w6(Int(2));                                                  // 2

    struct Case {
        std::string name;
        TangleChain chain;
        std::vector<int> region;
    };
    std::vector<Case> cases;

    {  // One interior vertex shared by two outside loops.
        TangleChain m;
        m.states = {1, 2, 3};
        m.transition = RatMatrix(3, 3);
        m.transition.at(0, 1) = w1;  // 1 -> 2
        m.transition.at(1, 0) = w2;  // 2 -> 1
        m.transition.at(2, 1) = w3;  // 3 -> 2
        m.transition.at(1, 2) = w4;  // 2 -> 3
        cases.push_back({"shared-vertex", m, {2}});
    }
    {  // An interior path of length two shared by two loops.
        TangleChain m;
        m.states = {1, 2, 3, 4};
        m.transition = RatMatrix(4, 4);
        m.transition.at(0, 1) = w1;  // 1 -> 2
        m.transition.at(1, 2) = w2;  // 2 -> 3
        m.transition.at(2, 0) = w5;  // 3 -> 1
        m.transition.at(2, 3) = w4;  // 3 -> 4
        m.transition.at(3, 1) = w3;  // 4 -> 2
        cases.push_back({"shared-path", m, {2, 3}});
    }
    {  // Same chain plus a direct deep entry, giving several bad classes.
        TangleChain m;
        m.states = {1, 2, 3, 4};
        m.transition = RatMatrix(4, 4);
        m.transition.at(0, 1) = w1;  // 1 -> 2
        m.transition.at(1, 2) = w2;  // 2 -> 3
        m.transition.at(2, 0) = w5;  // 3 -> 1
        m.transition.at(2, 3) = w4;  // 3 -> 4
        m.transition.at(3, 1) = w3;  // 4 -> 2
        m.transition.at(0, 2) = w6;  // 1 -> 3 directly
        cases.push_back({"branched-entry", m, {2, 3}});
    }

    std::ostringstream os;
    for (Case& c : cases) {
        std::size_t count = 0;
        RatFun sum = bad_multicycle_sum(c.chain, c.region, &count);
        if (!sum.is_zero() || count == 0) {
            res.pass = false;
            res.detail = c.name + ": sum " + ratfun_to_text(sum) + " over " +
                         std::to_string(count) + " multicycles";
            return res;
        }
        if (os.tellp() > 0) os << ", ";
        os << c.name << " (" << count << " multicycles cancel)";
    }
    res.detail = os.str();
    return res;
}

inline CheckResult check_presentation_invariance() {
    CheckResult res{"presentation-invariance", true, ""};
    const LaurentPoly alex_want = *corpus_entry("t2-3").alexander_golden;
    const LaurentPoly rho_want = *corpus_entry("t2-3").rho1_golden;
    struct Pres {
        BraidWord word;
        int cut;
    };
    std::vector<Pres> pres;
    for (int cut = 1; cut <= 2; ++cut) pres.push_back({BraidWord{2, {1, 1, 1}}, cut});
    for (int cut = 1; cut <= 3; ++cut) pres.push_back({BraidWord{3, {1, 2, 1, 2}}, cut});
    for (const Pres& p : pres) {
        UprightDiagram d = braid_closure_to_long(p.word, p.cut);
        LaurentPoly alex = alexander(d);
        LaurentPoly r1 = rho1(d);
        if (alex != alex_want || r1 != rho_want) {
            res.pass = false;
            res.detail = "strands=" + std::to_string(p.word.strand_count) +
                         " cut=" + std::to_string(p.cut) + ": alexander " + poly_to_text(alex) +
                         ", rho1 " + poly_to_text(r1);
            return res;
        }
    }
    res.detail = "Alexander and rho1 agree across " + std::to_string(pres.size()) +
                 " trefoil presentations/cuts";
    return res;
}

inline CheckResult check_conjecture_suite() {
    CheckResult res{"conjecture-suite", true, ""};
    const std::vector<std::string> names = {"t2-3", "t2-5", "t2-7", "t2-9", "t3-4", "t3-5"};
    for (const std::string& name : names) {
        const CorpusEntry& e = corpus_entry(name);
        UprightDiagram d = corpus_diagram(e);
        try {
            LaurentPoly r1 = rho1(d);
            if (r1 != r1.mirrored()) {
                res.pass = false;
                res.detail = name + ": rho1 is not symmetric: " + poly_to_text(r1);
                return res;
            }
            LaurentPoly red = rho1_reduced(r1);  // throws on divisibility failure
            LaurentPoly d1 = delta1(red);
            for (const auto& [e2, c] : d1.terms())
                if (c > 0) {
                    res.pass = false;
                    res.detail = name + ": delta1 has a positive coefficient: " +
                                 poly_to_text(d1, "z");
                    return res;
                }
        } catch (const std::domain_error& ex) {
            res.pass = false;
            res.detail = name + ": " + ex.what();
            return res;
        }
    }
    res.detail = "symmetry, (1-T)^2 divisibility, and delta1 <= 0 hold on " +
                 std::to_string(names.size()) + " positive knots";
    return res;
}

inline CheckResult check_walk_oracle() {
    CheckResult res{"walk-oracle", true, ""};
    const Rat at(99, 100);
    int pairs = 0;
    double worst = 0.0;
    for (const std::string& name : {"t2-3", "t2-5"}) {
        UprightDiagram d = corpus_diagram(corpus_entry(name));
        TangleChain m = chain_from_diagram(d);
        RatMatrix g = greens_matrix(m);
        for (std::size_t i = 0; i < m.states.size(); ++i)
            for (std::size_t j = 0; j < m.states.size(); ++j) {
                double ws = walk_sum_oracle(m, m.states[i], m.states[j], kWalkMaxLen, at);
                double gv = g.at(i, j).evaluate(at).convert_to<double>();
                double err = std::abs(ws - gv);
                worst = std::max(worst, err);
                ++pairs;
                if (err > kWalkTolerance) {
                    res.pass = false;
                    std::ostringstream os;
                    os << name << " (" << m.states[i] << "," << m.states[j]
                       << "): walk sum " << ws << " vs Green's " << gv << " (err " << err << ")";
                    res.detail = os.str();
                    return res;
                }
            }
    }
    std::ostringstream os;
    os << pairs << " Green's entries matched at T=0.99 within " << kWalkTolerance
       << " (worst error " << worst << ")";
    res.detail = os.str();
    return res;
}

}  // namespace verify_detail

inline const std::vector<std::string>& verification_ids() {
    static const std::vector<std::string> ids = {
        "rho1-goldens",     "growth-rate",
        "alexander-limit",  "t-equals-1-laws",
        "stabilization",    "burau-closed-forms",
        "infinite-twist-laws", "cartier-foata",
        "contraction",      "bad-multicycles",
        "presentation-invariance", "conjecture-suite",
        "walk-oracle"};
    return ids;
}

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt = {}) {
    using namespace verify_detail;
    struct Entry {
        const char* id;
        std::function<CheckResult()> run;
    };
    const bool fault = opt.inject_golden_fault;
    const std::vector<Entry> table = {
        {"rho1-goldens", [fault] { return check_rho1_goldens(fault); }},
        {"growth-rate", [] { return check_growth_rate(); }},
        {"alexander-limit", [] { return check_alexander_limit(); }},
        {"t-equals-1-laws", [] { return check_t_equals_1_laws(); }},
        {"stabilization", [] { return check_stabilization(); }},
        {"burau-closed-forms", [] { return check_burau_closed_forms(); }},
        {"infinite-twist-laws", [] { return check_infinite_twist_laws(); }},
        {"cartier-foata", [] { return check_cartier_foata(); }},
        {"contraction", [] { return check_contraction(); }},
        {"bad-multicycles", [] { return check_bad_multicycles(); }},
        {"presentation-invariance", [] { return check_presentation_invariance(); }},
        {"conjecture-suite", [] { return check_conjecture_suite(); }},
        {"walk-oracle", [] { return check_walk_oracle(); }},
    };
    bool matched = false;
    std::vector<CheckResult> results;
    for (const Entry& e : table) {
        if (!opt.only.empty() && opt.only != e.id) continue;
        matched = true;
        try {
            results.push_back(e.run());
        } catch (const std::exception& ex) {
            results.push_back({e.id, false, std::string("exception: ") + ex.what()});
        }
    }
    if (!opt.only.empty() && !matched)
        throw std::invalid_argument("unknown verification id: " + opt.only);
    return results;
}

}  // namespace knotwalk
