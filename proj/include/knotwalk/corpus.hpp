#pragma once
// The built-in knot corpus: unknot presentations and the small torus knots
// T(2,q) for q <= 9 plus T(3,4) and T(3,5), in both chiralities.  Golden
// invariant values are frozen here; Alexander goldens are additionally
// cross-checked against an independent reduced-Burau oracle in the test
// suite before being trusted.

#include <optional>
#include <string>
#include <vector>

#include "knotwalk/braid.hpp"
#include "knotwalk/diagram.hpp"
#include "knotwalk/laurent.hpp"

namespace knotwalk {

struct CorpusEntry {
    std::string name;
    bool bare_unknot = false;  // the 0-crossing diagram instead of a braid closure
    BraidWord word{2, {}};
    int cut = 1;
    bool claims_positive = false;  // all-positive diagram; drives the conjecture checks
    std::optional<LaurentPoly> alexander_golden;
    std::optional<LaurentPoly> rho1_golden;
};

namespace detail {

inline LaurentPoly corpus_poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::term(e, c);
    return p;
}

}  // namespace detail

inline const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        using detail::corpus_poly;
        std::vector<CorpusEntry> v;

        CorpusEntry trivial;
        trivial.name = "unknot-trivial";
        trivial.bare_unknot = true;
        trivial.alexander_golden = LaurentPoly::one();
        trivial.rho1_golden = LaurentPoly();
        v.push_back(trivial);

        auto add = [&v](const std::string& name, BraidWord word, int cut, bool positive,
                        std::optional<LaurentPoly> alex, std::optional<LaurentPoly> r1) {
            CorpusEntry e;
            e.name = name;
            e.word = std::move(word);
            e.cut = cut;
            e.claims_positive = positive;
            e.alexander_golden = std::move(alex);
            e.rho1_golden = std::move(r1);
            v.push_back(std::move(e));
        };
        auto rep = [](int letter, int count) { return std::vector<int>(count, letter); };
        auto alt = [](int count) {  // (sigma_1 sigma_2)^count in B_3
            std::vector<int> w;
            for (int k = 0; k < count; ++k) {
                w.push_back(1);
                w.push_back(2);
            }
            return w;
        };

        const LaurentPoly alex_t23 = corpus_poly({{-1, 1}, {0, -1}, {1, 1}});
        const LaurentPoly alex_t25 = corpus_poly({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
        const LaurentPoly alex_t27 =
            corpus_poly({{-3, 1}, {-2, -1}, {-1, 1}, {0, -1}, {1, 1}, {2, -1}, {3, 1}});
        const LaurentPoly alex_t29 = corpus_poly(
            {{-4, 1}, {-3, -1}, {-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}, {3, -1}, {4, 1}});
        const LaurentPoly alex_t34 = corpus_poly({{-3, 1}, {-2, -1}, {0, 1}, {2, -1}, {3, 1}});
        const LaurentPoly alex_t35 =
            corpus_poly({{-4, 1}, {-3, -1}, {-1, 1}, {0, -1}, {1, 1}, {3, -1}, {4, 1}});
        const LaurentPoly rho1_t23 = corpus_poly({{-2, -1}, {-1, 2}, {0, -2}, {1, 2}, {2, -1}});
        const LaurentPoly rho1_t25 = corpus_poly(
            {{-4, -2}, {-3, 4}, {-2, -5}, {-1, 6}, {0, -6}, {1, 6}, {2, -5}, {3, 4}, {4, -2}});
        const LaurentPoly rho1_t27 =
            corpus_poly({{-6, -3}, {-5, 6}, {-4, -8}, {-3, 10}, {-2, -11}, {-1, 12}, {0, -12},
                         {1, 12}, {2, -11}, {3, 10}, {4, -8}, {5, 6}, {6, -3}});

        add("unknot-kink", BraidWord{2, {1}}, 1, true, LaurentPoly::one(), LaurentPoly());
        add("unknot-kink-mirror", BraidWord{2, {-1}}, 1, false, LaurentPoly::one(),
            LaurentPoly());
        add("t2-3", BraidWord{2, rep(1, 3)}, 1, true, alex_t23, rho1_t23);
        add("t2-3-mirror", BraidWord{2, rep(-1, 3)}, 1, false, alex_t23, std::nullopt);
        add("t2-3-b3", BraidWord{3, alt(2)}, 1, true, alex_t23, rho1_t23);
        add("t2-5", BraidWord{2, rep(1, 5)}, 1, true, alex_t25, rho1_t25);
        add("t2-5-mirror", BraidWord{2, rep(-1, 5)}, 1, false, alex_t25, std::nullopt);
        add("t2-7", BraidWord{2, rep(1, 7)}, 1, true, alex_t27, rho1_t27);
        add("t2-7-mirror", BraidWord{2, rep(-1, 7)}, 1, false, alex_t27, std::nullopt);
        add("t2-9", BraidWord{2, rep(1, 9)}, 1, true, alex_t29, std::nullopt);
        add("t2-9-mirror", BraidWord{2, rep(-1, 9)}, 1, false, alex_t29, std::nullopt);
        add("t3-4", BraidWord{3, alt(4)}, 1, true, alex_t34, std::nullopt);
        add("t3-4-mirror", BraidWord{3, mirror_word(BraidWord{3, alt(4)}).letters}, 1, false,
            alex_t34, std::nullopt);
        add("t3-5", BraidWord{3, alt(5)}, 1, true, alex_t35, std::nullopt);
        add("t3-5-mirror", BraidWord{3, mirror_word(BraidWord{3, alt(5)}).letters}, 1, false,
            alex_t35, std::nullopt);
        return v;
    }();
    return entries;
}

inline const CorpusEntry& corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e;
    throw std::invalid_argument("no corpus entry named " + name);
}

inline UprightDiagram corpus_diagram(const CorpusEntry& e) {
    if (e.bare_unknot) return unknot_diagram();
    return braid_closure_to_long(e.word, e.cut);
}

}  // namespace knotwalk
