#include <catch2/catch_amalgamated.hpp>

#include "knotwalk/corpus.hpp"
#include "knotwalk/invariants.hpp"
#include "knotwalk/twisting.hpp"
#include "oracles.hpp"

using namespace knotwalk;

namespace {

TwistedFamily two_strand_family() {
    TwistedFamily f;
    f.m = 2;
    f.prefix = BraidWord{2, {1}};
    f.suffix = BraidWord{2, {}};
    f.slot_lo = 1;
    f.slot_hi = 2;
    f.cut = 1;
    return f;
}

TwistedFamily three_strand_family() {
    TwistedFamily f;
    f.m = 3;
    f.prefix = BraidWord{3, {1, 2}};
    f.suffix = BraidWord{3, {}};
    f.slot_lo = 1;
    f.slot_hi = 3;
    f.cut = 1;
    return f;
}

LaurentPoly poly_of(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::term(e, c);
    return p;
}

}  // namespace

TEST_CASE("family words append whole twists inside the slot", "[twisting]") {
    TwistedFamily f = two_strand_family();
    CHECK(word_at(f, 0).letters == std::vector<int>{1});
    CHECK(word_at(f, 1).letters == std::vector<int>{1, 1, 1});
    CHECK(word_at(f, 2).letters == std::vector<int>{1, 1, 1, 1, 1});

    // A slot away from strand 1 shifts the twist letters.
    TwistedFamily g;
    g.m = 3;
    g.prefix = BraidWord{3, {1, 1, 2}};
    g.suffix = BraidWord{3, {}};
    g.slot_lo = 2;
    g.slot_hi = 3;
    g.cut = 1;
    CHECK(word_at(g, 1).letters == std::vector<int>{1, 1, 2, 2, 2});
}

TEST_CASE("twisted families produce the odd torus closures", "[twisting]") {
    TwistedFamily f = two_strand_family();
    CHECK(alexander(diagram_at(f, 0)) == LaurentPoly::one());
    CHECK(alexander(diagram_at(f, 1)) ==
          *corpus_entry("t2-3").alexander_golden);
    CHECK(alexander(diagram_at(f, 2)) ==
          *corpus_entry("t2-5").alexander_golden);
    CHECK(rho1(diagram_at(f, 3)) == *corpus_entry("t2-7").rho1_golden);
}

TEST_CASE("families whose closure is a link are refused", "[twisting]") {
    TwistedFamily f;
    f.m = 2;
    f.prefix = BraidWord{2, {}};  // closure of the empty 2-braid: two circles
    f.suffix = BraidWord{2, {}};
    f.slot_lo = 1;
    f.slot_hi = 2;
    f.cut = 1;
    CHECK_THROWS_AS(validate_family(f), std::invalid_argument);

    TwistedFamily bad_slot = two_strand_family();
    bad_slot.slot_hi = 1;
    CHECK_THROWS_AS(validate_family(bad_slot), std::invalid_argument);
    bad_slot.slot_hi = 5;
    CHECK_THROWS_AS(validate_family(bad_slot), std::invalid_argument);

    TwistedFamily bad_cut = two_strand_family();
    bad_cut.cut = 3;
    CHECK_THROWS_AS(validate_family(bad_cut), std::invalid_argument);
}

TEST_CASE("stabilized chains have one vertex state pair per slot strand", "[twisting]") {
    // Two strands in the slot: 2n extra vertex states alongside the braid
    // segments that survive the closure relabeling.
    TwistedFamily f = two_strand_family();
    TangleChain plain = build_d_infinity(f);
    TauChain with_tau = build_d_tau_infinity(f);
    CHECK(plain.states.size() == 5);
    CHECK(with_tau.chain.states.size() == 11);
    CHECK(with_tau.tau.size() == 2);  // one full twist of the 2-strand slot

    TwistedFamily g = three_strand_family();
    CHECK(build_d_tau_infinity(g).tau.size() == 6);
}

TEST_CASE("the stabilized determinant recovers the Alexander limit", "[twisting]") {
    TwistedFamily f = two_strand_family();
    RatFun lim = alexander_limit(f);
    CHECK(lim == RatFun(LaurentPoly::one(),
                        LaurentPoly::one() + LaurentPoly::var()));
    // Finite twists converge to it: normalized Alexander series deepen with t.
    std::vector<long long> depths = alexander_limit_depths(f, 3, 8);
    REQUIRE(depths.size() == 4);
    for (std::size_t t = 1; t < depths.size(); ++t) CHECK(depths[t] >= depths[t - 1]);
    CHECK(depths.back() >= 6);
}

TEST_CASE("the growth rate of the two-strand family is exact", "[twisting]") {
    TwistedFamily f = two_strand_family();
    LaurentPoly den = (LaurentPoly::one() + LaurentPoly::var()) *
                      (LaurentPoly::one() + LaurentPoly::var());
    CHECK(growth_rate(f) == RatFun(-LaurentPoly::one(), den));
}

TEST_CASE("finite differences converge to the growth rate", "[twisting]") {
    TwistedFamily f = two_strand_family();
    CHECK(d_t_empirical(f, 0) ==
          poly_of({{0, -1}, {1, 2}, {2, -2}, {3, 2}, {4, -1}}));
    CHECK(d_t_empirical(f, 1) ==
          poly_of({{0, -1}, {1, 2}, {2, -3}, {3, 4}, {4, -5},
                   {5, 6}, {6, -5}, {7, 4}, {8, -2}}));

    GrowthReport rep = convergence_report(f, 3, 6);
    REQUIRE(rep.d_values.size() == 4);
    CHECK(rep.agreement_depth == std::vector<long long>{1, 5, 6, 6});
    CHECK(rep.depths_nondecreasing);
    CHECK(rep.rho1_pairwise_distinct);
    CHECK(rep.alpha == 0);
    CHECK(rep.tau_det_matches);
}

TEST_CASE("growth magnitudes at the unit evaluation follow the slot width", "[twisting]") {
    // |limit(1)| = 1/n and |growth(1)| = 1/n^2 * n(n-1)/2 for an n-strand slot.
    auto check_family = [](const TwistedFamily& f, int n) {
        Rat lim = alexander_limit(f).evaluate(Rat(1));
        Rat gr = growth_rate(f).evaluate(Rat(1));
        if (lim < 0) lim = -lim;
        if (gr < 0) gr = -gr;
        CHECK(lim == Rat(1, n));
        CHECK(gr == Rat(n * (n - 1) / 2, static_cast<long long>(n) * n));
    };
    check_family(two_strand_family(), 2);
    check_family(three_strand_family(), 3);
}

TEST_CASE("three-strand slots converge the same way", "[twisting]") {
    TwistedFamily f = three_strand_family();
    GrowthReport rep = convergence_report(f, 2, 6);
    CHECK(rep.depths_nondecreasing);
    CHECK(rep.rho1_pairwise_distinct);
    CHECK(rep.tau_det_matches);
    // The first few twists already pass the limit through the cutoff window.
    CHECK(rep.agreement_depth.back() >= 4);
}

TEST_CASE("the twist-crossing correction matches a finite difference probe", "[twisting]") {
    // d_t for large t agrees with the growth-rate series ever deeper; check
    // depth 8 explicitly at t = 3 for the two-strand family.
    TwistedFamily f = two_strand_family();
    TruncatedSeries lim = series_expand(growth_rate(f), 8);
    TruncatedSeries d3 = series_from_poly(d_t_empirical(f, 3), 8);
    CHECK(series_agreement_depth(d3, lim) >= 7);
}

TEST_CASE("negative twist counts are rejected", "[twisting]") {
    TwistedFamily f = two_strand_family();
    CHECK_THROWS_AS(word_at(f, -1), std::invalid_argument);
    CHECK_THROWS_AS(d_t_empirical(f, -2), std::invalid_argument);
    CHECK_THROWS_AS(convergence_report(f, 0, 6), std::invalid_argument);
}
