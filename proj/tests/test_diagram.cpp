#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "knotwalk/diagram.hpp"
#include "oracles.hpp"

using namespace knotwalk;

namespace {

BraidWord random_knot_word(std::mt19937& rng, int n, int len) {
    // Each letter is a transposition, so a single-cycle closure needs the
    // word length to match n - 1 in parity.
    if ((len - (n - 1)) % 2 != 0) ++len;
    std::uniform_int_distribution<int> mag(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (;;) {
        BraidWord w;
        w.strand_count = n;
        for (int k = 0; k < len; ++k) {
            int letter = mag(rng);
            if (sign(rng)) letter = -letter;
            w.letters.push_back(letter);
        }
        if (closure_is_knot(w)) return w;
    }
}

}  // namespace

TEST_CASE("trefoil closure has the frozen strand layout", "[diagram]") {
    UprightDiagram d = braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 1);
    REQUIRE(d.strand_count == 7);
    CHECK(d.entry == 1);
    CHECK(d.exit == 7);
    REQUIRE(d.crossings.size() == 3);

    auto expect = [&](std::size_t k, int i, int j, int ip, int jp) {
        CHECK(d.crossings[k].sign == 1);
        CHECK(d.crossings[k].over_in == i);
        CHECK(d.crossings[k].under_in == j);
        CHECK(d.crossings[k].over_out == ip);
        CHECK(d.crossings[k].under_out == jp);
    };
    expect(0, 1, 4, 2, 5);
    expect(1, 5, 2, 6, 3);
    expect(2, 3, 6, 4, 7);

    CHECK(rotation_total(d) == -1);
    CHECK(rotation_of(d, 4) == -1);
    CHECK(writhe(d) == 3);
}

TEST_CASE("trefoil transition matrix lists the crossing weights", "[diagram]") {
    UprightDiagram d = braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 1);
    PolyMatrix a = transition_matrix_poly(d);
    const LaurentPoly t = LaurentPoly::var();
    const LaurentPoly one = LaurentPoly::one();
    CHECK(a.at(0, 1) == t);        // over strand keeps going with weight T
    CHECK(a.at(0, 4) == one - t);  // or drops to the under-exit
    CHECK(a.at(3, 4) == one);      // under strand crosses with weight 1
    CHECK(a.at(4, 5) == t);
    CHECK(a.at(4, 2) == one - t);
    CHECK(a.at(1, 2) == one);
    CHECK(a.at(2, 3) == t);
    CHECK(a.at(2, 6) == one - t);
    CHECK(a.at(5, 6) == one);
    // Nothing else is reachable in one step.
    int nonzero = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 9);
}

TEST_CASE("closure layout routes the cut strand through a turning arc", "[diagram]") {
    // A single positive kink: one crossing, one arc turning through -1.
    UprightDiagram d = braid_closure_to_long(BraidWord{2, {1}}, 1);
    REQUIRE(d.strand_count == 3);
    CHECK(writhe(d) == 1);
    CHECK(rotation_total(d) == -1);

    // Its mirror turns the opposite way and picks up weight on the diagonal:
    // the under-exit of the negative crossing re-enters the same crossing.
    UprightDiagram m = braid_closure_to_long(BraidWord{2, {-1}}, 1);
    PolyMatrix a = transition_matrix_poly(m);
    CHECK(a.at(1, 1) == LaurentPoly::one() - LaurentPoly::term(-1, 1));
}

TEST_CASE("closure diagrams of knot words validate", "[diagram]") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 3;
        BraidWord w = random_knot_word(rng, n, 3 + trial % 5);
        for (int cut = 1; cut <= n; ++cut) {
            UprightDiagram d = braid_closure_to_long(w, cut);
            CHECK_NOTHROW(validate(d));
            CHECK(d.strand_count == 2 * static_cast<int>(w.letters.size()) + 1);
            CHECK(writhe(d) == writhe_of_word(w));
            // The walk-sum exponent correction must stay an integer.
            CHECK((writhe(d) - rotation_total(d)) % 2 == 0);
        }
    }
}

TEST_CASE("closure of a link word is refused", "[diagram]") {
    CHECK_THROWS_AS(braid_closure_to_long(BraidWord{2, {1, 1}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(braid_closure_to_long(BraidWord{3, {1}}, 1), std::invalid_argument);
}

TEST_CASE("cut strand must exist", "[diagram]") {
    CHECK_THROWS_AS(braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 3), std::invalid_argument);
}

TEST_CASE("diagram validation rejects broken strand bookkeeping", "[diagram]") {
    UprightDiagram good = braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 1);

    UprightDiagram bad = good;
    bad.crossings[0].over_out = 3;  // produced twice, 2 never produced
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = good;
    bad.crossings[1].over_in = 1;  // consumed twice
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = good;
    bad.crossings[0].sign = 2;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = good;
    bad.entry = 9;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = good;
    bad.rotations[12] = 1;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    // Two disjoint loops with matched counts still fail the single-walk check.
    UprightDiagram split;
    split.strand_count = 5;
    split.entry = 1;
    split.exit = 5;
    split.crossings.push_back({1, 1, 2, 5, 2});   // 1 -> 5 directly, 2 -> 2 loop
    split.crossings.push_back({1, 3, 4, 4, 3});   // 3, 4 feed each other
    CHECK_THROWS_AS(validate(split), std::invalid_argument);
}

TEST_CASE("labels along the trace appear in consumption order", "[diagram]") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 2;
        BraidWord w = random_knot_word(rng, n, 4);
        UprightDiagram d = braid_closure_to_long(w, 1);
        // Successor labels: strand s is consumed by exactly one crossing and
        // continues as that crossing's matching outlet; following successors
        // from the entry visits 1, 2, ..., strand_count in order.
        std::vector<int> succ(static_cast<std::size_t>(d.strand_count) + 1, 0);
        for (const Crossing& c : d.crossings) {
            succ[static_cast<std::size_t>(c.over_in)] = c.over_out;
            succ[static_cast<std::size_t>(c.under_in)] = c.under_out;
        }
        int s = d.entry;
        int expected = 1;
        while (s != d.exit) {
            CHECK(s == expected);
            s = succ[static_cast<std::size_t>(s)];
            ++expected;
        }
        CHECK(s == d.strand_count);
    }
}

TEST_CASE("mirror closures flip writhe and invert rotation weights", "[diagram]") {
    std::mt19937 rng(227);
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord w = random_knot_word(rng, 3, 5);
        UprightDiagram d = braid_closure_to_long(w, 1);
        UprightDiagram m = braid_closure_to_long(mirror_word(w), 1);
        CHECK(writhe(m) == -writhe(d));
        CHECK(m.strand_count == d.strand_count);
        CHECK(rotation_total(m) == rotation_total(d));
    }
}
