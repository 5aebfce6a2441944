#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "knotwalk/diagram.hpp"
#include "knotwalk/markov.hpp"
#include "oracles.hpp"

using namespace knotwalk;

namespace {

BraidWord random_knot_word(std::mt19937& rng, int n, int len) {
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

// A chain over small integer weights on a random sparse digraph.
TangleChain random_chain(std::mt19937& rng, std::size_t n, double density) {
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    std::uniform_int_distribution<long long> weight(-3, 3);
    TangleChain m;
    for (std::size_t s = 1; s <= n; ++s) m.states.push_back(static_cast<int>(s));
    m.transition = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (pick(rng) < density) {
                long long c = weight(rng);
                if (c != 0) m.transition.at(i, j) = RatFun(LaurentPoly::term(1, c));
            }
    return m;
}

}  // namespace

TEST_CASE("closure chains expose strand states and boundary", "[markov]") {
    UprightDiagram d = braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 1);
    TangleChain m = chain_from_diagram(d);
    REQUIRE(m.states.size() == 7);
    for (int s = 1; s <= 7; ++s) CHECK(m.states[static_cast<std::size_t>(s) - 1] == s);
    CHECK(m.incoming == std::vector<int>{1});
    CHECK(m.outgoing == std::vector<int>{7});
    CHECK(chain_index(m, 4) == 3);
    CHECK_THROWS_AS(chain_index(m, 99), std::invalid_argument);
}

TEST_CASE("Green's entries sum the weighted walk series", "[markov]") {
    std::mt19937 rng(311);
    const Rat at(99, 100);
    for (int trial = 0; trial < 8; ++trial) {
        BraidWord w = random_knot_word(rng, 2 + trial % 2, 3);
        TangleChain m = chain_from_diagram(braid_closure_to_long(w, 1));
        RatMatrix g = greens_matrix(m);
        for (int s : {1, 2}) {
            for (int t = 1; t <= static_cast<int>(m.states.size()); t += 2) {
                double walks = walk_sum_oracle(m, s, t, 60, at);
                double entry =
                    g.at(chain_index(m, s), chain_index(m, t)).evaluate(at).convert_to<double>();
                CHECK(std::abs(walks - entry) < 1e-6);
            }
        }
    }
}

TEST_CASE("open-braid chains recover the word matrix at the boundary", "[markov]") {
    std::mt19937 rng(313);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 2 + trial % 3;
        BraidWord w;
        w.strand_count = n;
        std::uniform_int_distribution<int> mag(1, n - 1);
        std::uniform_int_distribution<int> sign(0, 1);
        for (int k = 0; k < 4; ++k) {
            int letter = mag(rng);
            if (sign(rng)) letter = -letter;
            w.letters.push_back(letter);
        }
        TangleChain m = braid_chain(w);
        RatMatrix g = greens_matrix(m);
        RatMatrix b = burau(w);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::size_t si = chain_index(m, m.incoming[static_cast<std::size_t>(i)]);
                std::size_t tj = chain_index(m, m.outgoing[static_cast<std::size_t>(j)]);
                CHECK(g.at(si, tj) ==
                      b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            }
    }
}

TEST_CASE("contracting a window preserves boundary Green's entries and det", "[markov]") {
    std::mt19937 rng(317);
    for (int trial = 0; trial < 10; ++trial) {
        BraidWord w = random_knot_word(rng, 2 + trial % 2, 4);
        UprightDiagram d = braid_closure_to_long(w, 1);
        TangleChain m = chain_from_diagram(d);
        RatMatrix g_before = greens_matrix(m);

        std::uniform_int_distribution<std::size_t> start(0, d.crossings.size() - 1);
        std::uniform_int_distribution<std::size_t> span(1, 3);
        std::size_t lo = start(rng);
        std::size_t hi = std::min(lo + span(rng), d.crossings.size());
        std::vector<std::size_t> picks;
        for (std::size_t q = lo; q < hi; ++q) picks.push_back(q);
        Region r = region_of_crossings(d, picks);

        if (region_has_cycle(m, r.interior)) {
            CHECK_THROWS_AS(det_after_contract(m, r.interior, r.inputs, r.outputs),
                            std::invalid_argument);
            continue;
        }
        auto [before, after] = det_after_contract(m, r.interior, r.inputs, r.outputs);
        CHECK(before == after);

        TangleChain c = contract(m, r.interior, r.inputs, r.outputs);
        CHECK(oracles::cofactor_det(i_minus_a(c)) == before);
        RatMatrix g_after = greens_matrix(c);
        for (std::size_t a = 0; a < c.states.size(); ++a)
            for (std::size_t b = 0; b < c.states.size(); ++b)
                CHECK(g_after.at(a, b) ==
                      g_before.at(chain_index(m, c.states[a]), chain_index(m, c.states[b])));
    }
}

TEST_CASE("contraction rejects leaky or overlapping regions", "[markov]") {
    TangleChain m;
    m.states = {1, 2, 3};
    m.transition = RatMatrix(3, 3);
    m.transition.at(0, 1) = RatFun(LaurentPoly::var());   // 1 -> 2
    m.transition.at(1, 2) = RatFun::one();                // 2 -> 3
    m.incoming = {1};
    m.outgoing = {3};

    // 1 feeds interior 2 but is not declared an input.
    CHECK_THROWS_AS(contract(m, {2}, {}, {3}), std::invalid_argument);
    // 2 exits to 3 which is not declared an output.
    CHECK_THROWS_AS(contract(m, {2}, {1}, {}), std::invalid_argument);
    // Interior may not contain the chain boundary.
    CHECK_THROWS_AS(contract(m, {1}, {}, {2}), std::invalid_argument);
    // Interior and boundary sets must be disjoint.
    CHECK_THROWS_AS(contract(m, {2}, {2}, {3}), std::invalid_argument);
    // The valid declaration passes and leaves only the direct hop.
    TangleChain c = contract(m, {2}, {1}, {3});
    REQUIRE(c.states == std::vector<int>{1, 3});
    CHECK(c.transition.at(0, 1) == RatFun(LaurentPoly::var()));
}

TEST_CASE("cycle detection restricts to the chosen subset", "[markov]") {
    TangleChain m;
    m.states = {1, 2, 3};
    m.transition = RatMatrix(3, 3);
    m.transition.at(0, 1) = RatFun::one();  // 1 -> 2
    m.transition.at(1, 0) = RatFun::one();  // 2 -> 1 (cycle 1-2)
    m.transition.at(2, 2) = RatFun::one();  // 3 -> 3 (self-loop)
    CHECK(region_has_cycle(m, {1, 2}));
    CHECK(region_has_cycle(m, {3}));
    CHECK(region_has_cycle(m, {1, 2, 3}));
    CHECK_FALSE(region_has_cycle(m, {1}));
    CHECK_FALSE(region_has_cycle(m, {2}));
    CHECK_FALSE(region_has_cycle(m, {}));
}

TEST_CASE("multicycle enumeration agrees with an independent cycle search", "[markov]") {
    std::mt19937 rng(331);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        TangleChain m = random_chain(rng, n, 0.45);

        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) adj[i][j] = !m.transition.at(i, j).is_zero();
        std::vector<std::vector<std::size_t>> oracle_cycles = oracles::simple_cycles_oracle(adj);

        // Count vertex-disjoint packings (including the empty one) directly.
        std::vector<unsigned> masks;
        for (const auto& c : oracle_cycles) {
            unsigned mask = 0;
            for (std::size_t v : c) mask |= (1u << v);
            masks.push_back(mask);
        }
        std::function<std::size_t(std::size_t, unsigned)> packings =
            [&](std::size_t from, unsigned used) {
                std::size_t total = 1;
                for (std::size_t ci = from; ci < masks.size(); ++ci)
                    if (!(masks[ci] & used)) total += packings(ci + 1, used | masks[ci]);
                return total;
            };
        CHECK(enumerate_simple_multicycles(m).size() == packings(0, 0u));
    }
}

TEST_CASE("signed multicycle sum reproduces the determinant", "[markov]") {
    std::mt19937 rng(337);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
        TangleChain m = random_chain(rng, n, 0.4);
        auto [sum, det] = cartier_foata_check(m);
        CHECK(sum == det);
        CHECK(det == oracles::cofactor_det(i_minus_a(m)));
    }
}

TEST_CASE("exhaustive searches refuse oversized chains", "[markov]") {
    TangleChain m;
    for (int s = 1; s <= 17; ++s) m.states.push_back(s);
    m.transition = RatMatrix(17, 17);
    CHECK_THROWS_AS(enumerate_simple_multicycles(m), std::invalid_argument);
    CHECK_THROWS_AS(bad_multicycle_sum(m, {}), std::invalid_argument);
}

TEST_CASE("defect classes supported inside an acyclic region cancel", "[markov]") {
    const RatFun w1(LaurentPoly::var());
    const RatFun w2(LaurentPoly::one() - LaurentPoly::var());
    const RatFun w3(LaurentPoly::one() + LaurentPoly::var());
    const RatFun w4(LaurentPoly::term(-1, 1));
    const RatFun w5(LaurentPoly::term(2, 1));

    TangleChain m;
    m.states = {1, 2, 3, 4};
    m.transition = RatMatrix(4, 4);
    m.transition.at(0, 1) = w1;  // 1 -> 2
    m.transition.at(1, 2) = w2;  // 2 -> 3
    m.transition.at(2, 0) = w5;  // 3 -> 1
    m.transition.at(2, 3) = w4;  // 3 -> 4
    m.transition.at(3, 1) = w3;  // 4 -> 2

    std::size_t count = 0;
    RatFun sum = bad_multicycle_sum(m, {2, 3}, &count);
    CHECK(sum.is_zero());
    CHECK(count > 0);

    // An empty region admits no qualifying class at all.
    count = 99;
    sum = bad_multicycle_sum(m, {}, &count);
    CHECK(sum.is_zero());
    CHECK(count == 0);

    // Regions with their own cycles are out of scope.
    m.transition.at(1, 1) = w1;
    CHECK_THROWS_AS(bad_multicycle_sum(m, {2, 3}), std::invalid_argument);
}

TEST_CASE("single-state regions qualify no classes on simple closures", "[markov]") {
    // On a trefoil closure chain every single interior strand is acyclic and
    // the cancellation sum is vacuously zero or cancels exactly.
    UprightDiagram d = braid_closure_to_long(BraidWord{2, {1, 1, 1}}, 1);
    TangleChain m = chain_from_diagram(d);
    for (int s = 2; s <= 6; ++s) {
        std::size_t count = 0;
        RatFun sum = bad_multicycle_sum(m, {s}, &count);
        CHECK(sum.is_zero());
    }
}
