#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "knotwalk/braid.hpp"
#include "oracles.hpp"

using namespace knotwalk;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> mag(1, n - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    BraidWord w;
    w.strand_count = n;
    for (int k = 0; k < len; ++k) {
        int letter = mag(rng);
        if (sign(rng)) letter = -letter;
        w.letters.push_back(letter);
    }
    return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

bool matrices_equal(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("word matrices respect concatenation", "[braid]") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + trial % 3;
        BraidWord a = random_word(rng, n, 4);
        BraidWord b = random_word(rng, n, 4);
        CHECK(matrices_equal(burau(concat(a, b)), burau(a) * burau(b)));
    }
}

TEST_CASE("inverse letters cancel", "[braid]") {
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i) {
            RatMatrix prod = burau_generator(n, i) * burau_generator(n, -i);
            CHECK(matrices_equal(prod, RatMatrix::identity(static_cast<std::size_t>(n))));
        }
}

TEST_CASE("generator matrices satisfy the braid relations", "[braid]") {
    const int n = 4;
    for (int i = 1; i + 1 < n; ++i) {
        BraidWord lhs{n, {i, i + 1, i}};
        BraidWord rhs{n, {i + 1, i, i + 1}};
        CHECK(matrices_equal(burau(lhs), burau(rhs)));
    }
    BraidWord far_a{n, {1, 3}};
    BraidWord far_b{n, {3, 1}};
    CHECK(matrices_equal(burau(far_a), burau(far_b)));
}

TEST_CASE("word matrix determinant tracks the writhe", "[braid]") {
    std::mt19937 rng(103);
    RatFun minus_t(-LaurentPoly::var());
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 3;
        BraidWord w = random_word(rng, n, 5);
        RatFun det = oracles::cofactor_det(burau(w));
        int e = writhe_of_word(w);
        RatFun expected = RatFun::one();
        for (int k = 0; k < (e > 0 ? e : -e); ++k)
            expected = e > 0 ? expected * minus_t : expected / minus_t;
        CHECK(det == expected);
    }
}

TEST_CASE("word action matches an independent construction", "[braid]") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 3;
        BraidWord w = random_word(rng, n, 6);
        CHECK(matrices_equal(burau(w), oracles::word_action(w)));
    }
}

TEST_CASE("full twist word is the positive square of the half twist", "[braid]") {
    for (int n = 2; n <= 5; ++n) {
        BraidWord w = full_twist_word(n);
        CHECK(w.strand_count == n);
        CHECK(w.letters.size() == static_cast<std::size_t>(n * (n - 1)));
        for (int letter : w.letters) CHECK(letter > 0);
        // The closure permutation of a full twist is the identity.
        std::vector<int> perm = braid_permutation(w);
        for (int i = 0; i < n; ++i) CHECK(perm[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("closed-form twist powers equal repeated word products", "[braid]") {
    for (int n = 2; n <= 4; ++n) {
        RatMatrix word = burau(full_twist_word(n));
        RatMatrix acc = RatMatrix::identity(static_cast<std::size_t>(n));
        for (int k = 1; k <= 3; ++k) {
            acc = acc * word;
            CHECK(matrices_equal(full_twist_power(n, k), acc));
        }
    }
}

TEST_CASE("twist powers satisfy the scalar recurrence", "[braid]") {
    for (int n = 2; n <= 5; ++n) {
        LaurentPoly tn = LaurentPoly::term(n, 1);
        LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::var();
        CHECK(p_nk(n, 1) == one_minus_t);
        for (int k = 1; k < 5; ++k)
            CHECK(p_nk(n, k + 1) == one_minus_t + tn * p_nk(n, k));
    }
}

TEST_CASE("the full twist is central", "[braid]") {
    for (int n = 3; n <= 4; ++n) {
        RatMatrix twist = full_twist_power(n, 1);
        for (int i = 1; i < n; ++i) {
            RatMatrix g = burau_generator(n, i);
            CHECK(matrices_equal(twist * g, g * twist));
        }
    }
}

TEST_CASE("twist powers absorb into the stabilized limit", "[braid]") {
    for (int n = 2; n <= 5; ++n) {
        RatMatrix lim = full_twist_limit(n);
        RatMatrix twist = full_twist_power(n, 1);
        CHECK(matrices_equal(twist * lim, lim));
        CHECK(matrices_equal(lim * twist, lim));
        CHECK(matrices_equal(lim * lim, lim));
    }
}

TEST_CASE("stabilized limit rows are geometric in the strand index", "[braid]") {
    for (int n = 2; n <= 4; ++n) {
        RatMatrix lim = full_twist_limit(n);
        RatFun den(twist_denominator(n));
        for (std::size_t i = 0; i < lim.rows(); ++i)
            for (std::size_t j = 0; j < lim.cols(); ++j)
                CHECK(lim.at(i, j) ==
                      RatFun(LaurentPoly::term(static_cast<long long>(j), 1)) / den);
    }
}

TEST_CASE("geometric denominator sums the strand powers", "[braid]") {
    for (int n = 1; n <= 6; ++n) {
        LaurentPoly expect;
        for (int k = 0; k < n; ++k) expect += LaurentPoly::term(k, 1);
        CHECK(twist_denominator(n) == expect);
    }
}

TEST_CASE("malformed words are rejected", "[braid]") {
    CHECK_THROWS_AS(validate_braid(BraidWord{2, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_braid(BraidWord{2, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_braid(BraidWord{2, {-5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_braid(BraidWord{1, {}}), std::invalid_argument);
    CHECK_NOTHROW(validate_braid(BraidWord{3, {1, -2, 1}}));
}

TEST_CASE("closure component count distinguishes knots from links", "[braid]") {
    CHECK(closure_is_knot(BraidWord{2, {1, 1, 1}}));
    CHECK_FALSE(closure_is_knot(BraidWord{2, {1, 1}}));
    CHECK_FALSE(closure_is_knot(BraidWord{2, {}}));
    CHECK(closure_is_knot(BraidWord{3, {1, 2}}));
    CHECK(closure_is_knot(BraidWord{3, {1, 2, 1, 2}}));
}

TEST_CASE("mirror words flip every letter", "[braid]") {
    BraidWord w{3, {1, -2, 2, 1}};
    BraidWord m = mirror_word(w);
    CHECK(m.strand_count == 3);
    CHECK(m.letters == std::vector<int>{-1, 2, -2, -1});
    CHECK(writhe_of_word(m) == -writhe_of_word(w));
}
