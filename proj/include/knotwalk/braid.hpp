#pragma once
// Braid words and the unreduced Burau representation.
//
// A braid word lives in the braid group on n >= 2 strands; letters are
// signed generator indices (k for sigma_k, -k for its inverse), read
// bottom to top.  The Burau matrix of a word is the product of generator
// matrices in word order; entry (i, j) is the formal weight of walks that
// enter the braid on bottom strand i and leave on top strand j, so every
// row sums to 1 and stacking words multiplies matrices.
//
// The full twist (sigma_1 ... sigma_{n-1})^n is central; its powers have a
// closed form driven by the polynomial p_{n,k} = (1 - T) * sum T^{ni}, and
// as k grows the powers stabilize coefficientwise to a rational matrix
// with constant columns T^{j-1} / (1 + T + ... + T^{n-1}).

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotwalk/matrix.hpp"

namespace knotwalk {

struct BraidWord {
    int strand_count = 2;
    std::vector<int> letters;
};

inline void validate_braid(const BraidWord& w) {
    if (w.strand_count < 2)
        throw std::invalid_argument("braid word needs at least 2 strands");
    for (int k : w.letters) {
        if (k == 0 || k <= -w.strand_count || k >= w.strand_count)
            throw std::invalid_argument("braid letter " + std::to_string(k) +
                                        " out of range for " +
                                        std::to_string(w.strand_count) + " strands");
    }
}

inline int writhe_of_word(const BraidWord& w) {
    int s = 0;
    for (int k : w.letters) s += (k > 0) ? 1 : -1;
    return s;
}

inline BraidWord mirror_word(const BraidWord& w) {
    BraidWord m = w;
    for (int& k : m.letters) k = -k;
    return m;
}

// perm[p] = top position reached by the strand entering at bottom position
// p (positions are 1-based; index 0 is unused).
inline std::vector<int> braid_permutation(const BraidWord& w) {
    validate_braid(w);
    std::vector<int> pos(static_cast<std::size_t>(w.strand_count) + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int letter : w.letters) {
        int k = letter > 0 ? letter : -letter;
        for (int p = 1; p <= w.strand_count; ++p) {
            if (pos[static_cast<std::size_t>(p)] == k)
                pos[static_cast<std::size_t>(p)] = k + 1;
            else if (pos[static_cast<std::size_t>(p)] == k + 1)
                pos[static_cast<std::size_t>(p)] = k;
        }
    }
    return pos;
}

// True when the standard closure of the word is a knot (the permutation is
// a single cycle).
inline bool closure_is_knot(const BraidWord& w) {
    std::vector<int> perm = braid_permutation(w);
    int n = w.strand_count;
    int seen = 0;
    int p = 1;
    do {
        p = perm[static_cast<std::size_t>(p)];
        ++seen;
    } while (p != 1 && seen <= n);
    return seen == n;
}

inline RatMatrix burau_generator(int n, int letter) {
    RatMatrix g = RatMatrix::identity(static_cast<std::size_t>(n));
    int k = letter > 0 ? letter : -letter;
    std::size_t r = static_cast<std::size_t>(k) - 1;  // rows/cols k, k+1
    const RatFun one = RatFun::one();
    const RatFun t = RatFun(LaurentPoly::var());
    if (letter > 0) {
        g.at(r, r) = one - t;
        g.at(r, r + 1) = t;
        g.at(r + 1, r) = one;
        g.at(r + 1, r + 1) = RatFun::zero();
    } else {
        const RatFun tinv = RatFun(LaurentPoly::term(-1, 1));
        g.at(r, r) = RatFun::zero();
        g.at(r, r + 1) = one;
        g.at(r + 1, r) = tinv;
        g.at(r + 1, r + 1) = one - tinv;
    }
    return g;
}

inline RatMatrix burau(const BraidWord& w) {
    validate_braid(w);
    RatMatrix m = RatMatrix::identity(static_cast<std::size_t>(w.strand_count));
    for (int letter : w.letters) m = m * burau_generator(w.strand_count, letter);
    return m;
}

// The full twist word Omega_n = (sigma_1 ... sigma_{n-1})^n.
inline BraidWord full_twist_word(int n) {
    if (n < 2) throw std::invalid_argument("full twist needs at least 2 strands");
    BraidWord w;
    w.strand_count = n;
    w.letters.reserve(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1));
    for (int rep = 0; rep < n; ++rep)
        for (int k = 1; k < n; ++k) w.letters.push_back(k);
    return w;
}

// p_{n,k} = (1 - T) * sum_{i=0}^{k-1} T^{ni}; satisfies
// p_{n,k+1} = 1 - T + T^n p_{n,k}.
inline LaurentPoly p_nk(int n, int k) {
    if (n < 2) throw std::invalid_argument("p_nk: n must be at least 2");
    if (k < 1) throw std::invalid_argument("p_nk: k must be at least 1");
    LaurentPoly geom;
    for (int i = 0; i < k; ++i) geom += LaurentPoly::term(static_cast<long long>(n) * i, 1);
    return (LaurentPoly::one() - LaurentPoly::var()) * geom;
}

// Closed form for the Burau matrix of Omega_n^k: off-diagonal entries
// T^{j-1} p_{n,k}, diagonal 1 - p_{n,k} * sum_{m != i} T^{m-1}.
inline RatMatrix full_twist_power(int n, int k) {
    if (n < 2) throw std::invalid_argument("full twist needs at least 2 strands");
    if (k < 0) throw std::invalid_argument("full_twist_power: negative power");
    std::size_t nn = static_cast<std::size_t>(n);
    if (k == 0) return RatMatrix::identity(nn);
    const LaurentPoly p = p_nk(n, k);
    RatMatrix m(nn, nn);
    for (std::size_t i = 0; i < nn; ++i) {
        LaurentPoly off_sum;
        for (std::size_t mm = 0; mm < nn; ++mm) {
            if (mm == i) continue;
            off_sum += LaurentPoly::term(static_cast<long long>(mm), 1);
        }
        for (std::size_t j = 0; j < nn; ++j) {
            if (i == j)
                m.at(i, j) = RatFun(LaurentPoly::one() - p * off_sum);
            else
                m.at(i, j) = RatFun(LaurentPoly::term(static_cast<long long>(j), 1) * p);
        }
    }
    return m;
}

// 1 + T + ... + T^{n-1}.
inline LaurentPoly twist_denominator(int n) {
    LaurentPoly d;
    for (int i = 0; i < n; ++i) d += LaurentPoly::term(i, 1);
    return d;
}

// The coefficientwise limit of full_twist_power(n, k) as k grows: every
// row equals (T^{j-1} / (1 + ... + T^{n-1}))_j.
inline RatMatrix full_twist_limit(int n) {
    if (n < 2) throw std::invalid_argument("full twist needs at least 2 strands");
    std::size_t nn = static_cast<std::size_t>(n);
    const LaurentPoly den = twist_denominator(n);
    RatMatrix m(nn, nn);
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = 0; j < nn; ++j)
            m.at(i, j) = RatFun(LaurentPoly::term(static_cast<long long>(j), 1), den);
    return m;
}

}  // namespace knotwalk
