#pragma once
// Truncated Laurent series: the coefficients of a rational function up to a
// cutoff exponent, computed by the linear recurrence the denominator
// induces.  Canonical rational functions keep the denominator's minimal
// exponent at 0, so its constant term is nonzero and the expansion around
// T = 0 is well defined; the valuation of the series is the numerator's
// minimal exponent (possibly negative).
//
// Coefficients are integers by contract: callers in this library expand
// functions whose denominators are monic up to sign (e.g. 1 + ... + T^k),
// and a non-integer coefficient in the recurrence is reported as an error
// rather than silently approximated.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotwalk/ratfun.hpp"

namespace knotwalk {

struct TruncatedSeries {
    // coeffs[i] is the coefficient of T^(min_exp + i); exponents above
    // `cutoff` are unknown, exponents below `min_exp` are exactly zero.
    long long min_exp = 0;
    long long cutoff = -1;
    std::vector<Int> coeffs;

    Int coeff(long long e) const {
        if (e > cutoff) throw std::logic_error("series coefficient queried beyond the cutoff");
        if (e < min_exp) return 0;
        return coeffs[static_cast<std::size_t>(e - min_exp)];
    }

    bool operator==(const TruncatedSeries& o) const {
        if (cutoff != o.cutoff) return false;
        long long lo = std::min(min_exp, o.min_exp);
        for (long long e = lo; e <= cutoff; ++e)
            if (coeff(e) != o.coeff(e)) return false;
        return true;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }
};

// Largest exponent r <= min(cutoffs) such that the two series agree at
// every exponent <= r; one below the common low end if they already differ
// there.
inline long long series_agreement_depth(const TruncatedSeries& a, const TruncatedSeries& b) {
    long long hi = std::min(a.cutoff, b.cutoff);
    long long lo = std::min(a.min_exp, b.min_exp);
    for (long long e = lo; e <= hi; ++e)
        if (a.coeff(e) != b.coeff(e)) return e - 1;
    return hi;
}

inline TruncatedSeries series_expand(const RatFun& f, long long cutoff) {
    TruncatedSeries s;
    s.cutoff = cutoff;
    if (f.is_zero()) {
        s.min_exp = cutoff + 1;
        return s;
    }
    const LaurentPoly& num = f.num();
    const LaurentPoly& den = f.den();
    if (!num.integer_grain())
        throw std::domain_error("series_expand: half-integer exponents in the numerator");
    // Canonical form keeps den integral with minimal exponent 0.
    Int b0 = den.coeff(0);
    if (b0 == 0)
        throw std::domain_error("series_expand: denominator vanishes at T = 0");
    long long nmin = num.min_exp2() / 2;
    long long dmax = den.max_exp2() / 2;
    s.min_exp = nmin;
    if (cutoff < nmin) return s;

    std::vector<Int> h;
    h.reserve(static_cast<std::size_t>(cutoff - nmin) + 1);
    for (long long e = nmin; e <= cutoff; ++e) {
        Int acc = num.coeff(e);
        for (long long j = 1; j <= dmax && j <= e - nmin; ++j)
            acc -= den.coeff(j) * h[static_cast<std::size_t>(e - j - nmin)];
        if (acc % b0 != 0)
            throw std::domain_error("series_expand: non-integer series coefficient");
        h.push_back(acc / b0);
    }
    s.coeffs = std::move(h);
    return s;
}

// The coefficients of a Laurent polynomial, viewed as a series up to the
// cutoff (exact: every omitted coefficient above the polynomial's degree
// is genuinely zero, but the window still stops at the cutoff).
inline TruncatedSeries series_from_poly(const LaurentPoly& p, long long cutoff) {
    return series_expand(RatFun(p), cutoff);
}

}  // namespace knotwalk
