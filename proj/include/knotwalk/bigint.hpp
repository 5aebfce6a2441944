#pragma once
// Arbitrary-precision integer and rational scalars used throughout the
// library, plus a few small helpers the standard headers do not provide.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace knotwalk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g = boost::multiprecision::gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

inline Int int_pow(const Int& base, unsigned long long e) {
    Int r = 1;
    Int b = base;
    while (e > 0) {
        if (e & 1ULL) r *= b;
        b *= b;
        e >>= 1ULL;
    }
    return r;
}

// t^e for rational t and possibly negative integer e; t must be nonzero
// when e < 0.
inline Rat rat_pow(const Rat& t, long long e) {
    if (e >= 0) {
        Rat r = 1;
        Rat b = t;
        unsigned long long k = static_cast<unsigned long long>(e);
        while (k > 0) {
            if (k & 1ULL) r *= b;
            b *= b;
            k >>= 1ULL;
        }
        return r;
    }
    if (t == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return Rat(1) / rat_pow(t, -e);
}

}  // namespace knotwalk
