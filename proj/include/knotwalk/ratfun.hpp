#pragma once
// Rational functions in T over the rationals, stored as a pair of integer
// Laurent polynomials num / den in a canonical form:
//
//   * den is nonzero, has integer exponents only, minimal exponent 0 and a
//     positive leading coefficient (powers of T and the sign live in num);
//   * num and den share no polynomial factor over the rationals;
//   * the integer contents of num and den are coprime (so 1/2 is exactly
//     {1, 2}, and den stays an honest integer polynomial);
//   * zero is {0, 1}.
//
// Equality is structural, which canonical form makes meaningful.
//
// A numerator is allowed to carry half-integer exponents (T^(1/2) arises
// from writhe/rotation corrections); the polynomial-gcd cancellation runs
// after factoring the half-grain unit out of the numerator.  A numerator
// mixing both exponent parities (never produced by the operations in this
// library) is normalized by content and sign only, which is still
// deterministic.

#include <stdexcept>
#include <utility>

#include "knotwalk/laurent.hpp"

namespace knotwalk {

class RatFun {
public:
    RatFun() : num_(), den_(LaurentPoly::one()) {}
    explicit RatFun(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}
    explicit RatFun(const Int& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
    explicit RatFun(long long c) : RatFun(Int(c)) {}
    RatFun(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }
    // The exact rational constant a/b.
    RatFun(const Int& a, const Int& b) : num_(LaurentPoly(a)), den_(LaurentPoly(b)) {
        canonicalize();
    }

    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Int(1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the value lies in the Laurent polynomial ring itself.
    bool is_polynomial() const {
        return den_.is_constant() && den_.constant_value() == 1;
    }
    const LaurentPoly& as_polynomial() const {
        if (!is_polynomial())
            throw std::domain_error("as_polynomial: rational function has a nontrivial denominator");
        return num_;
    }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero rational function");
        return RatFun(den_, num_);
    }

    // Exact evaluation; rejects points where the denominator vanishes.
    Rat evaluate(const Rat& t) const {
        Rat d = den_.evaluate(t);
        if (d == 0) throw std::domain_error("evaluate: denominator vanishes at this point");
        return num_.evaluate(t) / d;
    }

    // The substitution T -> T^k applied to both parts (k nonzero).
    RatFun exponents_scaled(long long k) const {
        return RatFun(num_.exponents_scaled(k), den_.exponents_scaled(k));
    }

private:
    LaurentPoly num_;
    LaurentPoly den_;

    // Negate every coefficient sitting on an odd half-grid slot; f * conj(f)
    // has integer exponents only, which clears a half-grain denominator.
    static LaurentPoly parity_conjugate(const LaurentPoly& p) {
        LaurentPoly r;
        for (const auto& [e2, c] : p.terms()) {
            long long rem = e2 % 2;
            r += LaurentPoly::term_half(e2, rem != 0 ? Int(-c) : c);
        }
        return r;
    }

    void canonicalize() {
        if (den_.is_zero())
            throw std::invalid_argument("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        if (!den_.integer_grain()) {
            LaurentPoly conj = parity_conjugate(den_);
            num_ *= conj;
            den_ *= conj;
        }
        long long dshift = den_.min_exp2();
        den_ = den_.shifted_half(-dshift);
        num_ = num_.shifted_half(-dshift);

        long long nshift = num_.min_exp2();
        LaurentPoly body = num_.shifted_half(-nshift);
        if (body.integer_grain()) {
            LaurentPoly g = LaurentPoly::gcd(body, den_);
            if (!(g.is_constant() && g.constant_value() == 1)) {
                body = LaurentPoly::divide_exact(body, g);
                den_ = LaurentPoly::divide_exact(den_, g);
            }
            num_ = body.shifted_half(nshift);
        } else {
            // Mixed-parity numerator: shared integer content only.
            Int cg = int_gcd(num_.content(), den_.content());
            if (cg > 1) {
                num_ = LaurentPoly::divide_exact(num_, LaurentPoly(cg));
                den_ = LaurentPoly::divide_exact(den_, LaurentPoly(cg));
            }
        }
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

}  // namespace knotwalk
