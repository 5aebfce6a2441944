#pragma once
// Laurent polynomials in one variable T with arbitrary-precision integer
// coefficients and exponents on the half-integer grid.
//
// Representation: a sorted map from *doubled* exponent to coefficient, so
// T^(3/2) is stored under key 3 and T^2 under key 4.  Invariants kept by
// every operation:
//   * no stored coefficient is zero (the zero polynomial is the empty map),
//   * keys are distinct (guaranteed by the map),
//   * exponents are integer multiples of 1/2 by construction.
//
// Division and gcd treat a polynomial as a dense polynomial in S = T^(1/2)
// after factoring out the minimal exponent, which is a unit in the Laurent
// ring.  Exact division performs integer long division and checks every
// step, so an inexact division is reported instead of silently rounding.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotwalk/bigint.hpp"

namespace knotwalk {

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Int& constant) {
        if (constant != 0) terms_[0] = constant;
    }
    explicit LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}

    // c * T^(twice_exp / 2)
    static LaurentPoly term_half(long long twice_exp, const Int& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[twice_exp] = c;
        return p;
    }
    // c * T^exp
    static LaurentPoly term(long long exp, const Int& c) {
        return term_half(2 * exp, c);
    }
    static LaurentPoly one() { return LaurentPoly(Int(1)); }
    static LaurentPoly var() { return term(1, 1); }       // T
    static LaurentPoly sqrt_var() { return term_half(1, 1); }  // T^(1/2)

    const std::map<long long, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Int constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }
    // Coefficient of T^(twice_exp / 2); zero when absent.
    Int coeff_half(long long twice_exp) const {
        auto it = terms_.find(twice_exp);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int coeff(long long exp) const { return coeff_half(2 * exp); }

    // True when every exponent is an integer (no T^(k/2) terms with odd k).
    bool integer_grain() const {
        for (const auto& [e2, c] : terms_)
            if (e2 % 2 != 0) return false;
        return true;
    }

    long long min_exp2() const {
        if (terms_.empty()) throw std::logic_error("min_exp2: zero polynomial");
        return terms_.begin()->first;
    }
    long long max_exp2() const {
        if (terms_.empty()) throw std::logic_error("max_exp2: zero polynomial");
        return terms_.rbegin()->first;
    }
    Int leading_coeff() const {
        return terms_.empty() ? Int(0) : terms_.rbegin()->second;
    }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e2, c] : terms_) r.terms_[e2] = -c;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e2, c] : o.terms_) add_term(e2, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e2, c] : o.terms_) add_term(e2, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator*(const LaurentPoly& a, const Int& s) {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e2, c] : a.terms_) r.terms_[e2] = c * s;
        return r;
    }
    friend LaurentPoly operator*(const Int& s, const LaurentPoly& a) { return a * s; }

    // Multiply by the unit T^(twice_exp / 2).
    LaurentPoly shifted_half(long long twice_exp) const {
        LaurentPoly r;
        for (const auto& [e2, c] : terms_) r.terms_[e2 + twice_exp] = c;
        return r;
    }
    LaurentPoly shifted(long long exp) const { return shifted_half(2 * exp); }

    // The substitution T -> T^k (k may be negative; k = -1 mirrors the
    // polynomial, k = 2 doubles every exponent).
    LaurentPoly exponents_scaled(long long k) const {
        if (k == 0) throw std::invalid_argument("exponents_scaled: k must be nonzero");
        LaurentPoly r;
        for (const auto& [e2, c] : terms_) r.terms_[e2 * k] = c;
        return r;
    }
    LaurentPoly mirrored() const { return exponents_scaled(-1); }

    // Invariance under T -> 1/T.
    bool is_symmetric() const { return *this == mirrored(); }

    // gcd of all coefficients, normalized nonnegative; 0 for the zero poly.
    Int content() const {
        Int g = 0;
        for (const auto& [e2, c] : terms_) g = int_gcd(g, c);
        return g;
    }
    LaurentPoly primitive_part() const {
        Int g = content();
        if (g == 0 || g == 1) return *this;
        LaurentPoly r;
        for (const auto& [e2, c] : terms_) r.terms_[e2] = c / g;
        return r;
    }

    // Exact evaluation at a rational point.  Requires integer exponents;
    // t = 0 is rejected when a negative exponent is present.
    Rat evaluate(const Rat& t) const {
        Rat acc = 0;
        for (const auto& [e2, c] : terms_) {
            if (e2 % 2 != 0)
                throw std::domain_error("evaluate: half-integer exponent present");
            acc += Rat(c) * rat_pow(t, e2 / 2);
        }
        return acc;
    }
    // Sum of coefficients (= value at T = 1, valid on the half grid too).
    Int evaluate_at_one() const {
        Int acc = 0;
        for (const auto& [e2, c] : terms_) acc += c;
        return acc;
    }

    // Exact division: returns a/b when b divides a in the Laurent ring,
    // std::nullopt otherwise.  Integer long division in S = T^(1/2); every
    // step must divide exactly.
    static std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::logic_error("try_divide: division by zero polynomial");
        if (a.is_zero()) return LaurentPoly();
        long long amin = a.min_exp2(), bmin = b.min_exp2();
        std::vector<Int> num = a.dense_from(amin);
        const std::vector<Int> den = b.dense_from(bmin);
        const std::size_t dn = den.size();
        if (num.size() < dn) return std::nullopt;
        const Int& lead = den.back();
        std::vector<Int> quot(num.size() - dn + 1);
        for (std::size_t qi = quot.size(); qi-- > 0;) {
            Int top = num[qi + dn - 1];
            if (top == 0) continue;
            if (top % lead != 0) return std::nullopt;
            Int q = top / lead;
            quot[qi] = q;
            for (std::size_t k = 0; k < dn; ++k) num[qi + k] -= q * den[k];
        }
        for (const Int& c : num)
            if (c != 0) return std::nullopt;
        return from_dense(quot, amin - bmin);
    }
    static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
        auto q = try_divide(a, b);
        if (!q) throw std::logic_error("divide_exact: inexact polynomial division");
        return *q;
    }

    // gcd in the Laurent ring, made canonical by normalizing the minimal
    // exponent to 0 (units T^k are quotiented away) and the leading
    // coefficient to be positive.  Contents participate: gcd(2+2T, 4) = 2.
    // Primitive pseudo-remainder sequence over the integers.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() && b.is_zero()) return LaurentPoly();
        if (a.is_zero()) return normalize_unit(b);
        if (b.is_zero()) return normalize_unit(a);
        Int cg = int_gcd(a.content(), b.content());
        std::vector<Int> u = a.primitive_part().dense_from(a.min_exp2());
        std::vector<Int> v = b.primitive_part().dense_from(b.min_exp2());
        if (u.size() < v.size()) std::swap(u, v);
        while (!dense_is_zero(v)) {
            std::vector<Int> r = pseudo_remainder(u, v);
            dense_make_primitive(r);
            u = std::move(v);
            v = std::move(r);
        }
        dense_make_primitive(u);
        if (!u.empty() && u.back() < 0)
            for (Int& c : u) c = -c;
        LaurentPoly g = from_dense(u, 0);
        return g * cg;
    }

private:
    std::map<long long, Int> terms_;

    void add_term(long long e2, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e2, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Dense coefficient vector of a(S) / S^base2, index = doubled exponent
    // minus base2.
    std::vector<Int> dense_from(long long base2) const {
        std::vector<Int> d(static_cast<std::size_t>(max_exp2() - base2) + 1);
        for (const auto& [e2, c] : terms_) d[static_cast<std::size_t>(e2 - base2)] = c;
        return d;
    }
    static LaurentPoly from_dense(const std::vector<Int>& d, long long base2) {
        LaurentPoly p;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] != 0) p.terms_[base2 + static_cast<long long>(i)] = d[i];
        return p;
    }

    static bool dense_is_zero(const std::vector<Int>& d) {
        for (const Int& c : d)
            if (c != 0) return false;
        return true;
    }
    static void dense_trim(std::vector<Int>& d) {
        while (!d.empty() && d.back() == 0) d.pop_back();
    }
    static void dense_make_primitive(std::vector<Int>& d) {
        dense_trim(d);
        Int g = 0;
        for (const Int& c : d) g = int_gcd(g, c);
        if (g > 1)
            for (Int& c : d) c /= g;
    }
    // prem(u, v): lead(v)^(deg u - deg v + 1) * u reduced modulo v.
    static std::vector<Int> pseudo_remainder(std::vector<Int> u, const std::vector<Int>& v) {
        dense_trim(u);
        std::size_t dv = v.size();
        const Int& lv = v.back();
        while (u.size() >= dv && !u.empty()) {
            Int lu = u.back();
            std::size_t shift = u.size() - dv;
            for (Int& c : u) c *= lv;
            for (std::size_t k = 0; k < dv; ++k) u[shift + k] -= lu * v[k];
            dense_trim(u);
        }
        return u;
    }
    static LaurentPoly normalize_unit(const LaurentPoly& p) {
        LaurentPoly r = p.shifted_half(-p.min_exp2());
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }
};

}  // namespace knotwalk
