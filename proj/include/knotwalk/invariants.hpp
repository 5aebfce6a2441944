#pragma once
// Knot invariants computed from an upright long-knot diagram:
//   - the symmetrized Alexander polynomial  Δ(T) = T^{(-φ-w)/2} det(I - A),
//   - the perturbed invariant ρ₁, computed in exact polynomial arithmetic
//     through the adjugate of I - A (primary route) and, as a cross-check,
//     through Green's-function rational arithmetic (definition route),
//   - the Conway polynomial ∇(z), the unique solution of
//     ∇(x - x⁻¹) = Δ(x²),
//   - the reduced invariant ρ₁^red = T/(1-T)² · ρ₁, and
//   - the perturbed Conway invariant δ₁(z), the solution of
//     δ₁(x - x⁻¹) = ρ₁^red(x²).
//
// ρ₁ symmetry and (1-T)² divisibility are conjectural: failures raise
// domain_error so callers can surface them as findings, never silently.

#include <stdexcept>
#include <string>
#include <vector>

#include "knotwalk/diagram.hpp"
#include "knotwalk/laurent.hpp"
#include "knotwalk/matrix.hpp"
#include "knotwalk/ratfun.hpp"

namespace knotwalk {

inline PolyMatrix walk_matrix(const UprightDiagram& d) {
    const std::size_t n = static_cast<std::size_t>(d.strand_count);
    PolyMatrix a = transition_matrix_poly(d);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = (i == j ? LaurentPoly::one() : LaurentPoly()) - a.at(i, j);
    return m;
}

inline LaurentPoly alexander(const UprightDiagram& d) {
    validate(d);
    LaurentPoly det = detail::poly_det(walk_matrix(d));
    LaurentPoly alex = det.shifted_half(-rotation_total(d) - writhe(d));
    if (!alex.integer_grain())
        throw std::logic_error("alexander: half-integer exponents survived to the output");
    return alex;
}

// R₁ of a single crossing from the Green's matrix G = (I - A)⁻¹, with the
// over strand entering at i and leaving at i⁺, the under strand at j, j⁺:
//   R₁(c) = σ( g_ji (g_j⁺j + g_jj⁺ − g_ij) − g_ii (g_jj⁺ − 1) − 1/2 ).
inline RatFun r1_crossing(const RatMatrix& G, const Crossing& c) {
    auto at = [&](int row_label, int col_label) -> const RatFun& {
        if (row_label < 1 || col_label < 1 ||
            static_cast<std::size_t>(row_label) > G.rows() ||
            static_cast<std::size_t>(col_label) > G.cols())
            throw std::invalid_argument("crossing label out of range for the Green's matrix");
        return G.at(static_cast<std::size_t>(row_label) - 1,
                    static_cast<std::size_t>(col_label) - 1);
    };
    const int i = c.over_in, ip = c.over_out, j = c.under_in, jp = c.under_out;
    (void)ip;
    RatFun val = at(j, i) * (at(jp, j) + at(j, jp) - at(i, j)) -
                 at(i, i) * (at(j, jp) - RatFun::one()) - RatFun(Int(1), Int(2));
    if (c.sign < 0) val = -val;
    return val;
}

// Primary route: everything in polynomial arithmetic via g̃ = adj(I - A),
//   ρ₁ = T^{-φ-w} ( Σ_c σ_c X_c  −  det · Σ_k φ_k g̃_kk  −  (w-φ)/2 · det² ),
//   X_c = g̃_ji (g̃_j⁺j + g̃_jj⁺ − g̃_ij) − g̃_ii (g̃_jj⁺ − det).
inline LaurentPoly rho1(const UprightDiagram& d) {
    validate(d);
    const int w = writhe(d);
    const int phi = rotation_total(d);
    if ((w - phi) % 2 != 0)
        throw std::logic_error("rho1: writhe and total rotation have different parity");
    auto [adj, det] = detail::poly_adjugate_det(walk_matrix(d));
    auto g = [&](int row_label, int col_label) -> const LaurentPoly& {
        return adj.at(static_cast<std::size_t>(row_label) - 1,
                      static_cast<std::size_t>(col_label) - 1);
    };
    LaurentPoly crossing_sum;
    for (const Crossing& c : d.crossings) {
        const int i = c.over_in, j = c.under_in, jp = c.under_out;
        LaurentPoly x = g(j, i) * (g(jp, j) + g(j, jp) - g(i, j)) -
                        g(i, i) * (g(j, jp) - det);
        if (c.sign < 0) x = -x;
        crossing_sum += x;
    }
    LaurentPoly rotation_sum;
    for (const auto& [k, phik] : d.rotations) rotation_sum += Int(phik) * g(k, k);
    LaurentPoly total =
        crossing_sum - det * rotation_sum - (Int(w - phi) / 2) * (det * det);
    return total.shifted(-phi - w);
}

// Definition route, retained as an independent cross-check:
//   ρ₁ = Δ² ( Σ_c R₁(c) − Σ_k φ_k (g_kk − 1/2) )
// over Green's-function rational arithmetic; the Δ² factor clears all
// denominators, so the result must come out a genuine Laurent polynomial.
inline LaurentPoly rho1_via_greens(const UprightDiagram& d) {
    validate(d);
    RatMatrix G = mat_inverse(RatMatrix::from_poly(walk_matrix(d)));
    RatFun inner;
    for (const Crossing& c : d.crossings) inner += r1_crossing(G, c);
    const RatFun half(Int(1), Int(2));
    for (const auto& [k, phik] : d.rotations)
        inner -= RatFun(Int(phik)) * (G.at(static_cast<std::size_t>(k) - 1,
                                           static_cast<std::size_t>(k) - 1) -
                                      half);
    const RatFun delta(alexander(d));
    RatFun result = delta * delta * inner;
    return result.as_polynomial();
}

// Descending-degree elimination solving q(x - x⁻¹) = p(x) for a symmetric
// Laurent polynomial p with only even exponents: the top coefficient of p
// must be the z^d coefficient of q, so subtract its (x - x⁻¹)^d image and
// recurse.  Uniqueness is validated as the elimination runs.
namespace detail {

inline LaurentPoly eliminate_to_z(LaurentPoly p, const char* what) {
    if (p != p.mirrored())
        throw std::domain_error(std::string(what) + ": input is not symmetric");
    // z-image of the variable: zpow holds (x - x⁻¹)^d.
    LaurentPoly result;
    const LaurentPoly zimage = LaurentPoly::var() - LaurentPoly::term(-1, 1);
    while (!p.is_zero()) {
        if (p.is_constant()) {
            result += LaurentPoly(p.constant_value());
            break;
        }
        const long long d2 = p.max_exp2();
        if (d2 % 2 != 0)
            throw std::domain_error(std::string(what) +
                                    ": half-integer exponent in substitution input");
        const long long d = d2 / 2;
        if (d % 2 != 0)
            throw std::domain_error(std::string(what) +
                                    ": no polynomial solution (odd top degree)");
        const Int c = p.coeff(d);
        LaurentPoly zpow = LaurentPoly::one();
        for (long long k = 0; k < d; ++k) zpow *= zimage;
        p -= c * zpow;
        result += LaurentPoly::term(d, c);
        if (!p.is_zero() && p.max_exp2() >= d2)
            throw std::logic_error(std::string(what) + ": elimination failed to reduce degree");
    }
    return result;
}

}  // namespace detail

// ∇(z), the unique integer polynomial with ∇(x - x⁻¹) = Δ(x²).  The
// returned LaurentPoly is a polynomial in z (nonnegative exponents).
inline LaurentPoly conway(const LaurentPoly& alex) {
    if (!alex.integer_grain())
        throw std::domain_error("conway: Alexander input must have integer exponents");
    return detail::eliminate_to_z(alex.exponents_scaled(2), "conway");
}

// Substitute z = x - x⁻¹ into a polynomial in z; inverse of the elimination
// above, used to validate conway()/delta1() outputs exactly.
inline LaurentPoly substitute_z(const LaurentPoly& poly_in_z) {
    const LaurentPoly zimage = LaurentPoly::var() - LaurentPoly::term(-1, 1);
    LaurentPoly out;
    for (const auto& [e2, c] : poly_in_z.terms()) {
        if (e2 % 2 != 0 || e2 < 0)
            throw std::invalid_argument("substitute_z: input must be a polynomial in z");
        LaurentPoly zpow = LaurentPoly::one();
        for (long long k = 0; k < e2 / 2; ++k) zpow *= zimage;
        out += c * zpow;
    }
    return out;
}

// ρ₁^red = T/(1-T)² · ρ₁.  Divisibility by (1-T)² and symmetry of both
// input and output are conjectural; violations surface as domain_error.
inline LaurentPoly rho1_reduced(const LaurentPoly& r) {
    if (r.is_zero()) return LaurentPoly();
    if (r != r.mirrored())
        throw std::domain_error("rho1_reduced: input is not symmetric under T -> 1/T");
    const LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::var();
    auto q = LaurentPoly::try_divide(r, one_minus_t * one_minus_t);
    if (!q)
        throw std::domain_error("rho1_reduced: input is not divisible by (1-T)^2");
    LaurentPoly red = q->shifted(1);
    if (red != red.mirrored())
        throw std::domain_error("rho1_reduced: reduced output is not symmetric");
    return red;
}

// δ₁(z), the solution of δ₁(x - x⁻¹) = ρ₁^red(x²).
inline LaurentPoly delta1(const LaurentPoly& rho1_red) {
    return detail::eliminate_to_z(rho1_red.exponents_scaled(2), "delta1");
}

struct KnotInvariants {
    LaurentPoly alexander;
    LaurentPoly conway;  // polynomial in z
    LaurentPoly rho1;
    LaurentPoly rho1_reduced;
    LaurentPoly delta1;  // polynomial in z
};

inline KnotInvariants compute_invariants(const UprightDiagram& d) {
    KnotInvariants inv;
    inv.alexander = alexander(d);
    inv.conway = conway(inv.alexander);
    inv.rho1 = rho1(d);
    inv.rho1_reduced = rho1_reduced(inv.rho1);
    inv.delta1 = delta1(inv.rho1_reduced);
    return inv;
}

inline bool is_positive_diagram(const UprightDiagram& d) {
    for (const Crossing& c : d.crossings)
        if (c.sign < 0) return false;
    return true;
}

struct PositivityReport {
    std::vector<std::pair<long long, Int>> delta1_coeffs;  // (z-exponent, coefficient)
    bool all_nonpositive = true;
    bool claims_positive = false;
    bool conjecture_counterexample = false;
};

inline PositivityReport positivity_report(const UprightDiagram& d, bool claims_positive) {
    PositivityReport rep;
    rep.claims_positive = claims_positive;
    KnotInvariants inv = compute_invariants(d);
    for (const auto& [e2, c] : inv.delta1.terms()) {
        rep.delta1_coeffs.push_back({e2 / 2, c});
        if (c > 0) rep.all_nonpositive = false;
    }
    rep.conjecture_counterexample = claims_positive && !rep.all_nonpositive;
    return rep;
}

}  // namespace knotwalk
