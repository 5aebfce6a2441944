#pragma once
// Dense matrices over the integer Laurent ring and over rational functions,
// with exact determinant / adjugate / inverse.
//
// Strategy.  Rational-function matrices are lifted row by row to integer
// Laurent matrices (row i times the lcm of its denominators), so the heavy
// elimination always runs fraction-free over the integers:
//
//   * determinant: cofactor expansion up to 4x4 (cheap, and it keeps an
//     independent second code path alive); Bareiss one-step fraction-free
//     elimination with row pivoting from 5x5 up.  Every Bareiss division is
//     exact by construction and checked at runtime.
//   * adjugate: one-step fraction-free Gauss-Jordan on [N | I].  On
//     completion the left block must be d*I with d equal to the final
//     pivot; that equality is asserted, and the right block times the
//     recorded row-swap sign is adj(N).  A singular N falls back to the
//     (n-1)-minor definition, which the elimination route cannot cover.
//
// For the lift M = D^{-1} N with D = diag(d_i):
//   det(M) = det(N) / prod_i d_i,
//   adj(M)_{ij} = adj(N)_{ij} * d_j / prod_k d_k.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "knotwalk/laurent.hpp"
#include "knotwalk/ratfun.hpp"

namespace knotwalk {

class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static PolyMatrix identity(std::size_t n) {
        PolyMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        PolyMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const LaurentPoly& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const LaurentPoly& ykj = y.at(k, j);
                    if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
                }
            }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<LaurentPoly> a_;
};

class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFun::one();
        return m;
    }
    static RatMatrix from_poly(const PolyMatrix& p) {
        RatMatrix m(p.rows(), p.cols());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) m.at(i, j) = RatFun(p.at(i, j));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatFun& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const RatFun& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    friend RatMatrix operator+(const RatMatrix& x, const RatMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        RatMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend RatMatrix operator-(const RatMatrix& x, const RatMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        RatMatrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        RatMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const RatFun& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const RatFun& ykj = y.at(k, j);
                    if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
                }
            }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<RatFun> a_;
};

namespace detail {

// Bareiss fraction-free determinant with row pivoting.
inline LaurentPoly poly_det_bareiss(PolyMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly::one();
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m.at(r, k).is_zero()) ++r;
            if (r == n) return LaurentPoly();
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
            sign = -sign;
        }
        const LaurentPoly pivot = m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = LaurentPoly::divide_exact(
                    pivot * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
        prev = pivot;
    }
    LaurentPoly d = m.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

inline LaurentPoly poly_det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return m.at(0, 0);
    LaurentPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        LaurentPoly term = m.at(0, j) * poly_det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline LaurentPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    return m.rows() <= 4 ? poly_det_cofactor(m) : poly_det_bareiss(m);
}

// Adjugate by the (n-1)-minor definition: adj(m)_{ji} = (-1)^{i+j} M_{ij}.
inline PolyMatrix poly_adjugate_minors(const PolyMatrix& m) {
    const std::size_t n = m.rows();
    PolyMatrix adj(n, n);
    if (n == 0) return adj;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            LaurentPoly d = poly_det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

// Adjugate and determinant in one fraction-free Gauss-Jordan pass over
// [m | I]; falls back to minors when a pivot column dies (singular m).
inline std::pair<PolyMatrix, LaurentPoly> poly_adjugate_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {PolyMatrix(0, 0), LaurentPoly::one()};

    PolyMatrix w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
        w.at(i, n + i) = LaurentPoly::one();
    }
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t k = 0; k < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k).is_zero()) ++r;
            if (r == n) return {poly_adjugate_minors(m), poly_det(m)};
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        const LaurentPoly pivot = w.at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const LaurentPoly head = w.at(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                w.at(i, j) =
                    LaurentPoly::divide_exact(pivot * w.at(i, j) - head * w.at(k, j), prev);
            }
            w.at(i, k) = LaurentPoly();
        }
        prev = pivot;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (w.at(i, i) != prev)
            throw std::logic_error("fraction-free Gauss-Jordan lost the common-pivot invariant");
    PolyMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj.at(i, j) = sign < 0 ? -w.at(i, n + j) : w.at(i, n + j);
    LaurentPoly det = sign < 0 ? -prev : prev;
    return {adj, det};
}

struct RowLift {
    PolyMatrix numerators;           // N with M = diag(1/d_i) * N
    std::vector<LaurentPoly> row_den;  // d_i
    LaurentPoly den_product;           // prod_i d_i
};

inline LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    return LaurentPoly::divide_exact(a * b, LaurentPoly::gcd(a, b));
}

inline RowLift row_lift(const RatMatrix& m) {
    RowLift lift;
    lift.numerators = PolyMatrix(m.rows(), m.cols());
    lift.row_den.assign(m.rows(), LaurentPoly::one());
    lift.den_product = LaurentPoly::one();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        LaurentPoly d = LaurentPoly::one();
        for (std::size_t j = 0; j < m.cols(); ++j) d = poly_lcm(d, m.at(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            lift.numerators.at(i, j) =
                m.at(i, j).num() * LaurentPoly::divide_exact(d, m.at(i, j).den());
        lift.row_den[i] = d;
        lift.den_product = lift.den_product * d;
    }
    return lift;
}

inline RatFun rat_det_cofactor(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return RatFun::one();
    if (n == 1) return m.at(0, 0);
    RatFun acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        RatFun term = m.at(0, j) * rat_det_cofactor(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace detail

inline RatFun mat_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() <= 4) return detail::rat_det_cofactor(m);
    detail::RowLift lift = detail::row_lift(m);
    return RatFun(detail::poly_det_bareiss(lift.numerators), lift.den_product);
}

inline RatMatrix mat_adjugate(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    detail::RowLift lift = detail::row_lift(m);
    auto [adj_n, det_n] = detail::poly_adjugate_det(lift.numerators);
    RatMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj.at(i, j) = RatFun(adj_n.at(i, j) * lift.row_den[j], lift.den_product);
    return adj;
}

inline RatMatrix mat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    detail::RowLift lift = detail::row_lift(m);
    auto [adj_n, det_n] = detail::poly_adjugate_det(lift.numerators);
    if (det_n.is_zero()) throw std::domain_error("inverse of a singular matrix");
    // M^{-1} = N^{-1} D = adj(N) D / det(N).
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = RatFun(adj_n.at(i, j) * lift.row_den[j], det_n);
    return inv;
}

}  // namespace knotwalk
