#pragma once

#include "braidcover/bigint.hpp"
#include "braidcover/errors.hpp"
#include "braidcover/laurent.hpp"

#include <utility>
#include <vector>

namespace braidcover {

// Ring operations needed by Matrix: exact arithmetic in an integral domain
// with decidable exact division.
template <class R>
struct RingOps;

template <>
struct RingOps<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static bool is_zero(const BigInt& x) { return x == 0; }
    static BigInt divide_exact(const BigInt& a, const BigInt& b) {
        if (b == 0) throw DomainError("integer division by zero");
        if (a % b != 0) throw InternalError("non-exact integer division in elimination");
        return a / b;
    }
};

template <>
struct RingOps<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly::zero(); }
    static LaurentPoly one() { return LaurentPoly::one(); }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
        return a.divide_exact(b);
    }
};

// Dense matrix over an exact ring. Row-major, 0-based indexing.
template <class R>
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, RingOps<R>::zero()) {
        if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = RingOps<R>::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const R& aik = at(i, k);
                if (RingOps<R>::is_zero(aik)) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (RingOps<R>::is_zero(o.at(k, j))) continue;
                    r.at(i, j) += aik * o.at(k, j);
                }
            }
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference dimension mismatch");
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum dimension mismatch");
        Matrix r(*this);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
        return r;
    }

    // Non-negative power by repeated squaring.
    Matrix pow(long long k) const {
        if (rows_ != cols_) throw DomainError("power of non-square matrix");
        if (k < 0) throw DomainError("negative matrix power");
        Matrix result = identity(rows_);
        Matrix base(*this);
        while (k > 0) {
            if (k & 1) result = result * base;
            if (k >>= 1) base = base * base;
        }
        return result;
    }

    // Fraction-free Gaussian elimination (Bareiss). Exact over any integral
    // domain: every division is by the previous pivot and is exact by the
    // Sylvester determinant identity.
    R det_bareiss() const {
        if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
        int n = rows_;
        if (n == 0) return RingOps<R>::one();
        Matrix w(*this);
        R prev = RingOps<R>::one();
        bool negate = false;
        for (int k = 0; k + 1 < n; ++k) {
            int p = k;
            while (p < n && RingOps<R>::is_zero(w.at(p, k))) ++p;
            if (p == n) return RingOps<R>::zero();
            if (p != k) {
                for (int j = k; j < n; ++j) std::swap(w.at(p, j), w.at(k, j));
                negate = !negate;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j)
                    w.at(i, j) = RingOps<R>::divide_exact(
                        w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
                w.at(i, k) = RingOps<R>::zero();
            }
            prev = w.at(k, k);
        }
        R d = w.at(n - 1, n - 1);
        return negate ? RingOps<R>::zero() - d : d;
    }

    // Cofactor expansion along the first row. Exponential; kept as an oracle
    // and as the default for small Laurent matrices where it beats Bareiss.
    R det_cofactor() const {
        if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
        int n = rows_;
        if (n == 0) return RingOps<R>::one();
        if (n == 1) return at(0, 0);
        R d = RingOps<R>::zero();
        for (int j = 0; j < n; ++j) {
            if (RingOps<R>::is_zero(at(0, j))) continue;
            Matrix minor(n - 1, n - 1);
            for (int i = 1; i < n; ++i)
                for (int c = 0, mc = 0; c < n; ++c)
                    if (c != j) minor.at(i - 1, mc++) = at(i, c);
            R term = at(0, j) * minor.det_cofactor();
            if (j % 2 == 0)
                d = d + term;
            else
                d = d - term;
        }
        return d;
    }

    R det() const;

private:
    int rows_;
    int cols_;
    std::vector<R> a_;
};

using IntMatrix = Matrix<BigInt>;
using PolyMatrix = Matrix<LaurentPoly>;

template <>
inline BigInt Matrix<BigInt>::det() const {
    return det_bareiss();
}

// Polynomial entries make Bareiss minors expensive at small sizes; cofactor
// expansion wins up to 4x4.
template <>
inline LaurentPoly Matrix<LaurentPoly>::det() const {
    if (rows_ != cols_) throw DomainError("determinant of non-square matrix");
    return rows_ <= 4 ? det_cofactor() : det_bareiss();
}

// Smith normal form data: unimodular u (rows x rows) and v (cols x cols) with
// u * m * v diagonal, the diagonal reported as a vector of length
// min(rows, cols), entries non-negative with d1 | d2 | ... .
struct SmithResult {
    std::vector<BigInt> diagonal;
    IntMatrix u;
    IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

} // namespace braidcover
