#ifndef GALOIS_LINALG_HPP
#define GALOIS_LINALG_HPP

#include <array>
#include <vector>

#include "galois/errors.hpp"
#include "galois/rational.hpp"

namespace galois {

// Small dense exact matrix over a field. Row-major, sized at construction.
// Used for everything exact-linear in the project (ranks, kernels, solves,
// determinants); dimensions never exceed ~16.
template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols), F(0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    F& operator()(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.c_ != y.r_) throw invalid_input("matrix product shape mismatch");
        Matrix z(x.r_, y.c_);
        for (int i = 0; i < x.r_; ++i)
            for (int k = 0; k < x.c_; ++k) {
                if (is_zero(x(i, k))) continue;
                for (int j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix z(x.r_, x.c_);
        for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] + y.a_[i];
        return z;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix z(x.r_, x.c_);
        for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.a_[i] - y.a_[i];
        return z;
    }
    friend Matrix operator*(const F& s, const Matrix& x) {
        Matrix z = x;
        for (auto& v : z.a_) v = s * v;
        return z;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        std::vector<F> out(static_cast<size_t>(r_), F(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    F det() const {
        if (r_ != c_) throw invalid_input("determinant of non-square matrix");
        Matrix m = *this;
        F d = F(1);
        for (int k = 0; k < r_; ++k) {
            int piv = -1;
            for (int i = k; i < r_; ++i)
                if (!is_zero(m(i, k))) { piv = i; break; }
            if (piv < 0) return F(0);
            if (piv != k) {
                m.swap_rows(piv, k);
                d = -d;
            }
            d *= m(k, k);
            F inv = F(1) / m(k, k);
            for (int i = k + 1; i < r_; ++i) {
                F f = m(i, k) * inv;
                if (is_zero(f)) continue;
                for (int j = k; j < r_; ++j) m(i, j) -= f * m(k, j);
            }
        }
        return d;
    }

    int rank() const {
        Matrix m = *this;
        int rk = 0;
        for (int col = 0; col < c_ && rk < r_; ++col) {
            int piv = -1;
            for (int i = rk; i < r_; ++i)
                if (!is_zero(m(i, col))) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(piv, rk);
            F inv = F(1) / m(rk, col);
            for (int i = rk + 1; i < r_; ++i) {
                F f = m(i, col) * inv;
                if (is_zero(f)) continue;
                for (int j = col; j < c_; ++j) m(i, j) -= f * m(rk, j);
            }
            ++rk;
        }
        return rk;
    }

    // Basis of the right kernel {v : Mv = 0}.
    std::vector<std::vector<F>> kernel() const {
        Matrix m = *this;
        std::vector<int> pivot_col;
        int rk = 0;
        for (int col = 0; col < c_ && rk < r_; ++col) {
            int piv = -1;
            for (int i = rk; i < r_; ++i)
                if (!is_zero(m(i, col))) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(piv, rk);
            F inv = F(1) / m(rk, col);
            for (int j = col; j < c_; ++j) m(rk, j) = inv * m(rk, j);
            for (int i = 0; i < r_; ++i) {
                if (i == rk || is_zero(m(i, col))) continue;
                F f = m(i, col);
                for (int j = col; j < c_; ++j) m(i, j) -= f * m(rk, j);
            }
            pivot_col.push_back(col);
            ++rk;
        }
        std::vector<bool> is_pivot(static_cast<size_t>(c_), false);
        for (int pc : pivot_col) is_pivot[static_cast<size_t>(pc)] = true;
        std::vector<std::vector<F>> basis;
        for (int free = 0; free < c_; ++free) {
            if (is_pivot[static_cast<size_t>(free)]) continue;
            std::vector<F> v(static_cast<size_t>(c_), F(0));
            v[static_cast<size_t>(free)] = F(1);
            for (int i = 0; i < rk; ++i) v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = -m(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    Matrix inverse() const {
        if (r_ != c_) throw invalid_input("inverse of non-square matrix");
        Matrix m = *this, inv = identity(r_);
        for (int k = 0; k < r_; ++k) {
            int piv = -1;
            for (int i = k; i < r_; ++i)
                if (!is_zero(m(i, k))) { piv = i; break; }
            if (piv < 0) throw invalid_input("matrix is singular");
            m.swap_rows(piv, k);
            inv.swap_rows(piv, k);
            F s = F(1) / m(k, k);
            for (int j = 0; j < r_; ++j) {
                m(k, j) = s * m(k, j);
                inv(k, j) = s * inv(k, j);
            }
            for (int i = 0; i < r_; ++i) {
                if (i == k || is_zero(m(i, k))) continue;
                F f = m(i, k);
                for (int j = 0; j < r_; ++j) {
                    m(i, j) -= f * m(k, j);
                    inv(i, j) -= f * inv(k, j);
                }
            }
        }
        return inv;
    }

    // Least structure for "solve Mx = b", exact; throws if inconsistent or
    // underdetermined.
    std::vector<F> solve(const std::vector<F>& b) const {
        Matrix aug(r_, c_ + 1);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_) = b[static_cast<size_t>(i)];
        }
        Matrix sys = *this;
        if (sys.rank() != c_ ) throw invalid_input("linear system is underdetermined");
        // reuse kernel-style reduction on the augmented matrix
        Matrix m = aug;
        std::vector<int> pivot_col;
        int rk = 0;
        for (int col = 0; col < c_ && rk < r_; ++col) {
            int piv = -1;
            for (int i = rk; i < r_; ++i)
                if (!is_zero(m(i, col))) { piv = i; break; }
            if (piv < 0) continue;
            m.swap_rows(piv, rk);
            F invp = F(1) / m(rk, col);
            for (int j = col; j <= c_; ++j) m(rk, j) = invp * m(rk, j);
            for (int i = 0; i < r_; ++i) {
                if (i == rk || is_zero(m(i, col))) continue;
                F f = m(i, col);
                for (int j = col; j <= c_; ++j) m(i, j) -= f * m(rk, j);
            }
            pivot_col.push_back(col);
            ++rk;
        }
        for (int i = rk; i < r_; ++i)
            if (!is_zero(m(i, c_))) throw invalid_input("linear system inconsistent");
        std::vector<F> x(static_cast<size_t>(c_), F(0));
        for (int i = 0; i < rk; ++i) x[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] = m(i, c_);
        return x;
    }

private:
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    int r_ = 0, c_ = 0;
    std::vector<F> a_;
};

using RatMatrix = Matrix<Rational>;
using GaussMatrix = Matrix<GaussRational>;

} // namespace galois

#endif
