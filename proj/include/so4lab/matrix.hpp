#pragma once
// Dense matrices over an exact field-like scalar type and exact linear solving.
#include "so4lab/scalar.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace so4lab {

template <class T>
class ExactMatrix {
public:
    ExactMatrix() : r_(0), c_(0) {}
    ExactMatrix(int rows, int cols) : r_(rows), c_(cols), e_(static_cast<size_t>(rows) * cols, T(0)) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }
    ExactMatrix(std::initializer_list<std::initializer_list<T>> rows) : r_(static_cast<int>(rows.size())), c_(0) {
        for (const auto& row : rows) {
            if (c_ == 0) c_ = static_cast<int>(row.size());
            if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& x : row) e_.push_back(x);
        }
    }
    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static ExactMatrix diag(const std::vector<T>& d) {
        ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return e_.at(static_cast<size_t>(i) * c_ + j); }
    const T& operator()(int i, int j) const { return e_.at(static_cast<size_t>(i) * c_ + j); }

    ExactMatrix transpose() const {
        ExactMatrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        ExactMatrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        a.same_shape(b);
        ExactMatrix m = a;
        for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
        return m;
    }
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        a.same_shape(b);
        ExactMatrix m = a;
        for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
        return m;
    }
    friend ExactMatrix operator*(const T& s, const ExactMatrix& a) {
        ExactMatrix m = a;
        for (auto& x : m.e_) x = s * x;
        return m;
    }
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    bool is_square() const { return r_ == c_; }

    T det() const {
        if (!is_square()) throw std::invalid_argument("det of a non-square matrix");
        ExactMatrix m = *this;
        T d(1);
        for (int col = 0; col < c_; ++col) {
            int piv = col;
            while (piv < r_ && is_zero(m(piv, col))) ++piv;
            if (piv == r_) return T(0);
            if (piv != col) {
                m.swap_rows(piv, col);
                d = -d;
            }
            d *= m(col, col);
            T inv = T(1) / m(col, col);
            for (int i = col + 1; i < r_; ++i) {
                if (is_zero(m(i, col))) continue;
                T f = m(i, col) * inv;
                for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
            }
        }
        return d;
    }

    // reduced row echelon form; pivot columns returned through pivots
    ExactMatrix rref(std::vector<int>* pivots = nullptr) const {
        ExactMatrix m = *this;
        std::vector<int> piv;
        int row = 0;
        for (int col = 0; col < c_ && row < r_; ++col) {
            int p = row;
            while (p < r_ && is_zero(m(p, col))) ++p;
            if (p == r_) continue;
            m.swap_rows(p, row);
            T inv = T(1) / m(row, col);
            for (int j = col; j < c_; ++j) m(row, j) = m(row, j) * inv;
            for (int i = 0; i < r_; ++i) {
                if (i == row || is_zero(m(i, col))) continue;
                T f = m(i, col);
                for (int j = col; j < c_; ++j) m(i, j) -= f * m(row, j);
            }
            piv.push_back(col);
            ++row;
        }
        if (pivots) *pivots = piv;
        return m;
    }

    int rank() const {
        std::vector<int> piv;
        rref(&piv);
        return static_cast<int>(piv.size());
    }

    ExactMatrix inverse() const {
        if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
        ExactMatrix aug(r_, 2 * c_);
        for (int i = 0; i < r_; ++i) {
            for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, c_ + i) = T(1);
        }
        std::vector<int> piv;
        ExactMatrix red = aug.rref(&piv);
        if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] >= c_)
            throw std::domain_error("matrix is singular");
        ExactMatrix inv(r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) inv(i, j) = red(i, c_ + j);
        return inv;
    }

    ExactMatrix block(int r0, int c0, int nr, int nc) const {
        ExactMatrix b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    std::vector<T> column(int j) const {
        std::vector<T> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("vector length mismatch");
        std::vector<T> out(r_, T(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (!is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void same_shape(const ExactMatrix& b) const {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    int r_, c_;
    std::vector<T> e_;
};

template <class T>
struct LinearSolution {
    bool consistent = true;
    std::vector<T> particular;               // empty in kernel mode or when inconsistent
    std::vector<std::vector<T>> kernel;      // basis of the null space, RREF-derived
    int kernel_dim() const { return static_cast<int>(kernel.size()); }
};

// Solves A x = b exactly (b null: kernel only). Inconsistency is reported, not thrown.
template <class T>
LinearSolution<T> solve_linear_exact(const ExactMatrix<T>& A, const std::vector<T>* b) {
    int n = A.cols(), m = A.rows();
    ExactMatrix<T> aug(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        if (b) aug(i, n) = b->at(i);
    }
    std::vector<int> piv;
    ExactMatrix<T> red = aug.rref(&piv);
    LinearSolution<T> sol;
    if (!piv.empty() && piv.back() == n) {
        sol.consistent = false;
        return sol;
    }
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(n, T(0));
        v[f] = T(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(static_cast<int>(r), f);
        sol.kernel.push_back(std::move(v));
    }
    if (b) {
        sol.particular.assign(n, T(0));
        for (size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = red(static_cast<int>(r), n);
    }
    return sol;
}

template <class T>
LinearSolution<T> solve_linear_exact(const ExactMatrix<T>& A) {
    return solve_linear_exact<T>(A, nullptr);
}

template <class T>
LinearSolution<T> solve_linear_exact(const ExactMatrix<T>& A, const std::vector<T>& b) {
    return solve_linear_exact<T>(A, &b);
}

}  // namespace so4lab
