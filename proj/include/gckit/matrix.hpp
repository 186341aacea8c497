#ifndef GCKIT_MATRIX_HPP
#define GCKIT_MATRIX_HPP

#include <vector>

#include "gckit/errors.hpp"
#include "gckit/polynomial.hpp"
#include "gckit/scalar.hpp"

namespace gckit {

/// Dense matrix over an exact coefficient ring (Gaussian rationals or
/// polynomials).  Value type; all arithmetic is exact.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0)
            throw DimensionError("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const T& v : e_)
            if (!v.is_zero())
                return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix r(cols_, rows_, fill_like());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (T& v : r.e_)
            v = -v;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k)
            e_[k] += o.e_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k)
            e_[k] -= o.e_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.fill_like());
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero())
                    continue;
                for (int j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix& operator*=(const T& c) {
        for (T& v : e_)
            v = v * c;
        return *this;
    }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }

    Matrix block(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
            throw DimensionError("block out of range");
        Matrix r(nr, nc, fill_like());
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    void set_block(int r0, int c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
            throw DimensionError("set_block out of range");
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(e_.begin() + static_cast<size_t>(i) * cols_,
                         e_.begin() + static_cast<size_t>(i + 1) * cols_);
        return r;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    int rows_, cols_;
    std::vector<T> e_;

    /// A zero element shaped like the stored ones (polynomials carry a
    /// variable count even when zero).
    T fill_like() const { return e_.empty() ? T() : e_.front() - e_.front(); }

    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError("matrix shape mismatch");
    }
};

using GMat = Matrix<Gaussian>;
using PMat = Matrix<Polynomial>;

GMat gmat_identity(int n);
GMat gmat_conj(const GMat& m);
bool gmat_is_real(const GMat& m);
bool gmat_is_skew(const GMat& m);
bool gmat_is_symmetric(const GMat& m);

/// In-place Gauss-Jordan reduction to reduced row echelon form; returns the
/// pivot columns.  Deterministic: pivots are the first nonzero entries in
/// row-major scan order, normalized to 1.
std::vector<int> rref_inplace(GMat& m);
GMat rref(const GMat& m);
int rank(const GMat& m);
Gaussian det(const GMat& m);
GMat inverse_of(const GMat& m);

/// Canonical basis of { x : m x = 0 }, one solution per row, in rref form.
GMat kernel(const GMat& m);

/// One solution x of m x = rhs (columns), or empty if inconsistent.
/// The general solution is x + kernel(m).
bool solve(const GMat& m, const std::vector<Gaussian>& rhs, std::vector<Gaussian>& out);

PMat pmat_zero(int rows, int cols, int nvars);
PMat pmat_identity(int n, int nvars);
PMat pmat_from_gmat(const GMat& m, int nvars);
GMat pmat_eval(const PMat& m, const std::vector<Gaussian>& point);
bool pmat_is_skew(const PMat& m);
Polynomial pmat_det(const PMat& m);
PMat pmat_adjugate(const PMat& m);
PMat pmat_conj(const PMat& m);
bool pmat_is_real(const PMat& m);

} // namespace gckit

#endif
