#pragma once

#include "sphorb/exact.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sphorb {

template <class T>
using Vector = std::vector<T>;

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector<T> row(std::size_t r) const { return Vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
    Vector<T> col(std::size_t c) const {
        Vector<T> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Vector<T> apply(const Vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
        Vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(r, k);
                if (is_zero(x)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!is_zero(b(k, c))) m(r, c) += x * b(k, c);
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    template <class F>
    auto map(F f) const {
        Matrix<decltype(f(std::declval<T>()))> m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = f((*this)(r, c));
        return m;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ExactMatrix = Matrix<ExactScalar>;
using IntegerMatrix = Matrix<Integer>;
using ExactVector = Vector<ExactScalar>;
using RationalVector = Vector<Rational>;

template <class T>
struct Echelon {
    Matrix<T> reduced;                // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination. Over ExactScalar a pivot must be a unit of the
/// ring; a column whose nonzero entries are all non-units throws std::domain_error.
template <class T>
Echelon<T> rref(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        bool nonunit = false;
        for (std::size_t i = r; i < rows; ++i) {
            if (is_zero(m(i, c))) continue;
            if (is_invertible(m(i, c))) {
                p = i;
                break;
            }
            nonunit = true;
        }
        if (p == rows) {
            if (nonunit) throw std::domain_error("elimination needs a non-unit pivot");
            continue;
        }
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        T inv = inverse(m(r, c));
        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (!is_zero(m(r, j))) {
                m(r, j) *= inv;
                support.push_back(j);
            }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j : support) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<T> out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(m(i, j));
    return {std::move(out), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class T>
std::vector<Vector<T>> nullspace(const Matrix<T>& m) {
    Echelon<T> e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector<T> v(cols);
        v[f] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!is_zero(e.reduced(r, f))) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with a x = b, if one exists.
template <class T>
std::optional<Vector<T>> solve(const Matrix<T>& a, const Vector<T>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("dimension mismatch in solve");
    Matrix<T> aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    Echelon<T> e = rref(aug);
    Vector<T> x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, a.cols());
    }
    return x;
}

/// Subspace of T^ambient, held as a reduced row echelon basis.
template <class T>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vector<T>>& spanning) : ambient_(ambient) {
        Echelon<T> e = rref(Matrix<T>::from_rows(spanning, ambient));
        basis_ = std::move(e.reduced);
        pivots_ = std::move(e.pivots);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    const Matrix<T>& echelon_basis() const { return basis_; }
    std::vector<Vector<T>> basis() const {
        std::vector<Vector<T>> out;
        for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
        return out;
    }

    /// Residue of v after elimination against the basis; zero iff v lies in the span.
    Vector<T> reduce(Vector<T> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            if (is_zero(v[pivots_[r]])) continue;
            T f = v[pivots_[r]];
            for (std::size_t j = pivots_[r]; j < ambient_; ++j)
                if (!is_zero(basis_(r, j))) v[j] -= f * basis_(r, j);
        }
        return v;
    }

    bool contains(const Vector<T>& v) const {
        for (const auto& x : reduce(v))
            if (!is_zero(x)) return false;
        return true;
    }

    /// Adds v to the span; returns false if it was already there.
    bool insert(const Vector<T>& v) {
        Vector<T> w = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && is_zero(w[p])) ++p;
        if (p == ambient_) return false;
        T inv = inverse(w[p]);
        for (std::size_t j = p; j < ambient_; ++j)
            if (!is_zero(w[j])) w[j] *= inv;
        std::vector<Vector<T>> rows;
        std::vector<std::size_t> pivots;
        bool placed = false;
        for (std::size_t r = 0; r <= pivots_.size(); ++r) {
            if (!placed && (r == pivots_.size() || pivots_[r] > p)) {
                rows.push_back(w);
                pivots.push_back(p);
                placed = true;
            }
            if (r == pivots_.size()) break;
            Vector<T> row = basis_.row(r);
            if (!is_zero(row[p])) {
                T f = row[p];
                for (std::size_t j = p; j < ambient_; ++j)
                    if (!is_zero(w[j])) row[j] -= f * w[j];
            }
            rows.push_back(std::move(row));
            pivots.push_back(pivots_[r]);
        }
        basis_ = Matrix<T>::from_rows(rows, ambient_);
        pivots_ = std::move(pivots);
        return true;
    }

    bool contains(const Subspace& o) const {
        check(o);
        for (std::size_t r = 0; r < o.basis_.rows(); ++r)
            if (!contains(o.basis_.row(r))) return false;
        return true;
    }

    Subspace sum(const Subspace& o) const {
        check(o);
        auto rows = basis();
        auto more = o.basis();
        rows.insert(rows.end(), more.begin(), more.end());
        return Subspace(ambient_, rows);
    }

    Subspace intersection(const Subspace& o) const {
        check(o);
        const std::size_t p = dim(), q = o.dim();
        if (p == 0 || q == 0) return Subspace(ambient_);
        // columns a_1..a_p, -b_1..-b_q; kernel vectors give the common elements
        Matrix<T> m(ambient_, p + q);
        for (std::size_t j = 0; j < ambient_; ++j) {
            for (std::size_t r = 0; r < p; ++r) m(j, r) = basis_(r, j);
            for (std::size_t r = 0; r < q; ++r) m(j, p + r) = -o.basis_(r, j);
        }
        std::vector<Vector<T>> common;
        for (const auto& k : nullspace(m)) {
            Vector<T> v(ambient_);
            for (std::size_t r = 0; r < p; ++r)
                if (!is_zero(k[r]))
                    for (std::size_t j = 0; j < ambient_; ++j)
                        if (!is_zero(basis_(r, j))) v[j] += k[r] * basis_(r, j);
            common.push_back(std::move(v));
        }
        return Subspace(ambient_, common);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }

private:
    void check(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    }

    std::size_t ambient_ = 0;
    Matrix<T> basis_;
    std::vector<std::size_t> pivots_;
};

using RationalSubspace = Subspace<Rational>;
using ExactSubspace = Subspace<ExactScalar>;

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(IntegerMatrix m);
/// Exact determinant; rows are cleared of denominators, then Bareiss.
Rational determinant(const RationalMatrix& m);
int det_sign(const RationalMatrix& m);
/// Sign of the determinant; entries must be rational (no i, no π).
int det_sign_rational(const ExactMatrix& m);

RationalMatrix to_rational(const ExactMatrix& m);
ExactMatrix to_exact(const RationalMatrix& m);

}  // namespace sphorb
