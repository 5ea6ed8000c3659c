#pragma once
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/ring/concepts.hpp"

namespace cgs {

template <Ring R>
using Vec = std::vector<R>;

// Dense row-major matrix over a ring instance.
template <Ring R>
class Matrix {
public:
    using value_type = R;

    Matrix() = default;
    Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(size_t rows, size_t cols, std::vector<R> entries) : r_(rows), c_(cols), a_(std::move(entries)) {
        if (a_.size() != r_ * c_) throw DimensionMismatch("entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<long>> rows) : r_(rows.size()), c_(rows.size() ? rows.begin()->size() : 0) {
        for (auto& row : rows) {
            if (row.size() != c_) throw DimensionMismatch("ragged initializer");
            for (long v : row) a_.emplace_back(v);
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }
    // Elementary matrix E_{i,j}.
    static Matrix unit(size_t rows, size_t cols, size_t i, size_t j) {
        Matrix m(rows, cols);
        m(i, j) = R(1);
        return m;
    }
    static Matrix diagonal(const std::vector<R>& d) {
        Matrix m(d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<R>>& cols, size_t rows) {
        Matrix m(rows, cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<R>>& rows, size_t cols) {
        Matrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }
    R& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const R& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
    const std::vector<R>& entries() const { return a_; }

    Vec<R> row(size_t i) const { return Vec<R>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec<R> column(size_t j) const {
        Vec<R> v(r_);
        for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_column(size_t j, const Vec<R>& v) {
        for (size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.same_shape(b);
        Matrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
        return m;
    }
    Matrix operator-() const {
        Matrix m(r_, c_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw DimensionMismatch("inner dimensions differ in matrix product");
        Matrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const R& x = a(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < b.c_; ++j) {
                    const R& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }
    friend Matrix operator*(const R& s, const Matrix& a) {
        Matrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = s * a.a_[k];
        return m;
    }
    friend Vec<R> operator*(const Matrix& a, const Vec<R>& v) {
        if (a.c_ != v.size()) throw DimensionMismatch("matrix-vector size mismatch");
        Vec<R> out(a.r_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t j = 0; j < a.c_; ++j)
                if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
        return out;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }
    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    R trace() const {
        R t;
        for (size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
        return t;
    }
    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_identity() const { return square() && *this == identity(r_); }

    template <class F>
    auto map(F&& f) const {
        using S = std::decay_t<decltype(f(a_[0]))>;
        Matrix<S> m(r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
        Matrix m(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < r_; ++i) {
            os << (i ? "; " : "");
            for (size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
        }
        os << "]";
        return os.str();
    }

private:
    void same_shape(const Matrix& b) const {
        if (r_ != b.r_ || c_ != b.c_) throw DimensionMismatch("matrix shapes differ");
    }

    size_t r_ = 0, c_ = 0;
    std::vector<R> a_;
};

template <Ring R>
Matrix<R> commutator(const Matrix<R>& x, const Matrix<R>& y) {
    return x * y - y * x;
}

} // namespace cgs

template <cgs::Ring R>
struct std::hash<cgs::Matrix<R>> {
    size_t operator()(const cgs::Matrix<R>& m) const {
        size_t h = m.rows() * 1315423911u + m.cols();
        for (auto& x : m.entries()) h = h * 1099511628211ull ^ std::hash<R>{}(x);
        return h;
    }
};
