#pragma once

#include "burnside/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

namespace detail {

template <typename T>
T conj_of(const T& x)
{
    if constexpr (requires { conj(x); })
        return conj(x);
    else
        return x;
}

} // namespace detail

/// Dense row-major matrix over an exact field T.
///
/// Element access is 0-based. Value semantics throughout: every operation
/// returns a fresh matrix and never aliases its inputs.
template <typename T>
class BasicMatrix {
public:
    using value_type = T;

    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    BasicMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("entry count does not match matrix shape");
    }
    BasicMatrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static BasicMatrix zeros(std::size_t rows, std::size_t cols) { return BasicMatrix(rows, cols); }
    static BasicMatrix identity(std::size_t n)
    {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static BasicMatrix diagonal(std::span<const T> values)
    {
        BasicMatrix m(values.size(), values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }
    static BasicMatrix diagonal(std::initializer_list<T> values)
    {
        return diagonal(std::span<const T>(values.begin(), values.size()));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const T> entries() const { return data_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    BasicMatrix transpose() const
    {
        BasicMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
    BasicMatrix conj_transpose() const
    {
        BasicMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = detail::conj_of((*this)(r, c));
        return t;
    }

    bool is_hermitian() const { return is_square() && *this == conj_transpose(); }
    bool is_symmetric() const { return is_square() && *this == transpose(); }
    bool is_diagonal() const
    {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r != c && !((*this)(r, c) == T{})) return false;
        return true;
    }
    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == T{}; });
    }

    T trace() const
    {
        require_square("trace");
        T t{};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<T> diagonal_entries() const
    {
        std::vector<T> d;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
        return d;
    }

    BasicMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
    {
        if (row0 + nrows > rows_ || col0 + ncols > cols_)
            throw std::out_of_range("submatrix exceeds matrix bounds");
        BasicMatrix s(nrows, ncols);
        for (std::size_t r = 0; r < nrows; ++r)
            for (std::size_t c = 0; c < ncols; ++c) s(r, c) = (*this)(row0 + r, col0 + c);
        return s;
    }

    void set_block(std::size_t row0, std::size_t col0, const BasicMatrix& block)
    {
        if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
            throw std::out_of_range("block exceeds matrix bounds");
        for (std::size_t r = 0; r < block.rows_; ++r)
            for (std::size_t c = 0; c < block.cols_; ++c) (*this)(row0 + r, col0 + c) = block(r, c);
    }

    BasicMatrix& operator+=(const BasicMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    BasicMatrix& operator-=(const BasicMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    BasicMatrix& operator*=(const T& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
    friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
    friend BasicMatrix operator-(BasicMatrix a)
    {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend BasicMatrix operator*(BasicMatrix a, const T& s) { return a *= s; }
    friend BasicMatrix operator*(const T& s, BasicMatrix a) { return a *= s; }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        BasicMatrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == T{}) continue;
                    p(i, j) += aik * bkj;
                }
            }
        return p;
    }

    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const BasicMatrix& a, const BasicMatrix& b) { return !(a == b); }

private:
    void require_same_shape(const BasicMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
    void require_square(const char* what) const
    {
        if (!is_square()) throw std::invalid_argument(std::string(what) + " needs a square matrix");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<Scalar>;

template <typename T>
BasicMatrix<T> commutator(const BasicMatrix<T>& a, const BasicMatrix<T>& b)
{
    return a * b - b * a;
}

template <typename T>
BasicMatrix<T> kron(const BasicMatrix<T>& a, const BasicMatrix<T>& b)
{
    BasicMatrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == T{}) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
        }
    return k;
}

template <typename T>
BasicMatrix<T> block_diagonal(std::span<const BasicMatrix<T>> blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    BasicMatrix<T> m(rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

/// Number of p-blocks along each side of a pn x pn matrix.
template <typename T>
std::size_t block_count(const BasicMatrix<T>& m, std::size_t p)
{
    if (p == 0 || !m.is_square() || m.rows() % p != 0)
        throw std::invalid_argument("matrix size " + std::to_string(m.rows()) + " is not a multiple of p = "
                                    + std::to_string(p));
    return m.rows() / p;
}

/// The p x p block at block-row i, block-column j (both 0-based).
template <typename T>
BasicMatrix<T> p_block(const BasicMatrix<T>& m, std::size_t p, std::size_t i, std::size_t j)
{
    std::size_t n = block_count(m, p);
    if (i >= n || j >= n) throw std::out_of_range("p-block index out of range");
    return m.submatrix(i * p, j * p, p, p);
}

/// Symmetric relabeling: result(i, j) = m(perm[i], perm[j]), i.e. P^T m P.
template <typename T>
BasicMatrix<T> permute(const BasicMatrix<T>& m, std::span<const std::size_t> perm)
{
    if (!m.is_square() || perm.size() != m.rows()) throw std::invalid_argument("permutation size mismatch");
    BasicMatrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j) out(i, j) = m(perm[i], perm[j]);
    return out;
}

namespace detail {

// Bareiss fraction-free forward elimination with column skipping. Returns the
// rank; `sign` tracks row swaps and `last_pivot` the final leading minor.
template <typename T>
std::size_t bareiss(BasicMatrix<T>& a, int& sign, T& last_pivot)
{
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    T prev(1);
    sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c) == T{}) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(r, k), a(piv, k));
            sign = -sign;
        }
        const T pivot = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const T lead = a(i, c);
            for (std::size_t k = c + 1; k < cols; ++k) {
                T v = pivot * a(i, k);
                if (!(lead == T{})) v -= lead * a(r, k);
                v /= prev;
                a(i, k) = std::move(v);
            }
            a(i, c) = T{};
        }
        prev = pivot;
        ++r;
    }
    last_pivot = prev;
    return r;
}

} // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination.
template <typename T>
std::size_t rank(BasicMatrix<T> m)
{
    int sign = 1;
    T last{};
    return detail::bareiss(m, sign, last);
}

/// Exact determinant; the last Bareiss pivot is the full determinant.
template <typename T>
T determinant(BasicMatrix<T> m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
    if (m.rows() == 0) return T(1);
    int sign = 1;
    T last{};
    if (detail::bareiss(m, sign, last) < m.rows()) return T{};
    return sign < 0 ? T{} - last : last;
}

template <typename T>
bool is_invertible(const BasicMatrix<T>& m)
{
    return m.is_square() && rank(m) == m.rows();
}

/// Row-major flattening into a 1 x (rows*cols) vector.
template <typename T>
std::vector<T> flatten(const BasicMatrix<T>& m)
{
    return {m.entries().begin(), m.entries().end()};
}

} // namespace burnside
