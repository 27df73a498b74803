#pragma once
/*
 *  Integer matrices, Smith normal form and integer-span membership.
 *
 *  All arithmetic is checked; an intermediate value that leaves int64 raises
 *  std::overflow_error instead of wrapping.
 */

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpbound/errors.hpp"

namespace fpbound::exact {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

namespace detail {

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

// a - q*b
inline Int checked_axpy(Int a, Int q, Int b)
{
    return checked_add(a, checked_mul(-q, b));
}

// floor-free quotient used by the reductions; remainder has the sign of a
inline Int trunc_div(Int a, Int b) { return a / b; }

inline Int gcd(Int a, Int b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

class IntMatrix
{
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, 0)
    {
    }

    IntMatrix(std::initializer_list<std::initializer_list<Int>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (auto const& row : init) {
            if (row.size() != cols_)
                throw DimensionError("ragged IntMatrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(std::size_t n)
    {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, std::vector<IntVector> const& columns)
    {
        IntMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw DimensionError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const
    {
        return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    IntVector column(std::size_t j) const
    {
        IntVector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transposed() const
    {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](Int v) { return v == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[dst] -= q * row[src]
    void sub_row(std::size_t dst, std::size_t src, Int q)
    {
        if (q == 0)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) = detail::checked_axpy((*this)(dst, j), q, (*this)(src, j));
    }

    // col[dst] -= q * col[src]
    void sub_col(std::size_t dst, std::size_t src, Int q)
    {
        if (q == 0)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) = detail::checked_axpy((*this)(i, dst), q, (*this)(i, src));
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) = -(*this)(i, j);
    }

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b)
    {
        if (a.cols_ != b.rows_)
            throw DimensionError("IntMatrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                Int const aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) = detail::checked_add(c(i, j), detail::checked_mul(aik, b(k, j)));
            }
        return c;
    }

    friend IntVector operator*(IntMatrix const& a, IntVector const& v)
    {
        if (a.cols_ != v.size())
            throw DimensionError("IntMatrix-vector shape mismatch");
        IntVector r(a.rows_, 0);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                r[i] = detail::checked_add(r[i], detail::checked_mul(a(i, j), v[j]));
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, IntMatrix const& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Row vector times matrix: (v^T M)^T.
inline IntVector row_times(IntVector const& v, IntMatrix const& m)
{
    if (v.size() != m.rows())
        throw DimensionError("row vector length mismatch");
    IntVector r(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[j] = detail::checked_add(r[j], detail::checked_mul(v[i], m(i, j)));
    }
    return r;
}

/// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ... | dr, all positive.
struct SmithForm
{
    IntVector invariants; // the nonzero diagonal entries, in order
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;

    std::size_t rank() const { return invariants.size(); }
};

inline SmithForm smith_normal_form(IntMatrix const& a)
{
    std::size_t const m = a.rows();
    std::size_t const n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // pivot: smallest nonzero magnitude in the trailing block
        auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    Int const x = std::abs(d(i, j));
                    if (x != 0 && (best == 0 || x < best)) {
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            return best != 0;
        };

        std::size_t pi = 0, pj = 0;
        if (!find_pivot(pi, pj))
            break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            // clear column t
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Int const q = detail::trunc_div(d(i, t), d(t, t));
                d.sub_row(i, t, q);
                u.sub_row(i, t, q);
                if (d(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            // clear row t
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Int const q = detail::trunc_div(d(t, j), d(t, t));
                d.sub_col(j, t, q);
                v.sub_col(j, t, q);
                if (d(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            // divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        // row t += row i, then the loop re-reduces
                        d.sub_row(t, i, -1);
                        u.sub_row(t, i, -1);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm out{{}, std::move(u), std::move(v), std::move(d)};
    for (std::size_t i = 0; i < std::min(m, n); ++i)
        if (out.D(i, i) != 0)
            out.invariants.push_back(out.D(i, i));
    return out;
}

/// Some integer x with S x == v, given the Smith form of S.
inline std::optional<IntVector> solve_integer(SmithForm const& snf, IntVector const& v)
{
    if (v.size() != snf.U.cols())
        throw DimensionError("solve_integer: vector length does not match matrix rows");
    IntVector const w = snf.U * v;
    std::size_t const r = snf.rank();
    IntVector y(snf.V.rows(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < r) {
            if (w[i] % snf.invariants[i] != 0)
                return std::nullopt;
            y[i] = w[i] / snf.invariants[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

/// Some integer x with S x == v, if one exists.
inline std::optional<IntVector> solve_integer(IntMatrix const& s, IntVector const& v)
{
    if (v.size() != s.rows())
        throw DimensionError("solve_integer: vector length does not match matrix rows");
    return solve_integer(smith_normal_form(s), v);
}

/// True iff v lies in the Z-span of the columns of S.
inline bool in_integer_span(IntVector const& v, IntMatrix const& s)
{
    if (v.size() != s.rows())
        throw DimensionError("in_integer_span: vector length does not match matrix rows");
    if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; }))
        return true;
    return solve_integer(s, v).has_value();
}

/// Basis (as columns) of the Z-span of the columns of `a`, in column echelon form.
inline IntMatrix column_basis(IntMatrix const& a)
{
    IntMatrix m = a;
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    std::size_t lead = 0; // next column to receive a pivot
    for (std::size_t i = 0; i < rows && lead < cols; ++i) {
        // Euclid across columns lead..cols-1 on row i
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = lead; j < cols; ++j)
                if (m(i, j) != 0 && (best == cols || std::abs(m(i, j)) < std::abs(m(i, best))))
                    best = j;
            if (best == cols)
                break;
            m.swap_cols(lead, best);
            bool done = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                if (m(i, j) == 0)
                    continue;
                m.sub_col(j, lead, detail::trunc_div(m(i, j), m(i, lead)));
                if (m(i, j) != 0)
                    done = false;
            }
            if (done) {
                if (m(i, lead) < 0)
                    m.negate_col(lead);
                ++lead;
                break;
            }
        }
    }
    IntMatrix basis(rows, lead);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < lead; ++j)
            basis(i, j) = m(i, j);
    return basis;
}

} // namespace fpbound::exact
