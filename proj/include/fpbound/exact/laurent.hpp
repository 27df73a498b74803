#pragma once
/*
 *  Laurent polynomials over GF(2) in a fixed number of variables, matrices of
 *  them, and rank over the field of fractions.
 *
 *  A polynomial is a finite set of exponent vectors; the coefficient of every
 *  listed monomial is 1.  Terms are kept sorted lexicographically (variable 0
 *  most significant) and unique, so the leading term is terms().back().
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fpbound/errors.hpp"

namespace fpbound::exact {

using Exponent = std::vector<std::int64_t>;

class LaurentPoly
{
public:
    LaurentPoly() = default;

    explicit LaurentPoly(std::size_t nvars)
        : nvars_(nvars)
    {
    }

    /// Builds from a list of monomials; repeated monomials cancel in pairs.
    LaurentPoly(std::size_t nvars, std::vector<Exponent> monomials)
        : nvars_(nvars)
    {
        for (auto const& e : monomials)
            if (e.size() != nvars)
                throw DimensionError("exponent vector length differs from nvars");
        std::sort(monomials.begin(), monomials.end());
        terms_.reserve(monomials.size());
        for (std::size_t i = 0; i < monomials.size();) {
            std::size_t j = i;
            while (j < monomials.size() && monomials[j] == monomials[i])
                ++j;
            if ((j - i) % 2 == 1)
                terms_.push_back(std::move(monomials[i]));
            i = j;
        }
    }

    static LaurentPoly monomial(Exponent e)
    {
        LaurentPoly p(e.size());
        p.terms_.push_back(std::move(e));
        return p;
    }

    static LaurentPoly one(std::size_t nvars) { return monomial(Exponent(nvars, 0)); }

    /// 1 + t^e
    static LaurentPoly one_plus(Exponent const& e)
    {
        return LaurentPoly(e.size(), {Exponent(e.size(), 0), e});
    }

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::vector<Exponent> const& terms() const { return terms_; }
    Exponent const& leading() const { return terms_.back(); }

    bool contains(Exponent const& e) const
    {
        return std::binary_search(terms_.begin(), terms_.end(), e);
    }

    /// Per-variable minimum exponent; zero vector for the zero polynomial.
    Exponent min_exponents() const
    {
        Exponent lo(nvars_, 0);
        if (terms_.empty())
            return lo;
        lo = terms_.front();
        for (auto const& t : terms_)
            for (std::size_t v = 0; v < nvars_; ++v)
                lo[v] = std::min(lo[v], t[v]);
        return lo;
    }

    Exponent max_exponents() const
    {
        Exponent hi(nvars_, 0);
        if (terms_.empty())
            return hi;
        hi = terms_.front();
        for (auto const& t : terms_)
            for (std::size_t v = 0; v < nvars_; ++v)
                hi[v] = std::max(hi[v], t[v]);
        return hi;
    }

    /// Multiplication by the monomial t^by.
    LaurentPoly shifted(Exponent const& by) const
    {
        if (by.size() != nvars_)
            throw DimensionError("shift vector length differs from nvars");
        LaurentPoly r(nvars_);
        r.terms_ = terms_;
        for (auto& t : r.terms_)
            for (std::size_t v = 0; v < nvars_; ++v)
                t[v] += by[v];
        return r; // translation preserves lexicographic order
    }

    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

    friend LaurentPoly operator+(LaurentPoly const& a, LaurentPoly const& b)
    {
        check_same(a, b);
        LaurentPoly r(a.nvars_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::set_symmetric_difference(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                                      b.terms_.end(), std::back_inserter(r.terms_));
        return r;
    }

    LaurentPoly& operator+=(LaurentPoly const& b) { return *this = *this + b; }

    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b)
    {
        check_same(a, b);
        if (a.is_zero() || b.is_zero())
            return LaurentPoly(a.nvars_);
        if (a.is_monomial())
            return b.shifted(a.terms_.front());
        if (b.is_monomial())
            return a.shifted(b.terms_.front());
        if (auto packed = multiply_packed(a, b))
            return std::move(*packed);
        std::map<Exponent, bool> acc;
        Exponent e(a.nvars_);
        for (auto const& x : a.terms_)
            for (auto const& y : b.terms_) {
                for (std::size_t v = 0; v < a.nvars_; ++v)
                    e[v] = x[v] + y[v];
                auto [it, inserted] = acc.try_emplace(e, true);
                if (!inserted)
                    it->second = !it->second;
            }
        LaurentPoly r(a.nvars_);
        for (auto& [k, odd] : acc)
            if (odd)
                r.terms_.push_back(k);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, LaurentPoly const& p)
    {
        if (p.is_zero())
            return os << '0';
        for (std::size_t i = 0; i < p.terms_.size(); ++i) {
            if (i)
                os << " + ";
            bool any = false;
            for (std::size_t v = 0; v < p.nvars_; ++v) {
                if (p.terms_[i][v] == 0)
                    continue;
                os << (any ? "*" : "") << 't' << v;
                if (p.terms_[i][v] != 1)
                    os << '^' << p.terms_[i][v];
                any = true;
            }
            if (!any)
                os << '1';
        }
        return os;
    }

private:
    static void check_same(LaurentPoly const& a, LaurentPoly const& b)
    {
        if (a.nvars_ != b.nvars_)
            throw DimensionError("Laurent polynomials with different nvars");
    }

    // Mixed-radix packing of exponents into one 64-bit key; the numeric order
    // of keys is the lexicographic order of exponent vectors.
    static std::optional<LaurentPoly> multiply_packed(LaurentPoly const& a, LaurentPoly const& b)
    {
        std::size_t const n = a.nvars_;
        Exponent const alo = a.min_exponents(), blo = b.min_exponents();
        Exponent const ahi = a.max_exponents(), bhi = b.max_exponents();
        std::vector<std::uint64_t> radix(n), stride(n);
        unsigned __int128 total = 1;
        for (std::size_t v = 0; v < n; ++v) {
            radix[v] = static_cast<std::uint64_t>((ahi[v] - alo[v]) + (bhi[v] - blo[v]) + 1);
            total *= radix[v];
            if (total > (static_cast<unsigned __int128>(1) << 62))
                return std::nullopt;
        }
        std::uint64_t s = 1;
        for (std::size_t v = n; v-- > 0;) {
            stride[v] = s;
            s *= radix[v];
        }
        auto pack = [&](Exponent const& e, Exponent const& lo) {
            std::uint64_t k = 0;
            for (std::size_t v = 0; v < n; ++v)
                k += static_cast<std::uint64_t>(e[v] - lo[v]) * stride[v];
            return k;
        };
        std::vector<std::uint64_t> ka, kb;
        ka.reserve(a.terms_.size());
        kb.reserve(b.terms_.size());
        for (auto const& t : a.terms_)
            ka.push_back(pack(t, alo));
        for (auto const& t : b.terms_)
            kb.push_back(pack(t, blo));
        std::vector<std::uint64_t> prod;
        prod.reserve(ka.size() * kb.size());
        for (auto x : ka)
            for (auto y : kb)
                prod.push_back(x + y);
        std::sort(prod.begin(), prod.end());
        LaurentPoly r(n);
        for (std::size_t i = 0; i < prod.size();) {
            std::size_t j = i;
            while (j < prod.size() && prod[j] == prod[i])
                ++j;
            if ((j - i) % 2 == 1) {
                Exponent e(n);
                std::uint64_t k = prod[i];
                for (std::size_t v = 0; v < n; ++v) {
                    e[v] = static_cast<std::int64_t>(k / stride[v]) + alo[v] + blo[v];
                    k %= stride[v];
                }
                r.terms_.push_back(std::move(e));
            }
            i = j;
        }
        return r;
    }

    std::size_t nvars_ = 0;
    std::vector<Exponent> terms_;
};

inline LaurentPoly lp_add(LaurentPoly const& a, LaurentPoly const& b) { return a + b; }
inline LaurentPoly lp_mul(LaurentPoly const& a, LaurentPoly const& b) { return a * b; }

/// Exact quotient a / b in the Laurent ring, or nullopt when b does not divide a.
inline std::optional<LaurentPoly> divide_exact(LaurentPoly const& a, LaurentPoly const& b)
{
    if (a.nvars() != b.nvars())
        throw DimensionError("Laurent polynomials with different nvars");
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    std::size_t const n = a.nvars();
    if (a.is_zero())
        return LaurentPoly(n);
    if (b.is_monomial()) {
        Exponent neg = b.leading();
        for (auto& x : neg)
            x = -x;
        return a.shifted(neg);
    }
    // Newton polytope of a is that of q plus that of b: bounds every quotient term
    Exponent const alo = a.min_exponents(), ahi = a.max_exponents();
    Exponent const blo = b.min_exponents(), bhi = b.max_exponents();
    Exponent qlo(n), qhi(n);
    for (std::size_t v = 0; v < n; ++v) {
        qlo[v] = alo[v] - blo[v];
        qhi[v] = ahi[v] - bhi[v];
        if (qlo[v] > qhi[v])
            return std::nullopt;
    }
    LaurentPoly r = a;
    std::vector<Exponent> quotient;
    Exponent const& lb = b.leading();
    while (!r.is_zero()) {
        Exponent m(n);
        for (std::size_t v = 0; v < n; ++v) {
            m[v] = r.leading()[v] - lb[v];
            if (m[v] < qlo[v] || m[v] > qhi[v])
                return std::nullopt;
        }
        r += b.shifted(m);
        quotient.push_back(std::move(m));
    }
    return LaurentPoly(n, std::move(quotient));
}

class LaurentMatrix
{
public:
    LaurentMatrix() = default;

    LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows)
        , cols_(cols)
        , nvars_(nvars)
        , data_(rows * cols, LaurentPoly(nvars))
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nvars() const { return nvars_; }

    LaurentPoly const& operator()(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    void set(std::size_t i, std::size_t j, LaurentPoly p)
    {
        if (p.nvars() != nvars_)
            throw DimensionError("entry nvars differs from matrix nvars");
        data_.at(i * cols_ + j) = std::move(p);
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](LaurentPoly const& p) { return p.is_zero(); });
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap(data_[i * cols_ + a], data_[i * cols_ + b]);
    }

    /// Multiplies row i by the monomial t^by.
    void shift_row(std::size_t i, Exponent const& by)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            data_[i * cols_ + j] = data_[i * cols_ + j].shifted(by);
    }

    friend bool operator==(LaurentMatrix const&, LaurentMatrix const&) = default;

    friend std::ostream& operator<<(std::ostream& os, LaurentMatrix const& m)
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
    std::size_t nvars_ = 0;
    std::vector<LaurentPoly> data_;
};

/// Sends the variables listed in `kill` to 1 and leaves the others alone.
/// The result keeps the same nvars (killed coordinates become 0).
inline LaurentMatrix specialize(LaurentMatrix const& m, std::set<std::size_t> const& kill)
{
    for (auto v : kill)
        if (v >= m.nvars())
            throw std::out_of_range("specialize: variable index " + std::to_string(v) + " out of range");
    LaurentMatrix out(m.rows(), m.cols(), m.nvars());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::vector<Exponent> terms = m(i, j).terms();
            for (auto& t : terms)
                for (auto v : kill)
                    t[v] = 0;
            out.set(i, j, LaurentPoly(m.nvars(), std::move(terms)));
        }
    return out;
}

namespace detail {

// GF(2^64) = GF(2)[x] / (x^64 + x^4 + x^3 + x + 1)
inline std::uint64_t gf64_mul(std::uint64_t a, std::uint64_t b)
{
    // carry-less product, four bits of b at a time
    std::uint64_t tlo[16], thi[16];
    tlo[0] = thi[0] = 0;
    for (int k = 1; k < 16; k <<= 1) {
        int const s = k == 1 ? 0 : k == 2 ? 1 : k == 4 ? 2 : 3;
        std::uint64_t const lo = a << s, hi = s ? a >> (64 - s) : 0;
        for (int j = 0; j < k; ++j) {
            tlo[k + j] = tlo[j] ^ lo;
            thi[k + j] = thi[j] ^ hi;
        }
    }
    std::uint64_t hi = 0, lo = 0;
    for (int i = 60; i >= 0; i -= 4) {
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        unsigned const nib = static_cast<unsigned>(b >> i) & 15u;
        lo ^= tlo[nib];
        hi ^= thi[nib];
    }
    // fold the high word down twice; x^64 == x^4 + x^3 + x + 1
    for (int round = 0; round < 2; ++round) {
        std::uint64_t const h = hi;
        hi = (h >> 60) ^ (h >> 61) ^ (h >> 63);
        lo ^= h ^ (h << 1) ^ (h << 3) ^ (h << 4);
    }
    return lo;
}

inline std::uint64_t gf64_pow(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1u)
            r = gf64_mul(r, a);
        a = gf64_mul(a, a);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t gf64_inv(std::uint64_t a) { return gf64_pow(a, ~std::uint64_t{0} - 1); }

inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Each row multiplied by a monomial so every exponent is nonnegative.
inline LaurentMatrix clear_denominators(LaurentMatrix m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Exponent lo;
        bool any = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero())
                continue;
            Exponent const e = m(i, j).min_exponents();
            if (!any)
                lo = e;
            else
                for (std::size_t v = 0; v < m.nvars(); ++v)
                    lo[v] = std::min(lo[v], e[v]);
            any = true;
        }
        if (!any)
            continue;
        for (auto& x : lo)
            x = -x;
        m.shift_row(i, lo);
    }
    return m;
}

} // namespace detail

/// Rank over the fraction field by fraction-free (Bareiss) elimination with
/// full pivoting.  Every intermediate entry is a minor of the permuted input,
/// so each division is exact.
inline std::size_t rank_bareiss(LaurentMatrix const& input)
{
    LaurentMatrix m = detail::clear_denominators(input);
    std::size_t const rows = m.rows(), cols = m.cols(), n = m.nvars();
    LaurentPoly prev = LaurentPoly::one(n);
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!m(i, j).is_zero() && (pi == rows || m(i, j).size() < m(pi, pj).size())) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        LaurentPoly const pivot = m(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            LaurentPoly const lead = m(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                LaurentPoly num = pivot * m(i, j) + lead * m(k, j);
                auto q = divide_exact(num, prev);
                if (!q)
                    throw std::logic_error("Bareiss step produced an inexact division");
                m.set(i, j, std::move(*q));
            }
            m.set(i, k, LaurentPoly(n));
        }
        prev = pivot;
    }
    return k;
}

/// Lower bound on the fraction-field rank: the rank of the matrix evaluated
/// at a pseudo-random point of GF(2^64).  A nonzero minor at the point is a
/// nonzero minor of the polynomial matrix, so the bound is always valid.
inline std::size_t rank_at_random_point(LaurentMatrix const& input, std::uint64_t seed = 0x5eed)
{
    LaurentMatrix const m = detail::clear_denominators(input);
    std::size_t const rows = m.rows(), cols = m.cols(), n = m.nvars();
    std::vector<std::uint64_t> point(n);
    for (auto& x : point) {
        do
            x = detail::splitmix64(seed);
        while (x == 0);
    }
    std::vector<std::uint64_t> a(rows * cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::uint64_t acc = 0;
            for (auto const& t : m(i, j).terms()) {
                std::uint64_t mono = 1;
                for (std::size_t v = 0; v < n; ++v)
                    mono = detail::gf64_mul(mono, detail::gf64_pow(point[v], static_cast<std::uint64_t>(t[v])));
                acc ^= mono;
            }
            a[i * cols + j] = acc;
        }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + c] == 0)
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(a[p * cols + j], a[rank * cols + j]);
        // row_i <- pivot * row_i + lead_i * row_r (characteristic 2)
        std::uint64_t const pivot = a[rank * cols + c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            std::uint64_t const lead = a[i * cols + c];
            if (lead == 0)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = detail::gf64_mul(pivot, a[i * cols + j]) ^ detail::gf64_mul(lead, a[rank * cols + j]);
        }
        ++rank;
    }
    return rank;
}

/// Rank over the field of fractions of GF(2)[t_1^±, ..., t_n^±].
///
/// A full-rank evaluation certifies the answer on its own; anything short of
/// full rank is settled by Bareiss elimination.
inline std::size_t rank_fraction_field(LaurentMatrix const& m)
{
    std::size_t const cap = std::min(m.rows(), m.cols());
    if (cap == 0)
        return 0;
    if (rank_at_random_point(m) == cap)
        return cap;
    return rank_bareiss(m);
}

} // namespace fpbound::exact
