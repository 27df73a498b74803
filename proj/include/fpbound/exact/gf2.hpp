#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "fpbound/errors.hpp"

namespace fpbound::exact {

using Gf2Vector = std::vector<std::uint8_t>; // entries 0 or 1

inline std::uint8_t gf2_dot(Gf2Vector const& a, Gf2Vector const& b)
{
    if (a.size() != b.size())
        throw DimensionError("gf2_dot: length mismatch");
    std::uint8_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s ^= static_cast<std::uint8_t>(a[i] & b[i] & 1u);
    return s;
}

class Gf2Matrix
{
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Gf2Vector row(std::size_t i) const
    {
        return Gf2Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    friend bool operator==(Gf2Matrix const&, Gf2Matrix const&) = default;

    friend std::ostream& operator<<(std::ostream& os, Gf2Matrix const& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? ", " : "") << int(m(i, j));
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

/// Some x with A x == b over GF(2), or nullopt.
inline std::optional<Gf2Vector> gf2_solve(Gf2Matrix a, Gf2Vector b)
{
    if (b.size() != a.rows())
        throw DimensionError("gf2_solve: right-hand side length mismatch");
    std::size_t const rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && !a(p, c))
            ++p;
        if (p == rows)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            std::swap(a(p, j), a(r, j));
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a(i, c)) {
                for (std::size_t j = 0; j < cols; ++j)
                    a(i, j) ^= a(r, j);
                b[i] ^= b[r];
            }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i])
            return std::nullopt;
    Gf2Vector x(cols, 0);
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = b[i];
    return x;
}

} // namespace fpbound::exact
