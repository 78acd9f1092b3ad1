#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qwz/rational.hpp"

namespace qwz {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    Rational trace() const;
    Rational row_sum(std::size_t r) const;
    bool is_zero() const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& scalar);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Square integer matrix used by the fraction-free kernels.
struct IntegerMatrix {
    std::size_t n = 0;
    std::vector<Integer> data;

    explicit IntegerMatrix(std::size_t size = 0) : n(size), data(size * size) {}
    Integer& operator()(std::size_t r, std::size_t c) { return data[r * n + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * n + c]; }
};

/// Row-wise common-denominator lift: row r of the result is
/// scale[r] * M[r], with scale[r] the lcm of that row's denominators.
struct IntegerLift {
    IntegerMatrix matrix;
    std::vector<Integer> row_scale;
};
IntegerLift lift_rows(const RationalMatrix& m);

/// Product of integer matrices (used for exact matrix powers).
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

}  // namespace qwz
