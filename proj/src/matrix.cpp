#include "qwz/matrix.hpp"

#include <stdexcept>

namespace qwz {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

Rational RationalMatrix::trace() const {
    if (!square()) throw std::invalid_argument("trace of a non-square matrix");
    Rational sum = 0;
    for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
    return sum;
}

Rational RationalMatrix::row_sum(std::size_t r) const {
    Rational sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c);
    return sum;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix dimension mismatch in addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix dimension mismatch in subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntegerLift lift_rows(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("integer lift requires a square matrix");
    const std::size_t n = m.rows();
    IntegerLift out{IntegerMatrix(n), std::vector<Integer>(n, 1)};
    for (std::size_t r = 0; r < n; ++r) {
        Integer scale = 1;
        for (std::size_t c = 0; c < n; ++c) scale = lcm(scale, m(r, c).get_den());
        out.row_scale[r] = scale;
        for (std::size_t c = 0; c < n; ++c) {
            const Rational& x = m(r, c);
            out.matrix(r, c) = x.get_num() * (scale / x.get_den());
        }
    }
    return out;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.n != b.n) throw std::invalid_argument("matrix dimension mismatch in product");
    const std::size_t n = a.n;
    IntegerMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(b(k, j)) != 0) mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    }
    return out;
}

}  // namespace qwz
