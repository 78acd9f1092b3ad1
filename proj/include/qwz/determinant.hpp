#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qwz/matrix.hpp"
#include "qwz/polynomial.hpp"

namespace qwz {

/// Square matrix whose entries are polynomials in one variable.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), data_(n * n) {}

    /// constant + linear*x + quadratic*x^2, entrywise.
    static PolyMatrix from_coefficients(const std::vector<RationalMatrix>& ascending);

    std::size_t size() const noexcept { return n_; }
    RatPolynomial& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const RatPolynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    RationalMatrix evaluate(const Rational& x) const;

private:
    std::size_t n_ = 0;
    std::vector<RatPolynomial> data_;
};

/// Determinant of an integer matrix by fraction-free (Bareiss)
/// elimination. Zero pivots are handled by row, then column, swaps.
Integer bareiss_det(IntegerMatrix m);

/// Exact determinant of a square rational matrix.
Rational det_exact(const RationalMatrix& m);

/// The unique polynomial of degree <= nodes.size()-1 through the points
/// (nodes[i], values[i]). Nodes must be distinct.
RatPolynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

/// det(x I - M), monic of degree M.rows(), by evaluation at x = 0..s and
/// interpolation.
RatPolynomial charpoly_exact(const RationalMatrix& m);

/// Determinant of a polynomial matrix whose determinant has degree at most
/// `degree_bound`. One extra probe beyond the interpolation nodes checks the
/// bound; a mismatch raises InconsistentBound.
RatPolynomial polymat_det(const PolyMatrix& p, std::size_t degree_bound);

/// Runs body(i) for i in [0, count). Uses worker threads when more than one
/// hardware thread is available; the order of side effects is unspecified.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qwz
