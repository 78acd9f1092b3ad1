#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library kernels they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qwz/determinant.hpp"
#include "qwz/matrix.hpp"
#include "qwz/polynomial.hpp"

namespace qwz::oracle {

inline int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

/// Leibniz expansion; n! terms, so small matrices only.
inline Rational leibniz_det(const RationalMatrix& m) {
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Rational det = 0;
    do {
        Rational term = permutation_sign(perm);
        for (std::size_t r = 0; r < m.rows() && sgn(term) != 0; ++r) term *= m(r, perm[r]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Leibniz expansion over polynomial entries.
inline RatPolynomial leibniz_polydet(const PolyMatrix& m) {
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    RatPolynomial det;
    do {
        RatPolynomial term{Rational(permutation_sign(perm))};
        for (std::size_t r = 0; r < m.size() && !term.is_zero(); ++r) term *= m(r, perm[r]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Faddeev-LeVerrier recurrence for det(xI - M).
inline RatPolynomial faddeev_leverrier(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = 1;
    RationalMatrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += coeffs[n - k + 1];
        const RationalMatrix am = a * m;
        coeffs[n - k] = -am.trace() / static_cast<unsigned long>(k);
    }
    return RatPolynomial(std::move(coeffs));
}

inline RationalMatrix random_rational_matrix(std::size_t n, std::mt19937_64& engine) {
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Rational x(static_cast<long>(engine() % 19) - 9, 1 + engine() % 6);
            x.canonicalize();
            m(r, c) = x;
        }
    return m;
}

/// x^k * p(1/x) rewritten as coefficient reversal with padding to degree k.
inline RatPolynomial reciprocal(const RatPolynomial& p, std::size_t k) {
    std::vector<Rational> out(k + 1);
    for (std::size_t i = 0; i <= k; ++i) out[k - i] = p.coeff(i);
    return RatPolynomial(std::move(out));
}

}  // namespace qwz::oracle
