#include "qwz/zeta.hpp"

#include <stdexcept>

#include "qwz/determinant.hpp"
#include "qwz/errors.hpp"

namespace qwz {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries PowerSeries::from_polynomial(const RatPolynomial& p, std::size_t order) {
    PowerSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) out.coeffs_[i] = p.coeff(i);
    return out;
}

PowerSeries PowerSeries::inverse() const {
    if (sgn(coeffs_[0]) == 0) throw std::domain_error("power series with zero constant term is not invertible");
    PowerSeries out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = -acc / coeffs_[0];
    }
    return out;
}

PowerSeries PowerSeries::log() const {
    if (coeffs_[0] != 1) throw std::domain_error("formal logarithm needs constant term 1");
    // log f = integral of f'/f.
    const std::size_t order_ = order();
    PowerSeries derivative(order_);
    for (std::size_t k = 1; k <= order_; ++k) derivative.coeffs_[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    const PowerSeries quotient = derivative * inverse();
    PowerSeries out(order_);
    for (std::size_t k = 1; k <= order_; ++k) out.coeffs_[k] = quotient.coeffs_[k - 1] / static_cast<unsigned long>(k);
    return out;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& other) {
    if (other.order() != order()) throw std::invalid_argument("power series orders differ");
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

namespace {

// I - t*M as a polynomial matrix.
PolyMatrix identity_minus_t(const RationalMatrix& m) {
    return PolyMatrix::from_coefficients({RationalMatrix::identity(m.rows()), Rational(-1) * m});
}

// (1 - t^2)^{exponent} det(I - tW + t^2 (D - I)).
RationalFunction bass_form(const RationalMatrix& w, const RationalMatrix& d, long exponent) {
    const std::size_t n = w.rows();
    const RationalMatrix identity = RationalMatrix::identity(n);
    const PolyMatrix p = PolyMatrix::from_coefficients({identity, Rational(-1) * w, d - identity});
    const RatPolynomial det = polymat_det(p, 2 * n);
    return RationalFunction::power(RatPolynomial{1, 0, -1}, exponent) * RationalFunction(det);
}

}  // namespace

RatPolynomial ihara_reciprocal_edge_form(const ArcSet& arcs) {
    return polymat_det(identity_minus_t(edge_matrices(arcs).edge_matrix()), arcs.size());
}

RationalFunction ihara_reciprocal_bass_form(const Graph& g) {
    return bass_form(adjacency_matrix(g), degree_matrix(g), betti(g) - 1);
}

WeightedZetaForms weighted_zeta_reciprocal(const Graph& g, const ArcSet& arcs, const WeightedMatrix& w) {
    const RationalMatrix bw = weighted_edge_matrix(arcs, w);
    const EdgeMatrixPair pair = edge_matrices(arcs);
    WeightedZetaForms out;
    out.edge_form = polymat_det(identity_minus_t(bw - pair.j0), arcs.size());
    const long exponent = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
    out.bass_form = bass_form(aggregated_weight_matrix(arcs, w), weighted_degree_matrix(arcs, w), exponent);
    return out;
}

}  // namespace qwz
