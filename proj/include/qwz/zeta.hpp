#pragma once

#include <cstddef>
#include <vector>

#include "qwz/graph.hpp"
#include "qwz/polynomial.hpp"
#include "qwz/walk.hpp"

namespace qwz {

/// Formal power series truncated at order L (L + 1 stored coefficients).
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order);
    static PowerSeries from_polynomial(const RatPolynomial& p, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Multiplicative inverse; the constant term must be nonzero.
    PowerSeries inverse() const;
    /// Formal logarithm; the constant term must be 1.
    PowerSeries log() const;

    PowerSeries& operator*=(const PowerSeries& other);
    friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// An equivalence class of closed reduced cycles, stored as the least
/// rotation of its arc sequence.
struct CycleClass {
    std::vector<ArcIndex> representative;
    bool prime = true;

    std::size_t length() const noexcept { return representative.size(); }
};

/// det(I - t(B - J0)) as a polynomial in t.
RatPolynomial ihara_reciprocal_edge_form(const ArcSet& arcs);

/// (1 - t^2)^{r-1} det(I - tA + t^2(D - I)), kept as a rational function so
/// that trees (r = 0) are representable.
RationalFunction ihara_reciprocal_bass_form(const Graph& g);

struct WeightedZetaForms {
    RatPolynomial edge_form;     // det(I - t(B_w - J0))
    RationalFunction bass_form;  // (1 - t^2)^{m-n} det(I - tW + t^2(D_w - I))
};

WeightedZetaForms weighted_zeta_reciprocal(const Graph& g, const ArcSet& arcs, const WeightedMatrix& w);

/// Size limits of the cycle enumeration.
inline constexpr std::size_t kMaxOracleArcs = 20;
inline constexpr std::size_t kMaxOracleOrder = 12;

/// All equivalence classes of closed reduced cycles of length <= max_length.
/// Throws ResourceGuard beyond kMaxOracleArcs arcs or kMaxOracleOrder.
std::vector<CycleClass> enumerate_reduced_cycles(const ArcSet& arcs, std::size_t max_length);

/// Truncated series of prod over prime classes of (1 - t^{|C|})^{-1}.
PowerSeries euler_product_oracle(const ArcSet& arcs, std::size_t order);

/// Product of arc weights along the cycle representative.
Rational cycle_norm(const CycleClass& cycle, const ArcSet& arcs, const WeightedMatrix& w);

/// The cycle traversed backwards through inverse arcs, canonicalized.
CycleClass inverse_cycle(const CycleClass& cycle, const ArcSet& arcs);

/// Least rotation of an arc sequence.
std::vector<ArcIndex> least_rotation(const std::vector<ArcIndex>& seq);

}  // namespace qwz
