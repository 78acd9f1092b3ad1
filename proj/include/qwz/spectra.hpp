#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qwz/polynomial.hpp"

namespace qwz {

using Complex = std::complex<double>;

inline constexpr double kDefaultPairingTolerance = 1e-8;

/// Multiset of complex values; repeated roots appear repeatedly.
struct SpectrumMultiset {
    std::vector<Complex> values;
    double tolerance = kDefaultPairingTolerance;

    std::size_t size() const noexcept { return values.size(); }
};

struct AberthOptions {
    double step_tolerance = 1e-12;  // stop once every |p(z)/p'(z)| is below this
    int max_iterations = 2000;
};

/// Roots of a squarefree polynomial by Aberth-Ehrlich iteration, started on
/// a circle whose radius is the Cauchy bound. Throws ConvergenceError.
std::vector<Complex> aberth_roots(const RatPolynomial& squarefree, const AberthOptions& options = {});

/// All deg(p) complex roots with multiplicity. The polynomial is first split
/// exactly into squarefree factors; each factor is solved numerically, and
/// real roots that are exact small-denominator rationals are snapped to
/// their exact value after an exact check.
SpectrumMultiset roots(const RatPolynomial& p, double tolerance = kDefaultPairingTolerance);

/// |p(z)| / (C^deg) per root, with C the Cauchy bound of monic(p).
std::vector<double> normalized_residuals(const RatPolynomial& p, const std::vector<Complex>& values);

/// {x ± i sqrt(1 - x^2)} over the T-spectrum plus m - n copies of +1 and -1.
SpectrumMultiset map_T_spectrum(const std::vector<double>& t_spectrum, std::size_t m, std::size_t n,
                                double tolerance = kDefaultPairingTolerance);

/// Roots of z^2 - a z + (k - 1) for each adjacency eigenvalue a, plus m - n
/// copies of +1 and -1.
SpectrumMultiset map_A_spectrum(const std::vector<double>& a_spectrum, std::size_t k, std::size_t m, std::size_t n,
                                double tolerance = kDefaultPairingTolerance);

struct SpectrumComparison {
    bool equal = false;
    double max_pair_distance = 0.0;
};

/// Order-free comparison: greedy nearest-neighbour pairing, then a check that
/// every pair lies within the larger of the two tolerances.
SpectrumComparison compare(const SpectrumMultiset& a, const SpectrumMultiset& b);

/// The multiset of complex conjugates.
SpectrumMultiset conjugate(const SpectrumMultiset& s);

/// Real parts of the values (for spectra of symmetrizable matrices).
std::vector<double> real_parts(const SpectrumMultiset& s);

}  // namespace qwz
