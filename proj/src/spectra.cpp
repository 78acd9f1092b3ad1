#include "qwz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qwz/errors.hpp"

namespace qwz {

namespace {

std::vector<double> monic_double_coefficients(const RatPolynomial& p) {
    const RatPolynomial monic = p.monic();
    std::vector<double> out;
    out.reserve(monic.coefficients().size());
    for (const auto& c : monic.coefficients()) out.push_back(c.get_d());
    return out;
}

double cauchy_bound(const std::vector<double>& monic) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < monic.size(); ++i) worst = std::max(worst, std::abs(monic[i]));
    return 1.0 + worst;
}

// p(z) and p'(z) by Horner's rule.
std::pair<Complex, Complex> horner(const std::vector<double>& coeffs, Complex z) {
    Complex value = 0.0, slope = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        slope = slope * z + value;
        value = value * z + coeffs[k];
    }
    return {value, slope};
}

// Best rational approximation with denominator <= max_den (continued fractions).
Rational nearest_small_rational(double x, long max_den) {
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    for (int iter = 0; iter < 40; ++iter) {
        const double whole = std::floor(rest);
        if (std::abs(whole) > 1e15) break;
        const long a = static_cast<long>(whole);
        const long p2 = a * p1 + p0;
        const long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double frac = rest - whole;
        if (frac < 1e-13) break;
        rest = 1.0 / frac;
    }
    Rational out{Integer(p1), Integer(q1)};
    out.canonicalize();
    return out;
}

}  // namespace

std::vector<Complex> aberth_roots(const RatPolynomial& squarefree, const AberthOptions& options) {
    const long degree = squarefree.degree();
    if (degree < 1) throw std::invalid_argument("root finding needs a polynomial of degree >= 1");
    const std::vector<double> coeffs = monic_double_coefficients(squarefree);
    if (degree == 1) return {Complex(-coeffs[0], 0.0)};

    const std::size_t count = static_cast<std::size_t>(degree);
    const double radius = cauchy_bound(coeffs);
    std::vector<Complex> z(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    std::vector<double> step(count, 0.0);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        bool converged = true;
        for (std::size_t k = 0; k < count; ++k) {
            const auto [value, slope] = horner(coeffs, z[k]);
            if (value == 0.0) {
                step[k] = 0.0;
                continue;
            }
            const Complex ratio = value / slope;
            Complex repulsion = 0.0;
            for (std::size_t j = 0; j < count; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const Complex correction = ratio / (1.0 - ratio * repulsion);
            z[k] -= correction;
            step[k] = std::abs(ratio);
            if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag())) {
                z[k] = std::polar(radius, 0.7 * static_cast<double>(k + 1));
                converged = false;
                continue;
            }
            if (step[k] >= options.step_tolerance * std::max(1.0, std::abs(z[k]))) converged = false;
        }
        if (converged) return z;
    }
    std::ostringstream msg;
    msg << "Aberth iteration did not converge for a degree-" << degree << " polynomial; last steps:";
    for (double s : step) msg << ' ' << s;
    throw ConvergenceError(msg.str());
}

SpectrumMultiset roots(const RatPolynomial& p, double tolerance) {
    if (p.degree() < 1) throw std::invalid_argument("roots requires a polynomial of degree >= 1");
    SpectrumMultiset out;
    out.tolerance = tolerance;
    for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
        std::vector<Complex> found = aberth_roots(factor);
        for (Complex& z : found) {
            if (std::abs(z.imag()) > 1e-6 * std::max(1.0, std::abs(z))) continue;
            const Rational candidate = nearest_small_rational(z.real(), 10000);
            if (std::abs(candidate.get_d() - z.real()) < 1e-7 && sgn(factor.evaluate(candidate)) == 0) {
                z = Complex(candidate.get_d(), 0.0);
            }
        }
        for (unsigned i = 0; i < multiplicity; ++i) out.values.insert(out.values.end(), found.begin(), found.end());
    }
    return out;
}

std::vector<double> normalized_residuals(const RatPolynomial& p, const std::vector<Complex>& values) {
    const std::vector<double> coeffs = monic_double_coefficients(p);
    const double scale = std::pow(cauchy_bound(coeffs), static_cast<double>(p.degree()));
    std::vector<double> out;
    out.reserve(values.size());
    for (const Complex& z : values) out.push_back(std::abs(horner(coeffs, z).first) / scale);
    return out;
}

namespace {

void pad_with_unit_pairs(SpectrumMultiset& s, std::size_t m, std::size_t n) {
    for (std::size_t i = n; i < m; ++i) {
        s.values.emplace_back(1.0, 0.0);
        s.values.emplace_back(-1.0, 0.0);
    }
}

}  // namespace

SpectrumMultiset map_T_spectrum(const std::vector<double>& t_spectrum, std::size_t m, std::size_t n,
                                double tolerance) {
    if (m < n) throw HypothesisError("the T-spectrum mapping needs m >= n (trees are not covered)");
    SpectrumMultiset out;
    out.tolerance = tolerance;
    for (double x : t_spectrum) {
        if (std::abs(x) > 1.0 + tolerance) throw HypothesisError("T-eigenvalue outside [-1, 1]");
        x = std::clamp(x, -1.0, 1.0);
        const double y = std::sqrt((1.0 - x) * (1.0 + x));
        out.values.emplace_back(x, y);
        out.values.emplace_back(x, -y);
    }
    pad_with_unit_pairs(out, m, n);
    return out;
}

SpectrumMultiset map_A_spectrum(const std::vector<double>& a_spectrum, std::size_t k, std::size_t m, std::size_t n,
                                double tolerance) {
    if (k < 2) throw HypothesisError("the adjacency-spectrum mapping needs a k-regular graph with k >= 2");
    if (m < n) throw HypothesisError("the adjacency-spectrum mapping needs m >= n");
    SpectrumMultiset out;
    out.tolerance = tolerance;
    const double km1 = static_cast<double>(k) - 1.0;
    for (double a : a_spectrum) {
        const double half = a / 2.0;
        const double radicand = km1 - half * half;
        if (radicand >= 0.0) {
            const double y = std::sqrt(radicand);
            out.values.emplace_back(half, y);
            out.values.emplace_back(half, -y);
        } else {
            const double y = std::sqrt(-radicand);
            out.values.emplace_back(half + y, 0.0);
            out.values.emplace_back(half - y, 0.0);
        }
    }
    pad_with_unit_pairs(out, m, n);
    return out;
}

namespace {

// Largest distance of a greedy nearest-neighbour pairing of `from` into `to`.
double greedy_pairing_distance(std::vector<Complex> from, std::vector<Complex> to) {
    auto by_position = [](const Complex& x, const Complex& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    };
    std::sort(from.begin(), from.end(), by_position);
    std::vector<bool> used(to.size(), false);
    double worst = 0.0;
    for (const Complex& x : from) {
        std::size_t best = to.size();
        double best_distance = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < to.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - to[j]);
            if (d < best_distance) {
                best_distance = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_distance);
    }
    return worst;
}

}  // namespace

SpectrumComparison compare(const SpectrumMultiset& a, const SpectrumMultiset& b) {
    SpectrumComparison result;
    if (a.size() != b.size()) {
        result.max_pair_distance = std::numeric_limits<double>::infinity();
        return result;
    }
    // Pair in both directions so the verdict does not depend on argument order.
    result.max_pair_distance =
        std::max(greedy_pairing_distance(a.values, b.values), greedy_pairing_distance(b.values, a.values));
    result.equal = result.max_pair_distance <= std::max(a.tolerance, b.tolerance);
    return result;
}

SpectrumMultiset conjugate(const SpectrumMultiset& s) {
    SpectrumMultiset out = s;
    for (Complex& z : out.values) z = std::conj(z);
    return out;
}

std::vector<double> real_parts(const SpectrumMultiset& s) {
    std::vector<double> out;
    out.reserve(s.size());
    for (const Complex& z : s.values) out.push_back(z.real());
    return out;
}

}  // namespace qwz
