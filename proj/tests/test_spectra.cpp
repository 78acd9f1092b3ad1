#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"
#include "qwz/spectra.hpp"

using namespace qwz;

namespace {

SpectrumMultiset multiset(std::vector<Complex> values) {
    SpectrumMultiset s;
    s.values = std::move(values);
    return s;
}

bool same_spectrum(const SpectrumMultiset& a, const SpectrumMultiset& b) { return compare(a, b).equal; }

const double kSqrt3 = std::sqrt(3.0);
const double kSqrt7 = std::sqrt(7.0);

}  // namespace

TEST_CASE("roots fixtures") {
    CHECK(same_spectrum(roots(RatPolynomial{-1, 0, 1}), multiset({1.0, -1.0})));
    CHECK(same_spectrum(roots(RatPolynomial{-1, 0, 0, 0, 1}),
                        multiset({1.0, -1.0, Complex(0, 1), Complex(0, -1)})));
    const RatPolynomial c3 = RatPolynomial{-1, 1}.pow(2) * RatPolynomial{1, 1, 1}.pow(2);
    const Complex w(-0.5, kSqrt3 / 2);
    CHECK(same_spectrum(roots(c3), multiset({1.0, 1.0, w, w, std::conj(w), std::conj(w)})));
    CHECK_THROWS_AS(roots(RatPolynomial{3}), std::invalid_argument);
}

TEST_CASE("rational roots are snapped to their exact values") {
    const RatPolynomial p = RatPolynomial{-1, 1}.pow(3) * RatPolynomial{Rational(1, 3), 1} * RatPolynomial{2, 0, 1};
    const SpectrumMultiset s = roots(p);
    std::size_t exact_ones = 0, exact_thirds = 0;
    for (const Complex& z : s.values) {
        if (z == Complex(1.0, 0.0)) ++exact_ones;
        if (z == Complex(-1.0 / 3.0, 0.0)) ++exact_thirds;
    }
    CHECK(exact_ones == 3);
    CHECK(exact_thirds == 1);
}

TEST_CASE("Aberth iteration on random integer polynomials") {
    std::mt19937_64 engine(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t degree = 1 + engine() % 12;
        std::vector<Rational> coeffs(degree + 1);
        for (auto& c : coeffs) c = static_cast<long>(engine() % 21) - 10;
        coeffs.back() = 1 + engine() % 3;
        const RatPolynomial p(coeffs);
        const SpectrumMultiset s = roots(p);
        REQUIRE(s.size() == degree);
        // Vieta: the sum of the roots is -a_{n-1}/a_n.
        Complex sum = 0.0;
        for (const Complex& z : s.values) sum += z;
        CHECK(std::abs(sum - Complex(-Rational(coeffs[degree - 1] / coeffs[degree]).get_d(), 0.0)) < 1e-8);
        for (double r : normalized_residuals(p, s.values)) CHECK(r < 1e-9);
        CHECK(compare(s, conjugate(s)).equal);
    }
}

TEST_CASE("T-spectrum mapping") {
    const Complex w(-0.5, kSqrt3 / 2);
    CHECK(same_spectrum(map_T_spectrum({1.0, -0.5, -0.5}, 3, 3),
                        multiset({1.0, 1.0, w, std::conj(w), w, std::conj(w)})));
    CHECK(same_spectrum(map_T_spectrum({1.0}, 1, 1), multiset({1.0, 1.0})));

    const Complex k4(-1.0 / 3.0, 2.0 * std::sqrt(2.0) / 3.0);
    const SpectrumMultiset k4_mapped = map_T_spectrum({1.0, -1.0 / 3, -1.0 / 3, -1.0 / 3}, 6, 4);
    CHECK(same_spectrum(k4_mapped, multiset({1.0, 1.0, k4, std::conj(k4), k4, std::conj(k4), k4, std::conj(k4), 1.0,
                                             1.0, -1.0, -1.0})));
    const Graph g = complete_graph(4);
    CHECK(same_spectrum(k4_mapped, roots(operator_charpoly(g, Operator::U))));

    CHECK_THROWS_AS(map_T_spectrum({1.5}, 3, 3), HypothesisError);
    CHECK_THROWS_AS(map_T_spectrum({1.0, -1.0}, 1, 2), HypothesisError);
}

TEST_CASE("A-spectrum mapping") {
    const Complex k4(-0.5, kSqrt7 / 2);
    const SpectrumMultiset k4_mapped = map_A_spectrum({3.0, -1.0, -1.0, -1.0}, 3, 6, 4);
    CHECK(same_spectrum(k4_mapped, multiset({2.0, 1.0, k4, std::conj(k4), k4, std::conj(k4), k4, std::conj(k4), 1.0,
                                             1.0, -1.0, -1.0})));
    CHECK(same_spectrum(k4_mapped, roots(operator_charpoly(complete_graph(4), Operator::UPlus))));

    // C4: {2, 0, 0, -2} -> {1, 1}, {±i}, {±i}, {-1, -1}.
    CHECK(same_spectrum(map_A_spectrum({2.0, 0.0, 0.0, -2.0}, 2, 4, 4),
                        multiset({1.0, 1.0, Complex(0, 1), Complex(0, -1), Complex(0, 1), Complex(0, -1), -1.0, -1.0})));

    CHECK_THROWS_AS(map_A_spectrum({1.0, -1.0}, 1, 1, 2), HypothesisError);
}

TEST_CASE("Petersen positive-support spectrum is pinned") {
    std::vector<Complex> expected{2.0, 1.0};
    for (int i = 0; i < 5; ++i) {
        expected.emplace_back(0.5, kSqrt7 / 2);
        expected.emplace_back(0.5, -kSqrt7 / 2);
    }
    for (int i = 0; i < 4; ++i) {
        expected.emplace_back(-1.0, 1.0);
        expected.emplace_back(-1.0, -1.0);
    }
    for (int i = 0; i < 5; ++i) {
        expected.emplace_back(1.0, 0.0);
        expected.emplace_back(-1.0, 0.0);
    }
    const Graph g = petersen_graph();
    // Adjacency spectrum {3, 1^5, (-2)^4}, recomputed from the exact char poly.
    CHECK(operator_charpoly(g, Operator::A) ==
          RatPolynomial{-3, 1} * RatPolynomial{-1, 1}.pow(5) * RatPolynomial{2, 1}.pow(4));
    const SpectrumMultiset a = roots(operator_charpoly(g, Operator::A));
    const SpectrumMultiset mapped = map_A_spectrum(real_parts(a), 3, 15, 10);
    CHECK(mapped.size() == 30);
    CHECK(same_spectrum(mapped, multiset(expected)));
    CHECK(same_spectrum(roots(operator_charpoly(g, Operator::UPlus)), multiset(expected)));
}

TEST_CASE("compare") {
    CHECK(compare(multiset({1.0, Complex(0, 1)}), multiset({Complex(0, 1), 1.0})).equal);
    CHECK(compare(multiset({1.0}), multiset({1.0 + 1e-12})).equal);
    CHECK_FALSE(compare(multiset({1.0}), multiset({1.0 + 1e-6})).equal);
    CHECK_FALSE(compare(multiset({1.0}), multiset({1.0, 1.0})).equal);
    const auto ab = compare(multiset({0.0, 1.0, 2.0}), multiset({0.1, 1.0, 2.0}));
    const auto ba = compare(multiset({0.1, 1.0, 2.0}), multiset({0.0, 1.0, 2.0}));
    CHECK(ab.equal == ba.equal);
    CHECK(ab.max_pair_distance == doctest::Approx(0.1));
    CHECK(ba.max_pair_distance == doctest::Approx(0.1));
}

TEST_CASE("spectral mappings hold across the corpus") {
    for (const auto& entry : builtin_corpus()) {
        const Graph& g = entry.graph;
        const SpectrumMultiset u = roots(operator_charpoly(g, Operator::U));
        for (const Complex& z : u.values) CHECK(std::abs(std::abs(z) - 1.0) < 1e-8);
        CHECK(compare(u, conjugate(u)).equal);
        if (g.edge_count() >= g.vertex_count()) {
            const SpectrumCheck check = check_t_spectrum_mapping(g);
            INFO(entry.name << " max distance " << check.verdict.max_pair_distance);
            CHECK(check.verdict.equal);
        }
        if (entry.tags.regular_k && entry.tags.md2) {
            const SpectrumCheck check = check_a_spectrum_mapping(g);
            INFO(entry.name << " max distance " << check.verdict.max_pair_distance);
            CHECK(check.verdict.equal);
        }
    }
}
