#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qwz/determinant.hpp"
#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"
#include "qwz/graph.hpp"
#include "qwz/polynomial.hpp"
#include "qwz/walk.hpp"

using namespace qwz;

TEST_CASE("rational literals round-trip through p/q strings") {
    CHECK(to_pq_string(Rational(3)) == "3/1");
    CHECK(to_pq_string(Rational(0)) == "0/1");
    CHECK(to_pq_string(Rational(-6) / 4) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("4/2") == 2);
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("det_exact fixtures") {
    CHECK(det_exact(RationalMatrix::identity(3)) == 1);
    CHECK(det_exact(RationalMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det_exact(adjacency_matrix(complete_graph(4))) == -3);
    CHECK(det_exact(RationalMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 5), Rational(1, 7)}}) ==
          Rational(1, 14) - Rational(1, 15));
    CHECK_THROWS_AS(det_exact(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det_exact handles zero pivots and singular matrices") {
    // Leading zeros force row and column swaps.
    const RationalMatrix m{{0, 0, 2}, {0, 3, 1}, {5, 1, 1}};
    CHECK(det_exact(m) == oracle::leibniz_det(m));
    const RationalMatrix singular{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(det_exact(singular) == 0);
    CHECK(det_exact(RationalMatrix(4, 4)) == 0);
}

TEST_CASE("det_exact agrees with Leibniz expansion on random matrices") {
    std::mt19937_64 engine(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + engine() % 6;
        const RationalMatrix m = oracle::random_rational_matrix(n, engine);
        CHECK(det_exact(m) == oracle::leibniz_det(m));
    }
}

TEST_CASE("det is multiplicative on random 5x5 rational matrices") {
    std::mt19937_64 engine(11);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalMatrix a = oracle::random_rational_matrix(5, engine);
        const RationalMatrix b = oracle::random_rational_matrix(5, engine);
        REQUIRE(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("charpoly_exact fixtures") {
    CHECK(charpoly_exact(RationalMatrix(2, 2)) == RatPolynomial{0, 0, 1});
    CHECK(charpoly_exact(RationalMatrix{{0, 1}, {1, 0}}) == RatPolynomial{-1, 0, 1});
    CHECK(charpoly_exact(adjacency_matrix(cycle_graph(3))) == RatPolynomial{-2, -3, 0, 1});
    CHECK_THROWS_AS(charpoly_exact(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("charpoly_exact matches Faddeev-LeVerrier and the determinant at zero") {
    std::mt19937_64 engine(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + engine() % 8;
        const RationalMatrix m = oracle::random_rational_matrix(n, engine);
        const RatPolynomial p = charpoly_exact(m);
        CHECK(p == oracle::faddeev_leverrier(m));
        CHECK(p.degree() == static_cast<long>(n));
        CHECK(p.leading() == 1);
        const Rational sign = n % 2 == 0 ? 1 : -1;
        CHECK(p.evaluate(0) == sign * det_exact(m));
    }
    for (const auto& entry : builtin_corpus()) {
        const Graph& g = entry.graph;
        if (g.vertex_count() > 8) continue;
        const RationalMatrix t = t_matrix_from_adjacency(g);
        CHECK(charpoly_exact(t) == oracle::faddeev_leverrier(t));
        CHECK(charpoly_exact(adjacency_matrix(g)) == oracle::faddeev_leverrier(adjacency_matrix(g)));
    }
}

TEST_CASE("polymat_det fixtures") {
    PolyMatrix diag(2);
    diag(0, 0) = RatPolynomial{1, -1};
    diag(1, 1) = RatPolynomial{1, 1};
    CHECK(polymat_det(diag, 2) == RatPolynomial{1, 0, -1});

    // (1 + t^2) I - 2t [[0,1],[1,0]]
    PolyMatrix p(2);
    p(0, 0) = RatPolynomial{1, 0, 1};
    p(1, 1) = RatPolynomial{1, 0, 1};
    p(0, 1) = RatPolynomial{0, -2};
    p(1, 0) = RatPolynomial{0, -2};
    const RatPolynomial squared = RatPolynomial{-1, 0, 1}.pow(2);
    CHECK(polymat_det(p, 4) == squared);
    CHECK(polymat_det(p, 4) == oracle::leibniz_polydet(p));
}

TEST_CASE("polymat_det detects a degree bound that is too small") {
    PolyMatrix p(2);
    p(0, 0) = RatPolynomial{0, 0, 1};
    p(1, 1) = RatPolynomial{1, 0, 0, 1};
    CHECK_THROWS_AS(polymat_det(p, 3), InconsistentBound);
    CHECK(polymat_det(p, 5) == RatPolynomial{0, 0, 1, 0, 0, 1});
}

TEST_CASE("polymat_det with constant entries equals det_exact") {
    std::mt19937_64 engine(5);
    for (int trial = 0; trial < 10; ++trial) {
        const RationalMatrix m = oracle::random_rational_matrix(4, engine);
        const PolyMatrix p = PolyMatrix::from_coefficients({m});
        CHECK(polymat_det(p, 0) == RatPolynomial::constant(det_exact(m)));
    }
}

TEST_CASE("polymat_det agrees with symbolic expansion on random quadratic matrices") {
    std::mt19937_64 engine(9);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + engine() % 3;
        const PolyMatrix p = PolyMatrix::from_coefficients({oracle::random_rational_matrix(n, engine),
                                                            oracle::random_rational_matrix(n, engine),
                                                            oracle::random_rational_matrix(n, engine)});
        CHECK(polymat_det(p, 2 * n) == oracle::leibniz_polydet(p));
    }
}

TEST_CASE("poly_divexact") {
    const RatPolynomial x2m1{-1, 0, 1};
    CHECK(poly_divexact(x2m1.pow(2), x2m1) == x2m1);
    const RatPolynomial p =
        RatPolynomial{-1, 1}.pow(2) * RatPolynomial{1, 1}.pow(2) * RatPolynomial{1, 0, 1};
    CHECK(poly_divexact(p, x2m1) == RatPolynomial{-1, 0, 0, 0, 1});
    CHECK_THROWS_AS(poly_divexact(RatPolynomial{1, 0, 1}, RatPolynomial{-1, 1}), IdentityViolation);
}

TEST_CASE("gcd and squarefree decomposition") {
    const RatPolynomial a = RatPolynomial{-1, 1}.pow(3) * RatPolynomial{2, 0, 1};
    const RatPolynomial b = RatPolynomial{-1, 1} * RatPolynomial{3, 1};
    CHECK(gcd(a, b) == RatPolynomial{-1, 1});
    CHECK(gcd(RatPolynomial{}, b) == b.monic());

    const RatPolynomial quad{1, Rational(2, 3), 1};
    const RatPolynomial p = RatPolynomial{-1, 0, 1}.pow(2) * RatPolynomial{-1, 1}.pow(2) * quad.pow(3) *
                            Rational(5);
    const auto parts = squarefree_decomposition(p);
    RatPolynomial rebuilt{1};
    for (const auto& [factor, multiplicity] : parts) {
        CHECK(factor.leading() == 1);
        rebuilt *= factor.pow(multiplicity);
    }
    CHECK(rebuilt == p.monic());
    // (x+1)^2 (x-1)^4 quad^3 -> factors by multiplicity 2, 3, 4.
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::pair{RatPolynomial{1, 1}, 2U});
    CHECK(parts[1] == std::pair{quad, 3U});
    CHECK(parts[2] == std::pair{RatPolynomial{-1, 1}, 4U});
}

TEST_CASE("rational functions reduce and represent negative powers") {
    const RatPolynomial x2m1{-1, 0, 1};
    const RationalFunction inv = RationalFunction::power(RatPolynomial{1, 0, -1}, -1);
    CHECK(inv.num() == RatPolynomial{-1});
    CHECK(inv.den() == x2m1);
    const RationalFunction product = inv * RationalFunction(RatPolynomial{1, 0, -1});
    CHECK(product.is_polynomial());
    CHECK(product.as_polynomial() == RatPolynomial{1});
    CHECK_THROWS_AS(inv.as_polynomial(), IdentityViolation);
}

TEST_CASE("interpolation recovers a polynomial from distinct nodes") {
    const RatPolynomial p{Rational(1, 3), -2, 0, 5};
    std::vector<Rational> nodes, values;
    for (int x : {-2, 0, 1, 7}) {
        nodes.emplace_back(x);
        values.push_back(p.evaluate(x));
    }
    CHECK(interpolate(nodes, values) == p);
    CHECK_THROWS_AS(interpolate({1, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("polynomial printing") {
    CHECK(RatPolynomial{1, Rational(-2, 3), 1}.to_string() == "x^2 - 2/3*x + 1");
    CHECK(RatPolynomial{}.to_string() == "0");
    CHECK(RatPolynomial{0, -1}.to_string("t") == "-t");
}
