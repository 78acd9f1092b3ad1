#include "qwz/walk.hpp"

#include <random>
#include <stdexcept>

#include "qwz/errors.hpp"

namespace qwz {

namespace {

std::vector<std::size_t> require_degrees(const Graph& g) {
    DegreeInfo info = degree_info(g);
    if (info.min_degree == 0) throw HypothesisError("graph has an isolated vertex");
    return std::move(info.degrees);
}

}  // namespace

RationalMatrix transition_matrix(const Graph& g, const ArcSet& arcs) {
    const auto degrees = require_degrees(g);
    const std::size_t size = arcs.size();
    RationalMatrix u(size, size);
    for (ArcIndex e = 0; e < size; ++e) {
        for (ArcIndex f = 0; f < size; ++f) {
            if (arcs.terminus(f) != arcs.origin(e)) continue;
            Rational coin(2, static_cast<unsigned long>(degrees[arcs.terminus(f)]));
            coin.canonicalize();
            if (f == arcs.inverse(e)) coin -= 1;
            u(e, f) = coin;
        }
    }
    return u;
}

RationalMatrix positive_support(const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(m(r, c)) > 0) out(r, c) = 1;
    return out;
}

RationalMatrix power_support(const RationalMatrix& m, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("power_support supports powers 1 to 3");
    if (!m.square()) throw std::invalid_argument("power_support requires a square matrix");
    // A positive common scale does not change signs, so work over Z.
    Integer scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, m(r, c).get_den());
    const std::size_t n = m.rows();
    IntegerMatrix base(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) base(r, c) = m(r, c).get_num() * (scale / m(r, c).get_den());
    IntegerMatrix power = base;
    for (int i = 1; i < k; ++i) power = multiply(power, base);
    RationalMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (sgn(power(r, c)) > 0) out(r, c) = 1;
    return out;
}

EdgeMatrixPair edge_matrices(const ArcSet& arcs) {
    const std::size_t size = arcs.size();
    EdgeMatrixPair pair{RationalMatrix(size, size), RationalMatrix(size, size)};
    for (ArcIndex e = 0; e < size; ++e) {
        for (ArcIndex f = 0; f < size; ++f)
            if (arcs.terminus(e) == arcs.origin(f)) pair.b(e, f) = 1;
        pair.j0(e, arcs.inverse(e)) = 1;
    }
    return pair;
}

bool check_edge_matrix_support(const Graph& g) {
    const ValidationReport report = validate(g);
    if (!report.connected) throw HypothesisError("edge-matrix support identity requires a connected graph");
    if (!report.simple) throw HypothesisError("edge-matrix support identity requires a simple graph");
    if (!report.md2) throw HypothesisError("edge-matrix support identity requires minimum degree >= 2");
    const ArcSet arcs(g);
    return edge_matrices(arcs).edge_matrix() == positive_support(transition_matrix(g, arcs).transpose());
}

WeightedMatrix unit_weights(const Graph& g) {
    WeightedMatrix out{RationalMatrix(g.vertex_count(), g.vertex_count())};
    for (const Edge& e : g.edges()) {
        out.w(e.u, e.v) = 1;
        out.w(e.v, e.u) = 1;
    }
    return out;
}

WeightedMatrix degree_weights(const Graph& g) {
    const auto degrees = require_degrees(g);
    WeightedMatrix out{RationalMatrix(g.vertex_count(), g.vertex_count())};
    for (const Edge& e : g.edges()) {
        out.w(e.u, e.v) = Rational(2, static_cast<unsigned long>(degrees[e.u]));
        out.w(e.v, e.u) = Rational(2, static_cast<unsigned long>(degrees[e.v]));
        out.w(e.u, e.v).canonicalize();
        out.w(e.v, e.u).canonicalize();
    }
    return out;
}

WeightedMatrix random_weights(const Graph& g, std::uint64_t seed) {
    // Raw engine output keeps the draws identical across standard libraries.
    std::mt19937_64 engine(seed);
    WeightedMatrix out{RationalMatrix(g.vertex_count(), g.vertex_count())};
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const long num = static_cast<long>(engine() % 10);  // 0..9 -> -5..-1, 1..5
            const unsigned long den = 1 + engine() % 4;
            Rational w(num < 5 ? num - 5 : num - 4, den);
            w.canonicalize();
            out.w(u, v) = w;
        }
    }
    // Keep the draws for every pair so a graph's weights do not depend on its
    // edge list; zero out the non-arc positions afterwards.
    const RationalMatrix support = unit_weights(g).w;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v = 0; v < g.vertex_count(); ++v)
            if (sgn(support(u, v)) == 0) out.w(u, v) = 0;
    return out;
}

void check_weight_support(const ArcSet& arcs, const WeightedMatrix& w) {
    const std::size_t n = arcs.vertex_count();
    if (w.w.rows() != n || w.w.cols() != n) throw HypothesisError("weighted matrix has the wrong size");
    std::vector<bool> has_arc(n * n, false);
    for (ArcIndex a = 0; a < arcs.size(); ++a) has_arc[arcs.origin(a) * n + arcs.terminus(a)] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!has_arc[i * n + j] && sgn(w.w(i, j)) != 0) {
                throw HypothesisError("weight at (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") is not on an arc");
            }
}

RationalMatrix weighted_edge_matrix(const ArcSet& arcs, const WeightedMatrix& w) {
    check_weight_support(arcs, w);
    const std::size_t size = arcs.size();
    RationalMatrix out(size, size);
    for (ArcIndex f = 0; f < size; ++f) {
        const Rational wf = w.arc_weight(arcs, f);
        for (ArcIndex e = 0; e < size; ++e)
            if (arcs.terminus(e) == arcs.origin(f)) out(e, f) = wf;
    }
    return out;
}

RationalMatrix aggregated_weight_matrix(const ArcSet& arcs, const WeightedMatrix& w) {
    check_weight_support(arcs, w);
    const std::size_t n = arcs.vertex_count();
    RationalMatrix out(n, n);
    for (ArcIndex a = 0; a < arcs.size(); ++a) out(arcs.origin(a), arcs.terminus(a)) += w.arc_weight(arcs, a);
    return out;
}

RationalMatrix weighted_degree_matrix(const ArcSet& arcs, const WeightedMatrix& w) {
    check_weight_support(arcs, w);
    const std::size_t n = arcs.vertex_count();
    RationalMatrix out(n, n);
    for (ArcIndex a = 0; a < arcs.size(); ++a) out(arcs.origin(a), arcs.origin(a)) += w.arc_weight(arcs, a);
    return out;
}

RationalMatrix t_matrix(const Graph& g) {
    const auto degrees = require_degrees(g);
    const std::size_t n = g.vertex_count();
    RationalMatrix t(n, n);
    for (const Edge& e : g.edges()) {
        t(e.u, e.v) += Rational(1, static_cast<unsigned long>(degrees[e.u]));
        t(e.v, e.u) += Rational(1, static_cast<unsigned long>(degrees[e.v]));
    }
    return t;
}

RationalMatrix t_matrix_from_adjacency(const Graph& g) {
    const auto degrees = require_degrees(g);
    RationalMatrix d_inv(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < degrees.size(); ++v) d_inv(v, v) = Rational(1, static_cast<unsigned long>(degrees[v]));
    return d_inv * adjacency_matrix(g);
}

}  // namespace qwz
