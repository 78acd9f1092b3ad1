#pragma once

#include <cstdint>

#include "qwz/graph.hpp"
#include "qwz/matrix.hpp"

namespace qwz {

/// Grover-coined transition matrix on arcs:
///   U[e][f] = 2/d_{t(f)}      if t(f) = o(e) and f != e^{-1}
///   U[e][f] = 2/d_{t(f)} - 1  if f = e^{-1}
///   U[e][f] = 0               otherwise.
/// Throws HypothesisError if some vertex is isolated.
RationalMatrix transition_matrix(const Graph& g, const ArcSet& arcs);

/// 0/1 indicator of the strictly positive entries.
RationalMatrix positive_support(const RationalMatrix& m);

/// (M^k)^+ for k in 1..3, with exact products.
RationalMatrix power_support(const RationalMatrix& m, int k);

struct EdgeMatrixPair {
    RationalMatrix b;   // b[e][f] = 1 iff t(e) = o(f)
    RationalMatrix j0;  // j0[e][f] = 1 iff f = e^{-1}

    /// The non-backtracking arc operator B - J0.
    RationalMatrix edge_matrix() const { return b - j0; }
};

EdgeMatrixPair edge_matrices(const ArcSet& arcs);

/// Checks that B - J0 equals the positive support of the transposed
/// transition matrix. Requires a simple, connected graph of minimum degree
/// at least 2; otherwise throws HypothesisError.
bool check_edge_matrix_support(const Graph& g);

/// Vertex-indexed weights w(u, v), nonzero only on arc positions. An arc e
/// carries the weight w(e) = w(o(e), t(e)).
struct WeightedMatrix {
    RationalMatrix w;

    Rational arc_weight(const ArcSet& arcs, ArcIndex a) const { return w(arcs.origin(a), arcs.terminus(a)); }
};

WeightedMatrix unit_weights(const Graph& g);
/// w(u, v) = 2 / deg u on every arc.
WeightedMatrix degree_weights(const Graph& g);
/// Nonzero rationals p/q, 1 <= |p| <= 5, 1 <= q <= 4, drawn deterministically
/// from `seed`.
WeightedMatrix random_weights(const Graph& g, std::uint64_t seed);

/// Throws HypothesisError if W is nonzero at a vertex pair that carries no arc.
void check_weight_support(const ArcSet& arcs, const WeightedMatrix& w);

/// B_w[e][f] = w(f) if t(e) = o(f), else 0.
RationalMatrix weighted_edge_matrix(const ArcSet& arcs, const WeightedMatrix& w);

/// Sum of arc weights from vertex i to vertex j (the multigraph form of W;
/// equals W itself for simple graphs).
RationalMatrix aggregated_weight_matrix(const ArcSet& arcs, const WeightedMatrix& w);

/// Diagonal matrix of out-arc weight sums.
RationalMatrix weighted_degree_matrix(const ArcSet& arcs, const WeightedMatrix& w);

/// Random-walk matrix: T[u][v] = (number of edges uv) / deg u.
RationalMatrix t_matrix(const Graph& g);
/// The same matrix obtained as D^{-1} A.
RationalMatrix t_matrix_from_adjacency(const Graph& g);

}  // namespace qwz
