#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwz/matrix.hpp"

namespace qwz {

using Vertex = std::size_t;
using ArcIndex = std::size_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph without loops. Edge order is significant:
/// it fixes the arc numbering and therefore every arc-indexed matrix.
class Graph {
public:
    /// Throws ParseError on n == 0, out-of-range endpoints or loops.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

/// Symmetric arc set: arc i < m is edge i as (u, v), arc i + m is (v, u).
class ArcSet {
public:
    explicit ArcSet(const Graph& g);

    std::size_t size() const noexcept { return origin_.size(); }
    std::size_t edge_count() const noexcept { return origin_.size() / 2; }
    std::size_t vertex_count() const noexcept { return n_; }
    Vertex origin(ArcIndex a) const { return origin_[a]; }
    Vertex terminus(ArcIndex a) const { return terminus_[a]; }
    ArcIndex inverse(ArcIndex a) const {
        const std::size_t m = edge_count();
        return a < m ? a + m : a - m;
    }

private:
    std::size_t n_;
    std::vector<Vertex> origin_;
    std::vector<Vertex> terminus_;
};

inline ArcSet build_arcs(const Graph& g) { return ArcSet(g); }

struct DegreeInfo {
    std::vector<std::size_t> degrees;
    std::size_t min_degree = 0;
    std::optional<std::size_t> regular_degree;
};

DegreeInfo degree_info(const Graph& g);

struct ValidationReport {
    bool connected = false;
    bool simple = false;
    bool md2 = false;
    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate(const Graph& g);

/// A[u][v] = number of edges joining u and v.
RationalMatrix adjacency_matrix(const Graph& g);
RationalMatrix degree_matrix(const Graph& g);
/// m - n + 1; throws HypothesisError for a disconnected graph.
long betti(const Graph& g);

/// Edge list: one "u v" pair per line, 0-based. Blank lines and '#'
/// comments are ignored. The first content line may be "n <count>".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Decodes one graph6 line (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view line);
/// Encodes a simple graph; throws HypothesisError for multigraphs.
std::string encode_graph6(const Graph& g);

/// Same graph with the vertex relabelling v -> perm[v] applied.
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace qwz
