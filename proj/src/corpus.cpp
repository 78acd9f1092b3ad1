#include <random>
#include <set>

#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"

namespace qwz {

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});          // outer 5-cycle
        edges.push_back({i, i + 5});                // spokes
        edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph doubled_edge_triangle() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}}); }

Graph random_connected_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> used;
    for (std::size_t v = 1; v < n; ++v) {
        const Vertex parent = engine() % v;
        edges.push_back({parent, v});
        used.emplace(parent, v);
    }
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            if (engine() % 100 < 35 && !used.count({u, v})) {
                edges.push_back({u, v});
                used.emplace(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

Graph cayley_z4xz4(const std::vector<std::pair<int, int>>& generators) {
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (const auto& [di, dj] : generators) {
                const Vertex u = static_cast<Vertex>(4 * i + j);
                const Vertex v = static_cast<Vertex>(4 * ((i + di + 4) % 4) + (j + dj + 4) % 4);
                if (seen.emplace(std::min(u, v), std::max(u, v)).second) edges.push_back({std::min(u, v), std::max(u, v)});
            }
        }
    }
    return Graph(16, std::move(edges));
}

}  // namespace

Graph shrikhande_graph() { return cayley_z4xz4({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}); }

Graph rook_graph_4x4() {
    return cayley_z4xz4({{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}});
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
    const ValidationReport report = validate(g);
    const DegreeInfo info = degree_info(g);
    if (!report.simple || !report.connected || !info.regular_degree) return std::nullopt;
    const std::size_t n = g.vertex_count();
    const std::size_t k = *info.regular_degree;
    if (k == 0 || k + 1 == n) return std::nullopt;
    const RationalMatrix a = adjacency_matrix(g);
    std::optional<std::size_t> lambda, mu;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            std::size_t common = 0;
            for (std::size_t w = 0; w < n; ++w)
                if (sgn(a(u, w)) != 0 && sgn(a(v, w)) != 0) ++common;
            auto& slot = sgn(a(u, v)) != 0 ? lambda : mu;
            if (slot && *slot != common) return std::nullopt;
            slot = common;
        }
    }
    return SrgParameters{n, k, lambda.value_or(0), mu.value_or(0)};
}

CorpusEntry make_entry(std::string name, Graph g) {
    const ValidationReport report = validate(g);
    const DegreeInfo info = degree_info(g);
    CorpusTags tags;
    tags.regular_k = info.regular_degree;
    tags.simple = report.simple;
    tags.md2 = report.md2;
    tags.tree = report.connected && g.edge_count() + 1 == g.vertex_count();
    tags.srg = srg_parameters(g);
    return {std::move(name), std::move(g), tags};
}

std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> corpus;
    for (std::size_t n = 2; n <= 7; ++n) corpus.push_back(make_entry("K" + std::to_string(n), complete_graph(n)));
    for (std::size_t n = 3; n <= 12; ++n) corpus.push_back(make_entry("C" + std::to_string(n), cycle_graph(n)));
    for (std::size_t n = 3; n <= 6; ++n) corpus.push_back(make_entry("P" + std::to_string(n), path_graph(n)));
    corpus.push_back(make_entry("K2,3", complete_bipartite_graph(2, 3)));
    corpus.push_back(make_entry("K3,3", complete_bipartite_graph(3, 3)));
    corpus.push_back(make_entry("petersen", petersen_graph()));
    corpus.push_back(make_entry("doubled-edge-triangle", doubled_edge_triangle()));
    std::mt19937_64 engine(seed);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 4 + engine() % 5;
        const std::uint64_t graph_seed = engine();
        corpus.push_back(make_entry((i < 10 ? "random-0" : "random-") + std::to_string(i),
                                    random_connected_graph(n, graph_seed)));
    }
    return corpus;
}

std::array<CorpusEntry, 2> builtin_srg_pair() {
    return {make_entry("shrikhande", parse_graph6(kShrikhandeGraph6)),
            make_entry("rook4x4", parse_graph6(kRook4x4Graph6))};
}

}  // namespace qwz
