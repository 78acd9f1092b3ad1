#include "qwz/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

#include "qwz/errors.hpp"

namespace qwz {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ == 0) throw ParseError("graph must have at least one vertex");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= n_ || e.v >= n_) {
            throw ParseError("edge " + std::to_string(i) + " has an endpoint outside [0, " + std::to_string(n_) + ")");
        }
        if (e.u == e.v) throw ParseError("loop at vertex " + std::to_string(e.u) + " is not supported");
    }
}

ArcSet::ArcSet(const Graph& g) : n_(g.vertex_count()) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    origin_.resize(2 * m);
    terminus_.resize(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        origin_[i] = edges[i].u;
        terminus_[i] = edges[i].v;
        origin_[i + m] = edges[i].v;
        terminus_[i + m] = edges[i].u;
    }
}

DegreeInfo degree_info(const Graph& g) {
    DegreeInfo info;
    info.degrees.assign(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        ++info.degrees[e.u];
        ++info.degrees[e.v];
    }
    info.min_degree = *std::min_element(info.degrees.begin(), info.degrees.end());
    const std::size_t max_degree = *std::max_element(info.degrees.begin(), info.degrees.end());
    if (info.min_degree == max_degree) info.regular_degree = max_degree;
    return info;
}

namespace {

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> nbrs(n);
    for (const Edge& e : g.edges()) {
        nbrs[e.u].push_back(e.v);
        nbrs[e.v].push_back(e.u);
    }
    std::vector<bool> seen(n, false);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : nbrs[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == n;
}

}  // namespace

ValidationReport validate(const Graph& g) {
    ValidationReport report;
    report.connected = is_connected(g);
    std::set<std::pair<Vertex, Vertex>> seen;
    report.simple = true;
    for (const Edge& e : g.edges()) {
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            report.simple = false;
            break;
        }
    }
    report.md2 = degree_info(g).min_degree >= 2;
    return report;
}

RationalMatrix adjacency_matrix(const Graph& g) {
    RationalMatrix a(g.vertex_count(), g.vertex_count());
    for (const Edge& e : g.edges()) {
        a(e.u, e.v) += 1;
        a(e.v, e.u) += 1;
    }
    return a;
}

RationalMatrix degree_matrix(const Graph& g) {
    const DegreeInfo info = degree_info(g);
    RationalMatrix d(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < info.degrees.size(); ++v) d(v, v) = static_cast<unsigned long>(info.degrees[v]);
    return d;
}

long betti(const Graph& g) {
    if (!is_connected(g)) throw HypothesisError("Betti number requested for a disconnected graph");
    return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1;
}

namespace {

std::size_t parse_index(std::string_view token, std::size_t line_no) {
    std::size_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || token.front() == '-' || token.front() == '+' || ec != std::errc() || ptr != last) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<std::size_t> declared;
    std::vector<Edge> edges;
    std::size_t max_index = 0;
    bool saw_content = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two tokens, got " +
                             std::to_string(tokens.size()));
        }
        if (!saw_content && tokens[0] == "n") {
            declared = parse_index(tokens[1], line_no);
            if (*declared == 0) throw ParseError("declared vertex count must be positive");
            saw_content = true;
            continue;
        }
        saw_content = true;
        const std::size_t u = parse_index(tokens[0], line_no);
        const std::size_t v = parse_index(tokens[1], line_no);
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
        if (declared && (u >= *declared || v >= *declared)) {
            throw ParseError("line " + std::to_string(line_no) + ": endpoint exceeds declared vertex count " +
                             std::to_string(*declared));
        }
        max_index = std::max({max_index, u, v});
        edges.push_back({u, v});
    }
    if (!declared && edges.empty()) throw ParseError("edge list contains no edges and no vertex count");
    const std::size_t n = declared ? *declared : max_index + 1;
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
    return os.str();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != g.vertex_count()) throw std::invalid_argument("permutation size does not match the graph");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.vertex_count(), std::move(edges));
}

}  // namespace qwz
