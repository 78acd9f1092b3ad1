#include <string>

#include "qwz/errors.hpp"
#include "qwz/graph.hpp"

namespace qwz {

namespace {

constexpr int kOffset = 63;

int decode_byte(char ch, std::size_t pos) {
    const int v = static_cast<unsigned char>(ch);
    if (v < 63 || v > 126) throw ParseError("graph6 byte " + std::to_string(pos) + " is outside [63, 126]");
    return v - kOffset;
}

void encode_size(std::size_t n, std::string& out) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kOffset));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + kOffset));
    }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    std::size_t n = 0;
    auto read_wide = [&](int groups) {
        std::size_t value = 0;
        for (int i = 0; i < groups; ++i) {
            if (pos >= line.size()) throw ParseError("graph6 size field is truncated");
            value = (value << 6U) | static_cast<std::size_t>(decode_byte(line[pos], pos));
            ++pos;
        }
        return value;
    };
    const int first = decode_byte(line[pos], pos);
    if (first < 63) {
        n = static_cast<std::size_t>(first);
        ++pos;
    } else if (line.size() > 1 && decode_byte(line[1], 1) == 63) {
        pos = 2;
        n = read_wide(6);
    } else {
        pos = 1;
        n = read_wide(3);
    }
    if (n == 0) throw ParseError("graph6 graph with zero vertices is not supported");

    const std::size_t bit_count = n * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (line.size() - pos < byte_count) throw ParseError("graph6 bit stream is truncated");
    if (line.size() - pos > byte_count) throw ParseError("graph6 string has trailing bytes");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++bit) {
            const int byte = decode_byte(line[pos + bit / 6], pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

std::string encode_graph6(const Graph& g) {
    if (!validate(g).simple) throw HypothesisError("graph6 can only encode simple graphs");
    const std::size_t n = g.vertex_count();
    std::vector<bool> adjacent(n * n, false);
    for (const Edge& e : g.edges()) {
        adjacent[e.u * n + e.v] = true;
        adjacent[e.v * n + e.u] = true;
    }
    std::string out;
    encode_size(n, out);
    int acc = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (adjacent[u * n + v] ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

}  // namespace qwz
