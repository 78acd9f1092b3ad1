#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwz/graph.hpp"
#include "qwz/polynomial.hpp"
#include "qwz/spectra.hpp"

namespace qwz {

// ---------------------------------------------------------------------------
// Graph families

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// Path on n vertices.
Graph path_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();
/// Triangle whose edge {0, 1} is doubled.
Graph doubled_edge_triangle();
/// Connected multigraph-free random graph on n vertices: a random spanning
/// tree plus each remaining pair with probability 35/100.
Graph random_connected_graph(std::size_t n, std::uint64_t seed);
/// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
Graph shrikhande_graph();
/// Line graph of K_{4,4}: cells of a 4x4 board, adjacent when they share a
/// row or a column.
Graph rook_graph_4x4();

inline constexpr std::string_view kShrikhandeGraph6 = R"(OlfJHsHBGK_\oHWKeBK_\)";
inline constexpr std::string_view kRook4x4Graph6 = "O~`HW}GPHDaNaGPCcPWaN";

// ---------------------------------------------------------------------------
// Corpus

struct SrgParameters {
    std::size_t n = 0, k = 0, lambda = 0, mu = 0;
    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

struct CorpusTags {
    std::optional<std::size_t> regular_k;
    bool simple = false;
    bool md2 = false;
    bool tree = false;
    std::optional<SrgParameters> srg;
};

struct CorpusEntry {
    std::string name;
    Graph graph;
    CorpusTags tags;
};

/// SRG parameters if the graph is simple, connected, regular and strongly
/// regular (and neither complete nor empty).
std::optional<SrgParameters> srg_parameters(const Graph& g);

CorpusEntry make_entry(std::string name, Graph g);

inline constexpr std::uint64_t kDefaultSeed = 42;

/// K_2..K_7, C_3..C_12, P_3..P_6, K_{2,3}, K_{3,3}, Petersen, the doubled-edge
/// triangle and 20 random connected graphs on 4..8 vertices drawn from `seed`.
std::vector<CorpusEntry> builtin_corpus(std::uint64_t seed = kDefaultSeed);

/// The cospectral SRG(16, 6, 2, 2) pair, decoded from the embedded graph6.
std::array<CorpusEntry, 2> builtin_srg_pair();

// ---------------------------------------------------------------------------
// Operators

enum class Operator { U, UPlus, U2Plus, U3Plus, A, T, EdgeMatrix };

/// Accepts "U", "U+", "U2+", "U3+", "A", "T", "B-J0".
Operator parse_operator(std::string_view name);
std::string_view operator_name(Operator op);
RationalMatrix operator_matrix(const Graph& g, Operator op);
RatPolynomial operator_charpoly(const Graph& g, Operator op);

/// (x^2 - 1)^{m-n} det((x^2 + 1) I - 2x T). A rational function because
/// trees have m - n = -1.
RationalFunction transition_charpoly_t_form(const Graph& g);
/// (x^2 - 1)^{m-n} det((x^2 + 1) D - 2x A) / (d_1 ... d_n).
RationalFunction transition_charpoly_degree_form(const Graph& g);
/// (x^2 - 1)^{m-n} det((x^2 - 1) I - x A + D).
RationalFunction positive_support_charpoly_form(const Graph& g);

// ---------------------------------------------------------------------------
// Spectral mappings

struct SpectrumCheck {
    SpectrumMultiset computed;  // roots of the operator's exact char poly
    SpectrumMultiset mapped;    // closed-form spectrum
    SpectrumComparison verdict;
};

/// Roots of char(U) against the closed form built from the T-spectrum.
/// Requires m >= n.
SpectrumCheck check_t_spectrum_mapping(const Graph& g, double tolerance = kDefaultPairingTolerance);
/// Roots of char(U^+) against the closed form built from the A-spectrum.
/// Requires a connected k-regular graph with k >= 2.
SpectrumCheck check_a_spectrum_mapping(const Graph& g, double tolerance = kDefaultPairingTolerance);

// ---------------------------------------------------------------------------
// Identity suite

struct Witness {
    std::string graph;
    std::string residual;  // exact difference of the two sides, or a description
};

struct IdentityCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<Witness> witness;  // first failure, if any
    double seconds = 0.0;

    bool passed() const { return !witness.has_value(); }
};

struct VerificationReport {
    std::uint64_t seed = kDefaultSeed;
    std::size_t weight_trials = 0;
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    const IdentityCheck& check(std::string_view name) const;
};

struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    std::size_t weight_trials = 10;
};

/// Identity names, in report order.
inline constexpr std::array<std::string_view, 8> kIdentityNames = {
    "charpoly_t_form",     "charpoly_degree_form", "bass_identity",        "weighted_bass_identity",
    "edge_matrix_support", "positive_support_charpoly", "transition_orthogonality", "t_row_stochastic",
};

VerificationReport run_identity_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options = {});

/// Seed of the i-th random weight matrix for the corpus entry at `index`.
std::uint64_t weight_seed(std::uint64_t seed, std::size_t index, std::size_t trial);

// ---------------------------------------------------------------------------
// SRG discrimination

struct LevelComparison {
    int power = 0;  // 0 = adjacency, k >= 1 = (U^k)^+
    RatPolynomial first;
    RatPolynomial second;
    bool equal = false;
};

struct DistinguishResult {
    /// Smallest level whose char polys differ; empty when all four agree.
    std::optional<int> level;
    std::vector<LevelComparison> levels;
};

/// Compares char(A), char(U^+), char((U^2)^+), char((U^3)^+) in order and
/// stops at the first difference. Both graphs must be simple, connected,
/// regular and of minimum degree >= 2.
DistinguishResult srg_distinguish(const Graph& g, const Graph& h);

}  // namespace qwz
