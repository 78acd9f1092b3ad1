// qwz: quantum-walk transition matrices, graph zeta functions and their
// determinant identities from the command line.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwz/determinant.hpp"
#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"
#include "qwz/serialize.hpp"
#include "qwz/zeta.hpp"

namespace {

using namespace qwz;

enum ExitCode : int { kOk = 0, kInputError = 2, kIdentityViolation = 3, kResourceGuard = 4 };

struct InputOptions {
    std::string path;
    std::string graph6;
    std::string input_format = "auto";
};

struct Config {
    InputOptions input;
    std::string target = "U";
    std::string format = "json";
    double tolerance = kDefaultPairingTolerance;
    std::size_t order = 8;
    std::uint64_t seed = kDefaultSeed;
    std::string corpus = "builtin";
    std::size_t trials = 10;
    bool oracle = false;
    std::vector<std::string> pair;
    bool builtin_srg = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string first_content_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return line;
    }
    throw ParseError("graph6 file is empty");
}

Graph load_graph_file(const std::string& path, const std::string& format) {
    const std::string text = read_file(path);
    const bool graph6 =
        format == "graph6" || (format == "auto" && (ends_with(path, ".g6") || ends_with(path, ".graph6")));
    return graph6 ? parse_graph6(first_content_line(text)) : parse_edge_list(text);
}

Graph load_graph(const InputOptions& in) {
    if (!in.graph6.empty()) return parse_graph6(in.graph6);
    return load_graph_file(in.path, in.input_format);
}

Json config_header(const Config& c) {
    Json h = Json::object();
    h["tolerance"] = c.tolerance;
    h["order"] = c.order;
    h["seed"] = c.seed;
    return h;
}

Json graph_summary(const Graph& g) {
    Json j = Json::object();
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    return j;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_charpoly(const Config& c) {
    const Graph g = load_graph(c.input);
    const Operator op = parse_operator(c.target);
    const RatPolynomial p = operator_charpoly(g, op);
    int status = kOk;
    Json doc = Json::object();
    doc["config"] = config_header(c);
    doc["graph"] = graph_summary(g);
    doc["target"] = std::string(operator_name(op));
    doc["charpoly"] = to_json(p);
    if (op == Operator::U) {
        const RationalFunction t_form = transition_charpoly_t_form(g);
        const bool matches = RationalFunction(p) == t_form;
        if (!matches) status = kIdentityViolation;
        Json factored = Json::object();
        factored["exponent"] = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count());
        const std::size_t n = g.vertex_count();
        const RationalMatrix identity = RationalMatrix::identity(n);
        factored["det"] = to_json(polymat_det(
            PolyMatrix::from_coefficients({identity, Rational(-2) * t_matrix(g), identity}), 2 * n));
        factored["matches"] = matches;
        doc["t_form"] = std::move(factored);
    }
    if (c.format == "text") {
        std::cout << "char(" << operator_name(op) << ") = " << p.to_string("x") << "\n";
    } else {
        emit(doc);
    }
    return status;
}

int cmd_spectrum(const Config& c) {
    const Graph g = load_graph(c.input);
    const Operator op = parse_operator(c.target);
    const RatPolynomial p = operator_charpoly(g, op);
    const SpectrumMultiset spectrum = roots(p, c.tolerance);
    double max_residual = 0.0;
    for (double r : normalized_residuals(p, spectrum.values)) max_residual = std::max(max_residual, r);

    std::optional<SpectrumCheck> check;
    const DegreeInfo info = degree_info(g);
    if (op == Operator::U && g.edge_count() >= g.vertex_count()) {
        check = check_t_spectrum_mapping(g, c.tolerance);
    } else if (op == Operator::UPlus && info.regular_degree && *info.regular_degree >= 2 && validate(g).connected) {
        check = check_a_spectrum_mapping(g, c.tolerance);
    }
    const int status = check && !check->verdict.equal ? kIdentityViolation : kOk;

    if (c.format == "csv") {
        std::cout << "re,im,operator\n" << std::setprecision(17);
        for (const Complex& z : spectrum.values) std::cout << z.real() + 0.0 << "," << z.imag() + 0.0 << "," << operator_name(op) << "\n";
        if (check) {
            for (const Complex& z : check->mapped.values)
                std::cout << z.real() + 0.0 << "," << z.imag() + 0.0 << "," << operator_name(op) << "-closed-form\n";
        }
        return status;
    }
    if (c.format == "text") {
        std::cout << "char(" << operator_name(op) << ") = " << p.to_string("x") << "\n" << std::setprecision(12);
        for (const Complex& z : spectrum.values) std::cout << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i\n";
        if (check) std::cout << "closed form " << (check->verdict.equal ? "matches" : "DIFFERS") << ", max pair distance "
                             << check->verdict.max_pair_distance << "\n";
        return status;
    }
    Json doc = Json::object();
    doc["config"] = config_header(c);
    doc["graph"] = graph_summary(g);
    doc["target"] = std::string(operator_name(op));
    doc["charpoly"] = to_json(p);
    doc["spectrum"] = to_json(spectrum);
    doc["max_normalized_residual"] = max_residual;
    if (check) {
        doc["closed_form"] = to_json(check->mapped);
        doc["verdict"] = Json::object();
        doc["verdict"]["equal"] = check->verdict.equal;
        doc["verdict"]["max_pair_distance"] = check->verdict.max_pair_distance;
    } else {
        doc["closed_form"] = nullptr;
        doc["verdict"] = nullptr;
    }
    emit(doc);
    return status;
}

int cmd_zeta(const Config& c) {
    const Graph g = load_graph(c.input);
    const ArcSet arcs(g);
    const RatPolynomial edge_form = ihara_reciprocal_edge_form(arcs);
    const RationalFunction bass_form = ihara_reciprocal_bass_form(g);
    const bool equal = RationalFunction(edge_form) == bass_form;
    const PowerSeries series = PowerSeries::from_polynomial(edge_form, c.order).inverse();

    Json doc = Json::object();
    doc["config"] = config_header(c);
    doc["graph"] = graph_summary(g);
    doc["edge_form"] = to_json(edge_form);
    doc["bass_form"] = to_json(bass_form);
    doc["equal"] = equal;
    Json coeffs = Json::array();
    for (const auto& x : series.coefficients()) coeffs.push_back(to_pq_string(x));
    doc["series"] = std::move(coeffs);

    const bool admissible = arcs.size() <= kMaxOracleArcs && c.order <= kMaxOracleOrder;
    bool oracle_equal = true;
    if (c.oracle || admissible) {
        const PowerSeries product = euler_product_oracle(arcs, c.order);  // ResourceGuard -> exit 4
        oracle_equal = product == series;
        Json oracle = Json::object();
        Json product_coeffs = Json::array();
        for (const auto& x : product.coefficients()) product_coeffs.push_back(to_pq_string(x));
        oracle["series"] = std::move(product_coeffs);
        oracle["equal"] = oracle_equal;
        doc["oracle"] = std::move(oracle);
    } else {
        doc["oracle"] = nullptr;
    }
    if (c.format == "text") {
        std::cout << "edge form: " << edge_form.to_string("t") << "\n"
                  << "bass form " << (equal ? "matches" : "DIFFERS") << "\n";
    } else {
        emit(doc);
    }
    return equal && oracle_equal ? kOk : kIdentityViolation;
}

std::vector<CorpusEntry> load_corpus(const Config& c) {
    if (c.corpus == "builtin") return builtin_corpus(c.seed);
    if (c.corpus == "srg") {
        auto pair = builtin_srg_pair();
        return {pair[0], pair[1]};
    }
    // One graph6 string per line.
    std::vector<CorpusEntry> out;
    std::istringstream in(read_file(c.corpus));
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(make_entry("line-" + std::to_string(++index), parse_graph6(line)));
    }
    if (out.empty()) throw ParseError("corpus file contains no graphs");
    return out;
}

int cmd_verify(const Config& c) {
    const auto corpus = load_corpus(c);
    for (const auto& entry : corpus) {
        if (!validate(entry.graph).connected) throw HypothesisError("corpus graph '" + entry.name + "' is disconnected");
    }
    const VerificationReport report = run_identity_suite(corpus, {c.seed, c.trials});
    if (c.format == "text") {
        std::cout << "tolerance " << c.tolerance << ", order " << c.order << "\n" << to_text(report);
    } else {
        Json doc = Json::object();
        doc["config"] = config_header(c);
        doc["corpus"] = c.corpus;
        doc["graphs"] = corpus.size();
        doc["report"] = to_json(report);
        emit(doc);
    }
    return report.all_passed() ? kOk : kIdentityViolation;
}

int cmd_distinguish(const Config& c) {
    Graph first = complete_graph(1), second = complete_graph(1);
    std::string first_name, second_name;
    if (c.builtin_srg) {
        auto pair = builtin_srg_pair();
        first = pair[0].graph;
        second = pair[1].graph;
        first_name = pair[0].name;
        second_name = pair[1].name;
    } else {
        if (c.pair.size() != 2) throw ParseError("distinguish needs two graph files (or --builtin-srg)");
        first = load_graph_file(c.pair[0], c.input.input_format);
        second = load_graph_file(c.pair[1], c.input.input_format);
        first_name = c.pair[0];
        second_name = c.pair[1];
    }
    const DistinguishResult result = srg_distinguish(first, second);
    if (c.format == "text") {
        std::cout << (result.level ? "level " + std::to_string(*result.level) : std::string("indistinct")) << "\n";
    } else {
        Json doc = Json::object();
        doc["config"] = config_header(c);
        doc["result"] = to_json(result, first_name, second_name);
        emit(doc);
    }
    return kOk;
}

void add_graph_input(CLI::App* cmd, Config& c) {
    auto* input = cmd->add_option("--input", c.input.path, "Graph file (edge list, or graph6 for .g6)");
    auto* g6 = cmd->add_option("--graph6", c.input.graph6, "Inline graph6 string");
    input->excludes(g6);
    g6->excludes(input);
    cmd->add_option("--input-format", c.input.input_format, "edgelist, graph6 or auto")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
}

void add_common(CLI::App* cmd, Config& c, std::vector<std::string> formats) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--tolerance", c.tolerance, "Spectrum pairing tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--order", c.order, "Series truncation order")->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    cmd->add_option("--seed", c.seed, "Seed for random weights and corpus graphs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum-walk transition matrices, graph zeta functions and their determinant identities"};
    app.require_subcommand(1);
    Config c;

    auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of a graph operator");
    add_graph_input(charpoly, c);
    add_common(charpoly, c, {"json", "text"});
    charpoly->add_option("--target", c.target, "U, U+, U2+, U3+, A, T or B-J0")
        ->check(CLI::IsMember({"U", "U+", "U2+", "U3+", "A", "T", "B-J0"}));

    auto* spectrum = app.add_subcommand("spectrum", "Spectrum from the exact char poly, with closed-form check");
    add_graph_input(spectrum, c);
    add_common(spectrum, c, {"json", "csv", "text"});
    spectrum->add_option("--target", c.target, "U, U+, U2+, U3+, A, T or B-J0")
        ->check(CLI::IsMember({"U", "U+", "U2+", "U3+", "A", "T", "B-J0"}));

    auto* zeta = app.add_subcommand("zeta", "Ihara zeta reciprocal in edge and vertex form");
    add_graph_input(zeta, c);
    add_common(zeta, c, {"json", "text"});
    zeta->add_flag("--oracle", c.oracle, "Require the prime-cycle oracle (exit 4 if the graph is too large)");

    auto* verify = app.add_subcommand("verify", "Run the identity suite over a corpus");
    add_common(verify, c, {"json", "text"});
    verify->add_option("--corpus", c.corpus, "builtin, srg, or a file of graph6 lines");
    verify->add_option("--trials", c.trials, "Random weight matrices per graph");

    auto* distinguish = app.add_subcommand("distinguish", "Compare two regular graphs level by level");
    add_common(distinguish, c, {"json", "text"});
    distinguish->add_option("graphs", c.pair, "Two graph files")->expected(0, 2);
    distinguish->add_flag("--builtin-srg", c.builtin_srg, "Use the embedded Shrikhande / 4x4 rook pair");
    distinguish->add_option("--input-format", c.input.input_format, "edgelist, graph6 or auto")
        ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    auto needs_input = [&](CLI::App* cmd) {
        if (cmd->parsed() && c.input.path.empty() && c.input.graph6.empty()) {
            std::cerr << "error: one of --input or --graph6 is required\n";
            return true;
        }
        return false;
    };
    if (needs_input(charpoly) || needs_input(spectrum) || needs_input(zeta)) return kInputError;

    try {
        if (charpoly->parsed()) return cmd_charpoly(c);
        if (spectrum->parsed()) return cmd_spectrum(c);
        if (zeta->parsed()) return cmd_zeta(c);
        if (verify->parsed()) return cmd_verify(c);
        if (distinguish->parsed()) return cmd_distinguish(c);
    } catch (const ResourceGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const IdentityViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIdentityViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
