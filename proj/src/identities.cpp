#include <chrono>
#include <functional>
#include <stdexcept>

#include "qwz/determinant.hpp"
#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"
#include "qwz/walk.hpp"
#include "qwz/zeta.hpp"

namespace qwz {

Operator parse_operator(std::string_view name) {
    if (name == "U") return Operator::U;
    if (name == "U+") return Operator::UPlus;
    if (name == "U2+") return Operator::U2Plus;
    if (name == "U3+") return Operator::U3Plus;
    if (name == "A") return Operator::A;
    if (name == "T") return Operator::T;
    if (name == "B-J0") return Operator::EdgeMatrix;
    throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

std::string_view operator_name(Operator op) {
    switch (op) {
        case Operator::U: return "U";
        case Operator::UPlus: return "U+";
        case Operator::U2Plus: return "U2+";
        case Operator::U3Plus: return "U3+";
        case Operator::A: return "A";
        case Operator::T: return "T";
        case Operator::EdgeMatrix: return "B-J0";
    }
    return "?";
}

RationalMatrix operator_matrix(const Graph& g, Operator op) {
    const ArcSet arcs(g);
    switch (op) {
        case Operator::U: return transition_matrix(g, arcs);
        case Operator::UPlus: return power_support(transition_matrix(g, arcs), 1);
        case Operator::U2Plus: return power_support(transition_matrix(g, arcs), 2);
        case Operator::U3Plus: return power_support(transition_matrix(g, arcs), 3);
        case Operator::A: return adjacency_matrix(g);
        case Operator::T: return t_matrix(g);
        case Operator::EdgeMatrix: return edge_matrices(arcs).edge_matrix();
    }
    throw std::invalid_argument("unknown operator");
}

RatPolynomial operator_charpoly(const Graph& g, Operator op) { return charpoly_exact(operator_matrix(g, op)); }

namespace {

const RatPolynomial kLambdaSquaredMinusOne{-1, 0, 1};

long excess(const Graph& g) { return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()); }

RationalFunction with_prefactor(const Graph& g, const RatPolynomial& det) {
    return RationalFunction::power(kLambdaSquaredMinusOne, excess(g)) * RationalFunction(det);
}

}  // namespace

RationalFunction transition_charpoly_t_form(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const RationalMatrix identity = RationalMatrix::identity(n);
    const PolyMatrix p = PolyMatrix::from_coefficients({identity, Rational(-2) * t_matrix(g), identity});
    return with_prefactor(g, polymat_det(p, 2 * n));
}

RationalFunction transition_charpoly_degree_form(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const RationalMatrix d = degree_matrix(g);
    const PolyMatrix p = PolyMatrix::from_coefficients({d, Rational(-2) * adjacency_matrix(g), d});
    Rational degree_product = 1;
    for (std::size_t v = 0; v < n; ++v) degree_product *= d(v, v);
    if (sgn(degree_product) == 0) throw HypothesisError("graph has an isolated vertex");
    return with_prefactor(g, polymat_det(p, 2 * n) * Rational(1 / degree_product));
}

RationalFunction positive_support_charpoly_form(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const RationalMatrix identity = RationalMatrix::identity(n);
    const PolyMatrix p =
        PolyMatrix::from_coefficients({degree_matrix(g) - identity, Rational(-1) * adjacency_matrix(g), identity});
    return with_prefactor(g, polymat_det(p, 2 * n));
}

SpectrumCheck check_t_spectrum_mapping(const Graph& g, double tolerance) {
    SpectrumCheck out;
    out.computed = roots(operator_charpoly(g, Operator::U), tolerance);
    const SpectrumMultiset t_spectrum = roots(operator_charpoly(g, Operator::T), tolerance);
    out.mapped = map_T_spectrum(real_parts(t_spectrum), g.edge_count(), g.vertex_count(), tolerance);
    out.verdict = compare(out.computed, out.mapped);
    return out;
}

SpectrumCheck check_a_spectrum_mapping(const Graph& g, double tolerance) {
    const DegreeInfo info = degree_info(g);
    if (!info.regular_degree) throw HypothesisError("the adjacency-spectrum mapping needs a regular graph");
    if (!validate(g).connected) throw HypothesisError("the adjacency-spectrum mapping needs a connected graph");
    SpectrumCheck out;
    out.computed = roots(operator_charpoly(g, Operator::UPlus), tolerance);
    const SpectrumMultiset a_spectrum = roots(operator_charpoly(g, Operator::A), tolerance);
    out.mapped = map_A_spectrum(real_parts(a_spectrum), *info.regular_degree, g.edge_count(), g.vertex_count(),
                                tolerance);
    out.verdict = compare(out.computed, out.mapped);
    return out;
}

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

const IdentityCheck& VerificationReport::check(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("no identity named '" + std::string(name) + "' in the report");
}

std::uint64_t weight_seed(std::uint64_t seed, std::size_t index, std::size_t trial) {
    return seed * 1000003ULL + static_cast<std::uint64_t>(index) * 1009ULL + trial;
}

namespace {

std::string describe(const RationalFunction& f) {
    if (f.is_polynomial()) return f.num().to_string("x");
    return "(" + f.num().to_string("x") + ") / (" + f.den().to_string("x") + ")";
}

// Outcome of one identity on one graph.
struct Outcome {
    enum class Kind { Pass, Fail, Skip } kind = Kind::Pass;
    std::string residual;

    static Outcome pass() { return {}; }
    static Outcome skip() { return {Kind::Skip, {}}; }
    static Outcome fail(std::string residual) { return {Kind::Fail, std::move(residual)}; }
};

Outcome compare_functions(const RationalFunction& lhs, const RationalFunction& rhs) {
    if (lhs == rhs) return Outcome::pass();
    return Outcome::fail(describe(lhs - rhs));
}

using IdentityFn = std::function<Outcome(const CorpusEntry&, std::size_t index)>;

IdentityFn identity_for(std::string_view name, const SuiteOptions& options) {
    if (name == "charpoly_t_form") {
        return [](const CorpusEntry& e, std::size_t) {
            return compare_functions(operator_charpoly(e.graph, Operator::U), transition_charpoly_t_form(e.graph));
        };
    }
    if (name == "charpoly_degree_form") {
        return [](const CorpusEntry& e, std::size_t) {
            return compare_functions(operator_charpoly(e.graph, Operator::U),
                                     transition_charpoly_degree_form(e.graph));
        };
    }
    if (name == "bass_identity") {
        return [](const CorpusEntry& e, std::size_t) {
            return compare_functions(ihara_reciprocal_edge_form(ArcSet(e.graph)), ihara_reciprocal_bass_form(e.graph));
        };
    }
    if (name == "weighted_bass_identity") {
        return [options](const CorpusEntry& e, std::size_t index) {
            const ArcSet arcs(e.graph);
            for (std::size_t trial = 0; trial < options.weight_trials; ++trial) {
                const WeightedMatrix w = random_weights(e.graph, weight_seed(options.seed, index, trial));
                const WeightedZetaForms forms = weighted_zeta_reciprocal(e.graph, arcs, w);
                Outcome o = compare_functions(forms.edge_form, forms.bass_form);
                if (o.kind == Outcome::Kind::Fail) {
                    o.residual = "weight trial " + std::to_string(trial) + ": " + o.residual;
                    return o;
                }
            }
            return Outcome::pass();
        };
    }
    if (name == "edge_matrix_support") {
        return [](const CorpusEntry& e, std::size_t) {
            if (!e.tags.simple || !e.tags.md2) return Outcome::skip();
            return check_edge_matrix_support(e.graph) ? Outcome::pass()
                                                      : Outcome::fail("B - J0 differs from (transpose U)^+");
        };
    }
    if (name == "positive_support_charpoly") {
        return [](const CorpusEntry& e, std::size_t) {
            if (!e.tags.md2) return Outcome::skip();
            return compare_functions(operator_charpoly(e.graph, Operator::UPlus),
                                     positive_support_charpoly_form(e.graph));
        };
    }
    if (name == "transition_orthogonality") {
        return [](const CorpusEntry& e, std::size_t) {
            const RationalMatrix u = transition_matrix(e.graph, ArcSet(e.graph));
            const RationalMatrix gram = u.transpose() * u;
            if (gram == RationalMatrix::identity(u.rows())) return Outcome::pass();
            return Outcome::fail("transpose(U) * U differs from the identity");
        };
    }
    if (name == "t_row_stochastic") {
        return [](const CorpusEntry& e, std::size_t) {
            const RationalMatrix t = t_matrix(e.graph);
            if (!(t == t_matrix_from_adjacency(e.graph))) return Outcome::fail("T differs from D^-1 A");
            for (std::size_t r = 0; r < t.rows(); ++r)
                if (t.row_sum(r) != 1) return Outcome::fail("row " + std::to_string(r) + " of T sums to " +
                                                            to_pq_string(t.row_sum(r)));
            return Outcome::pass();
        };
    }
    throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

}  // namespace

VerificationReport run_identity_suite(const std::vector<CorpusEntry>& corpus, const SuiteOptions& options) {
    VerificationReport report;
    report.seed = options.seed;
    report.weight_trials = options.weight_trials;
    for (std::string_view name : kIdentityNames) {
        const auto started = std::chrono::steady_clock::now();
        IdentityCheck check;
        check.name = std::string(name);
        const IdentityFn identity = identity_for(name, options);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            Outcome outcome;
            try {
                outcome = identity(corpus[i], i);
            } catch (const Error& err) {
                outcome = Outcome::fail(std::string("error: ") + err.what());
            }
            switch (outcome.kind) {
                case Outcome::Kind::Pass: ++check.checked; break;
                case Outcome::Kind::Skip: ++check.skipped; break;
                case Outcome::Kind::Fail:
                    ++check.checked;
                    if (!check.witness) check.witness = Witness{corpus[i].name, std::move(outcome.residual)};
                    break;
            }
        }
        check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        report.checks.push_back(std::move(check));
    }
    return report;
}

DistinguishResult srg_distinguish(const Graph& g, const Graph& h) {
    for (const Graph* graph : {&g, &h}) {
        const ValidationReport report = validate(*graph);
        if (!report.simple) throw HypothesisError("discrimination requires simple graphs");
        if (!report.connected) throw HypothesisError("discrimination requires connected graphs");
        if (!report.md2) throw HypothesisError("discrimination requires minimum degree >= 2");
        if (!degree_info(*graph).regular_degree) throw HypothesisError("discrimination requires regular graphs");
    }
    DistinguishResult result;
    constexpr std::array<Operator, 4> levels = {Operator::A, Operator::UPlus, Operator::U2Plus, Operator::U3Plus};
    for (int power = 0; power < 4; ++power) {
        LevelComparison level;
        level.power = power;
        level.first = operator_charpoly(g, levels[power]);
        level.second = operator_charpoly(h, levels[power]);
        level.equal = level.first == level.second;
        result.levels.push_back(std::move(level));
        if (!result.levels.back().equal) {
            result.level = power;
            break;
        }
    }
    return result;
}

}  // namespace qwz
