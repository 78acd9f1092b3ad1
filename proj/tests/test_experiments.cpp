#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "qwz/errors.hpp"
#include "qwz/experiments.hpp"
#include "qwz/serialize.hpp"

using namespace qwz;

TEST_CASE("builtin corpus contents and tags") {
    const auto corpus = builtin_corpus();
    CHECK(corpus.size() == 44);
    std::size_t random_count = 0;
    for (const auto& e : corpus) {
        const ValidationReport report = validate(e.graph);
        CHECK(report.connected);
        CHECK(e.tags.simple == report.simple);
        CHECK(e.tags.md2 == report.md2);
        CHECK(e.tags.regular_k == degree_info(e.graph).regular_degree);
        CHECK(e.tags.tree == (e.graph.edge_count() + 1 == e.graph.vertex_count()));
        if (e.name.rfind("random-", 0) == 0) {
            ++random_count;
            CHECK(e.graph.vertex_count() >= 4);
            CHECK(e.graph.vertex_count() <= 8);
        }
        CHECK(2 * e.graph.edge_count() <= 96);
    }
    CHECK(random_count == 20);
    CHECK(corpus[0].name == "K2");
    // Fixed seed, fixed corpus.
    const auto again = builtin_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(corpus[i].graph == again[i].graph);
    const auto other = builtin_corpus(7);
    bool differs = false;
    for (std::size_t i = 0; i < corpus.size(); ++i) differs = differs || !(corpus[i].graph == other[i].graph);
    CHECK(differs);
}

TEST_CASE("strongly regular parameters") {
    CHECK(srg_parameters(petersen_graph()) == SrgParameters{10, 3, 0, 1});
    CHECK(srg_parameters(complete_bipartite_graph(3, 3)) == SrgParameters{6, 3, 0, 3});
    CHECK(srg_parameters(cycle_graph(5)) == SrgParameters{5, 2, 0, 1});
    CHECK_FALSE(srg_parameters(cycle_graph(6)).has_value());
    CHECK_FALSE(srg_parameters(complete_graph(5)).has_value());
    CHECK_FALSE(srg_parameters(path_graph(4)).has_value());
}

TEST_CASE("embedded SRG pair decodes to the Cayley-graph constructions") {
    const auto pair = builtin_srg_pair();
    CHECK(adjacency_matrix(pair[0].graph) == adjacency_matrix(shrikhande_graph()));
    CHECK(adjacency_matrix(pair[1].graph) == adjacency_matrix(rook_graph_4x4()));
    CHECK(encode_graph6(shrikhande_graph()) == kShrikhandeGraph6);
    CHECK(encode_graph6(rook_graph_4x4()) == kRook4x4Graph6);
    for (const auto& e : pair) {
        CHECK(e.tags.srg == SrgParameters{16, 6, 2, 2});
        CHECK(e.graph.edge_count() == 48);
    }
}

TEST_CASE("operator names") {
    for (std::string_view name : {"U", "U+", "U2+", "U3+", "A", "T", "B-J0"})
        CHECK(operator_name(parse_operator(name)) == name);
    CHECK_THROWS_AS(parse_operator("U4+"), std::invalid_argument);
}

TEST_CASE("closed-form char polys") {
    const Graph k4 = complete_graph(4);
    const RatPolynomial expected = RatPolynomial{-1, 0, 1}.pow(2) * RatPolynomial{-1, 1}.pow(2) *
                                   RatPolynomial{1, Rational(2, 3), 1}.pow(3);
    CHECK(operator_charpoly(k4, Operator::U) == expected);
    CHECK(transition_charpoly_t_form(k4).as_polynomial() == expected);
    CHECK(transition_charpoly_degree_form(k4).as_polynomial() == expected);

    // Tree: the (x^2 - 1)^{-1} prefactor divides out exactly.
    const Graph p3 = path_graph(3);
    CHECK(operator_charpoly(p3, Operator::U) == RatPolynomial{-1, 0, 0, 0, 1});
    CHECK(transition_charpoly_t_form(p3).as_polynomial() == RatPolynomial{-1, 0, 0, 0, 1});

    CHECK(positive_support_charpoly_form(petersen_graph()).as_polynomial() ==
          operator_charpoly(petersen_graph(), Operator::UPlus));
}

TEST_CASE("identity suite passes on a small corpus") {
    std::vector<CorpusEntry> corpus;
    corpus.push_back(make_entry("K4", complete_graph(4)));
    corpus.push_back(make_entry("P3", path_graph(3)));
    corpus.push_back(make_entry("doubled", doubled_edge_triangle()));
    corpus.push_back(make_entry("K2,3", complete_bipartite_graph(2, 3)));
    const VerificationReport report = run_identity_suite(corpus, {42, 2});
    CHECK(report.all_passed());
    CHECK(report.checks.size() == kIdentityNames.size());
    CHECK(report.check("edge_matrix_support").checked == 2);  // K4, K2,3
    CHECK(report.check("edge_matrix_support").skipped == 2);
    CHECK(report.check("positive_support_charpoly").checked == 3);
    CHECK(report.check("charpoly_t_form").checked == 4);

    const Json j = to_json(report);
    CHECK(j["all_passed"] == true);
    CHECK(j["checks"].size() == kIdentityNames.size());
    CHECK(to_json(run_identity_suite(corpus, {42, 2})).dump() == j.dump());
    CHECK(to_text(report).find("bass_identity") != std::string::npos);
}

TEST_CASE("identity suite reports graphs outside an identity's hypotheses as failures with witnesses") {
    // A disconnected graph cannot have a Betti number; the suite records it.
    std::vector<CorpusEntry> corpus{make_entry("two-triangles", Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}))};
    const VerificationReport report = run_identity_suite(corpus, {42, 1});
    const IdentityCheck& bass = report.check("bass_identity");
    CHECK_FALSE(bass.passed());
    REQUIRE(bass.witness.has_value());
    CHECK(bass.witness->graph == "two-triangles");
    CHECK_FALSE(report.all_passed());
}

TEST_CASE("srg_distinguish") {
    const DistinguishResult k4_c4 = srg_distinguish(complete_graph(4), cycle_graph(4));
    REQUIRE(k4_c4.level.has_value());
    CHECK(*k4_c4.level == 0);
    CHECK(k4_c4.levels.size() == 1);
    CHECK(k4_c4.levels[0].first == RatPolynomial{-3, -8, -6, 0, 1});
    CHECK(k4_c4.levels[0].second == RatPolynomial{0, 0, -4, 0, 1});

    const DistinguishResult same = srg_distinguish(petersen_graph(), petersen_graph());
    CHECK_FALSE(same.level.has_value());
    CHECK(same.levels.size() == 4);

    CHECK_THROWS_AS(srg_distinguish(path_graph(4), cycle_graph(4)), HypothesisError);
    CHECK_THROWS_AS(srg_distinguish(doubled_edge_triangle(), cycle_graph(3)), HypothesisError);
    CHECK_THROWS_AS(srg_distinguish(complete_bipartite_graph(2, 3), cycle_graph(5)), HypothesisError);
}

TEST_CASE("srg_distinguish is symmetric") {
    const Graph a = complete_bipartite_graph(3, 3);
    const Graph b = cycle_graph(6);
    const DistinguishResult ab = srg_distinguish(a, b);
    const DistinguishResult ba = srg_distinguish(b, a);
    CHECK(ab.level == ba.level);
    for (std::size_t i = 0; i < ab.levels.size(); ++i) {
        CHECK(ab.levels[i].first == ba.levels[i].second);
        CHECK(ab.levels[i].second == ba.levels[i].first);
    }
}

TEST_CASE("relabelled copies are indistinct at every level") {
    const Graph g = petersen_graph();
    std::mt19937_64 engine(42);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), engine);
        const DistinguishResult result = srg_distinguish(g, relabel(g, perm));
        CHECK_FALSE(result.level.has_value());
    }
}

TEST_CASE("Petersen (U^3)^+ char poly regression fixture") {
    const std::vector<long long> expected = {
        0, 0, 0, 0, -81537269760LL, 76101451776LL, 106451435520LL, -98146713600LL, -68073553920LL,
        51883540480LL, 31073501184LL, -13746831360LL, -11006115840LL, 1336934400LL, 2753495040LL, 316407808LL,
        -419758080LL, -142540800LL, 26460160LL, 24330240LL, 2472960LL, -1894400LL, -641280LL, 7680LL, 46720LL,
        8832LL, -480LL, -480LL, -60LL, 0, 1};
    const RatPolynomial p = operator_charpoly(petersen_graph(), Operator::U3Plus);
    REQUIRE(p.degree() == 30);
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(p.coeff(i) == Rational(Integer(std::to_string(expected[i]))));
}
