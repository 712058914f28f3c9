#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hn/graph.hpp>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using hn::Edge;
using hn::Horseshoe;
using hn::HorseshoeGraph;
using hn::Tri;

namespace {

hn::GroupWord W(const std::string& s) { return hn::parse_word(2, s); }

Horseshoe hs(std::string id, int period, const std::vector<std::string>& decks) {
    Horseshoe h{std::move(id), period, {}};
    for (const auto& d : decks) h.decks.push_back(W(d));
    return h;
}

// linear chain v0 -> v1 -> ... -> v_{n-1}
HorseshoeGraph chain(int n) {
    HorseshoeGraph g{2, {}, {}};
    for (int i = 0; i < n; ++i) g.horseshoes.push_back(hs("v" + std::to_string(i), 1, {"a1"}));
    for (int i = 0; i + 1 < n; ++i)
        g.edges.push_back(Edge{"v" + std::to_string(i), "v" + std::to_string(i + 1), 1, W("")});
    return g;
}

// vertex-level reflexive-transitive reachability by brute closure
std::vector<std::vector<bool>> brute_reach(const HorseshoeGraph& g) {
    int n = static_cast<int>(g.horseshoes.size());
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (const Edge& e : g.edges) r[hn::vertex_index(g, e.from)][hn::vertex_index(g, e.to)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
}

}  // namespace

TEST_CASE("graph validation") {
    HorseshoeGraph g = chain(2);
    CHECK_NOTHROW(hn::validate_graph(g));
    HorseshoeGraph bad = g;
    bad.horseshoes.push_back(hs("v0", 1, {"a1"}));
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.horseshoes[0].id = "";
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.horseshoes[0].period = 0;
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.horseshoes[0].decks.clear();
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.horseshoes[0].decks[0].letters = {5};   // a3 does not exist at genus 2
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.edges[0].to = "nowhere";
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.edges[0].n = 0;
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
    bad = g;
    bad.genus = 1;
    CHECK_THROWS_AS(hn::validate_graph(bad), std::invalid_argument);
}

TEST_CASE("self loops materialize once per deck") {
    HorseshoeGraph g{2, {hs("h", 3, {"a1", "b1"})}, {}};
    hn::materialize_self_loops(g);
    REQUIRE(g.edges.size() == 2);
    for (const Edge& e : g.edges) {
        CHECK(e.from == "h");
        CHECK(e.to == "h");
        CHECK(e.n == 3);
    }
    CHECK(g.edges[0].word.letters == W("a1").letters);
    CHECK(g.edges[1].word.letters == W("b1").letters);
    hn::materialize_self_loops(g);
    CHECK(g.edges.size() == 2);   // idempotent
}

TEST_CASE("vertex lookup") {
    HorseshoeGraph g = chain(3);
    CHECK(hn::vertex_index(g, "v0") == 0);
    CHECK(hn::vertex_index(g, "v2") == 2);
    CHECK(hn::vertex_index(g, "w") == -1);
}

TEST_CASE("deck speeds divide translation length by the period") {
    hn::FuchsianRep rep = hn::fuchsian_representation(2);
    Horseshoe h = hs("h", 2, {"a1", "a1 b1"});
    std::vector<double> s = hn::deck_speeds(rep, h);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == doctest::Approx(hn::translation_length(hn::evaluate(rep, W("a1"))) / 2.0));
    CHECK(s[1] == doctest::Approx(hn::translation_length(hn::evaluate(rep, W("a1 b1"))) / 2.0));
    CHECK(s[0] > 0.0);
}

TEST_CASE("scc on a chain and a cycle") {
    HorseshoeGraph g = chain(3);
    hn::SccResult s = hn::scc(g);
    REQUIRE(s.members.size() == 3);
    CHECK(s.comp[0] < s.comp[1]);
    CHECK(s.comp[1] < s.comp[2]);
    CHECK(s.dag[s.comp[0]] == std::vector<int>{s.comp[1]});

    g.edges.push_back(Edge{"v2", "v0", 1, W("")});
    s = hn::scc(g);
    REQUIRE(s.members.size() == 1);
    CHECK(s.members[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("scc matches mutual reachability on random graphs") {
    std::mt19937 rng(50301);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 8;
        HorseshoeGraph g{2, {}, {}};
        for (int i = 0; i < n; ++i)
            g.horseshoes.push_back(hs("v" + std::to_string(i), 1, {"a1"}));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && coin(rng) == 0)
                    g.edges.push_back(
                        Edge{"v" + std::to_string(i), "v" + std::to_string(j), 1, W("")});
        auto reach = brute_reach(g);
        hn::SccResult s = hn::scc(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                bool mutual = reach[i][j] && reach[j][i];
                CHECK((s.comp[i] == s.comp[j]) == (mutual || i == j));
                CHECK(hn::class_reach(s, s.comp[i], s.comp[j]) == reach[i][j]);
            }
        // topological ids: every dag edge increases, members ascend
        for (std::size_t c = 0; c < s.dag.size(); ++c)
            for (int d : s.dag[c]) CHECK(static_cast<int>(c) < d);
        auto creach = hn::condensation_reach(s);
        for (std::size_t i = 0; i < s.members.size(); ++i)
            for (std::size_t j = 0; j < s.members.size(); ++j)
                CHECK(creach[i][j] ==
                      reach[s.members[i][0]][s.members[j][0]]);
    }
}

TEST_CASE("filtration lists reachable classes both ways") {
    hn::SccResult s = hn::scc(chain(3));
    hn::Filtration f = hn::filtration(s);
    CHECK(f.up[0] == std::vector<int>{0, 1, 2});
    CHECK(f.up[2] == std::vector<int>{2});
    CHECK(f.down[0] == std::vector<int>{0});
    CHECK(f.down[2] == std::vector<int>{0, 1, 2});
}

TEST_CASE("reduced order graph drops separated pairs") {
    hn::SccResult s = hn::scc(chain(3));
    auto no = [](int, int, int) { return Tri::No; };
    auto edges = hn::graph_T(s, no);
    REQUIRE(edges.size() == 3);
    CHECK((edges[0].from == 0 && edges[0].to == 1 && !edges[0].dashed));
    CHECK((edges[1].from == 0 && edges[1].to == 2 && !edges[1].dashed));
    CHECK((edges[2].from == 1 && edges[2].to == 2 && !edges[2].dashed));

    auto mid_yes = [](int i, int k, int j) {
        return (i == 0 && k == 1 && j == 2) ? Tri::Yes : Tri::No;
    };
    edges = hn::graph_T(s, mid_yes);
    REQUIRE(edges.size() == 2);
    CHECK((edges[0].from == 0 && edges[0].to == 1));
    CHECK((edges[1].from == 1 && edges[1].to == 2));

    auto mid_unknown = [](int i, int k, int j) {
        return (i == 0 && k == 1 && j == 2) ? Tri::Unknown : Tri::No;
    };
    edges = hn::graph_T(s, mid_unknown);
    REQUIRE(edges.size() == 3);
    CHECK((edges[1].from == 0 && edges[1].to == 2 && edges[1].dashed));
}

TEST_CASE("order check accepts a consistent scene") {
    hn::FuchsianRep rep = hn::fuchsian_representation(2);
    HorseshoeGraph g{2, {hs("h1", 1, {"a1", "b1"}), hs("h2", 1, {"a2", "b2"})},
                     {Edge{"h1", "h2", 2, W("")}}};
    hn::materialize_self_loops(g);
    hn::OrderReport r = hn::order_check(g, rep, 3);
    CHECK(r.antisymmetric);
    CHECK(r.mismatches.empty());
}

TEST_CASE("order check flags merge disagreements") {
    hn::FuchsianRep rep = hn::fuchsian_representation(2);
    // same axis set but dynamically separated
    HorseshoeGraph g{2, {hs("h1", 1, {"a1"}), hs("h2", 1, {"a1"})}, {}};
    hn::materialize_self_loops(g);
    hn::OrderReport r = hn::order_check(g, rep, 3);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].merged_by_geodesics);
    CHECK_FALSE(r.mismatches[0].merged_by_scc);
    CHECK(r.mismatches[0].vertex_a == "h1");
    CHECK(r.mismatches[0].vertex_b == "h2");

    // dynamically merged but geodesically separated
    HorseshoeGraph g2{2, {hs("h1", 1, {"a1"}), hs("h2", 1, {"a2"})},
                      {Edge{"h1", "h2", 2, W("")}, Edge{"h2", "h1", 2, W("")}}};
    hn::materialize_self_loops(g2);
    r = hn::order_check(g2, rep, 3);
    REQUIRE(r.mismatches.size() == 1);
    CHECK_FALSE(r.mismatches[0].merged_by_geodesics);
    CHECK(r.mismatches[0].merged_by_scc);
}
