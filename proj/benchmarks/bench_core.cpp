#include "hn/classes.hpp"
#include "hn/fuchsian.hpp"
#include "hn/graph.hpp"
#include "hn/polytope.hpp"
#include "hn/realize.hpp"

#include <benchmark/benchmark.h>

namespace {

hn::GroupWord W(const std::string& s) { return hn::parse_word(2, s); }

// Two period-1 horseshoes around the handles, joined both ways.
hn::HorseshoeGraph two_loop_graph() {
    hn::HorseshoeGraph g;
    g.genus = 2;
    g.horseshoes.push_back({"h1", 1, {W("a1"), W("b1")}});
    g.horseshoes.push_back({"h2", 1, {W("a2"), W("b2")}});
    g.edges.push_back({"h1", "h2", 2, {2, {}}});
    g.edges.push_back({"h2", "h1", 2, {2, {}}});
    hn::materialize_self_loops(g);
    return g;
}

hn::HorseshoeGraph chain_graph(int m) {
    hn::HorseshoeGraph g;
    g.genus = 2;
    const char* decks[4] = {"a1", "b1", "a2", "b2"};
    for (int i = 0; i < m; ++i) {
        std::string id = "h" + std::to_string(i);
        g.horseshoes.push_back({id, 1, {W(decks[i % 4]), W(decks[(i + 1) % 4])}});
        if (i > 0) g.edges.push_back({"h" + std::to_string(i - 1), id, 1, {2, {}}});
    }
    hn::materialize_self_loops(g);
    return g;
}

void BM_PolytopeContains(benchmark::State& state) {
    hn::HorseshoeGraph g = two_loop_graph();
    hn::SccResult s = hn::scc(g);
    hn::RatPolytope p = hn::class_polytope(g, s, 0);
    hn::RatVec q = hn::parse_vec("1/3,1/5,0,0", 4);
    for (auto _ : state) benchmark::DoNotOptimize(hn::polytope_contains(p, q));
}
BENCHMARK(BM_PolytopeContains);

void BM_GeodesicsCross(benchmark::State& state) {
    hn::FuchsianRep rep = hn::fuchsian_representation(2);
    hn::OrientedGeodesic g1 = hn::word_axis(rep, W("a1 b1"));
    hn::OrientedGeodesic g2 = hn::word_axis(rep, W("a2 B1 a1"));
    for (auto _ : state) benchmark::DoNotOptimize(hn::geodesics_cross(g1, g2));
}
BENCHMARK(BM_GeodesicsCross);

void BM_TranslatesCross(benchmark::State& state) {
    hn::FuchsianRep rep = hn::fuchsian_representation(2);
    hn::GroupWord w1 = W("a1 b1");
    hn::GroupWord w2 = W("a2 b2");
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hn::translates_cross(rep, w1, w2, depth));
}
BENCHMARK(BM_TranslatesCross)->Arg(2)->Arg(3);

void BM_RotGraph(benchmark::State& state) {
    hn::HorseshoeGraph g = chain_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        hn::SccResult s = hn::scc(g);
        benchmark::DoNotOptimize(hn::rot_graph(g, s));
    }
}
BENCHMARK(BM_RotGraph)->Arg(4)->Arg(8);

void BM_RealizeFinite(benchmark::State& state) {
    hn::HorseshoeGraph g = two_loop_graph();
    hn::RatVec rho = hn::parse_vec("1/3,1/3,1/6,1/6", 4);
    hn::Rat eps(1, 50);
    for (auto _ : state) benchmark::DoNotOptimize(hn::realize_finite(g, rho, eps));
}
BENCHMARK(BM_RealizeFinite);

void BM_StreamPrefix(benchmark::State& state) {
    hn::HorseshoeGraph g = two_loop_graph();
    hn::RatVec rho = hn::parse_vec("1/2,1/4,1/8,1/8", 4);
    for (auto _ : state) {
        hn::RealizeStream stream(g, rho);
        long long acc = 0;
        for (int i = 0; i < 1000; ++i) acc += stream.next();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_StreamPrefix);

}  // namespace

BENCHMARK_MAIN();
