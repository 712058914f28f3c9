#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hn/lp.hpp>
#include <hn/realize.hpp>

#include <stdexcept>
#include <string>
#include <vector>

using hn::Edge;
using hn::Horseshoe;
using hn::HorseshoeGraph;
using hn::Rat;
using hn::RatVec;

namespace {

hn::GroupWord W(const std::string& s) { return hn::parse_word(2, s); }

Horseshoe hs(std::string id, int period, const std::vector<std::string>& decks) {
    Horseshoe h{std::move(id), period, {}};
    for (const auto& d : decks) h.decks.push_back(W(d));
    return h;
}

// strongly connected pair of horseshoes carrying all four generator loops:
// rotation polytope = the probability simplex on the four coordinates
HorseshoeGraph loops() {
    HorseshoeGraph g{2, {hs("h1", 1, {"a1", "b1"}), hs("h2", 1, {"a2", "b2"})},
                     {Edge{"h1", "h2", 2, W("")}, Edge{"h2", "h1", 2, W("")}}};
    hn::materialize_self_loops(g);   // appends edges 2..5: a1, b1, a2, b2 loops
    return g;
}

RatVec qvec(long long a, long long b, long long c, long long d, long long den) {
    return {Rat(a, den), Rat(b, den), Rat(c, den), Rat(d, den)};
}

Rat pow2(int k) { return k >= 0 ? Rat(1LL << k) : Rat(1, 1LL << (-k)); }

// exact displacement and elapsed time bookkeeping for emitted edges
struct Tally {
    RatVec disp = RatVec(4, Rat(0));
    Rat time = Rat(0);

    void add(const HorseshoeGraph& g, int e) {
        const Edge& ed = g.edges[static_cast<std::size_t>(e)];
        auto ab = hn::abelianize(ed.word);
        for (std::size_t i = 0; i < 4; ++i) disp[i] += Rat(ab[i]);
        time += Rat(ed.n);
    }

    Rat dev(const RatVec& rho) const {
        Rat m(0);
        for (std::size_t i = 0; i < 4; ++i) m = std::max(m, hn::rat_abs(disp[i] - time * rho[i]));
        return m;
    }
};

}  // namespace

TEST_CASE("walk composability follows edge endpoints") {
    HorseshoeGraph g = loops();
    CHECK(hn::walk_composable(g, {}));
    CHECK(hn::walk_composable(g, {2, 2, 3}));
    CHECK(hn::walk_composable(g, {2, 0, 4, 1}));
    CHECK_FALSE(hn::walk_composable(g, {2, 1}));
    CHECK_FALSE(hn::walk_composable(g, {0, 0}));
    CHECK_FALSE(hn::walk_composable(g, {6}));
}

TEST_CASE("empirical rotation averages displacement over time") {
    HorseshoeGraph g = loops();
    CHECK(hn::empirical_rotation(g, {2, 3}) == qvec(1, 1, 0, 0, 2));
    CHECK(hn::empirical_rotation(g, {2}) == qvec(1, 0, 0, 0, 1));
    CHECK(hn::empirical_rotation(g, {0, 1}) == qvec(0, 0, 0, 0, 1));
    CHECK_THROWS_AS(hn::empirical_rotation(g, {}), std::invalid_argument);
    CHECK_THROWS_AS(hn::empirical_rotation(g, {2, 1}), std::invalid_argument);
    // connection words count toward displacement
    HorseshoeGraph g2 = loops();
    g2.edges[0].word = W("a2");
    CHECK(hn::empirical_rotation(g2, {0, 1}) == qvec(0, 0, 1, 0, 4));
}

TEST_CASE("bounded deviation check maximizes over prefixes") {
    HorseshoeGraph g = loops();
    std::vector<int> walk{2, 2, 2, 2};
    CHECK(hn::bounded_deviation_check(g, walk, qvec(1, 0, 0, 0, 1), Rat(0)));
    CHECK(hn::bounded_deviation_check(g, walk, qvec(1, 0, 0, 0, 2), Rat(2)));
    CHECK_FALSE(hn::bounded_deviation_check(g, walk, qvec(1, 0, 0, 0, 2), Rat(3, 2)));
    CHECK_THROWS_AS(hn::bounded_deviation_check(g, {2, 1}, qvec(0, 0, 0, 0, 1), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("simple cycles come out anchored and ordered") {
    HorseshoeGraph g = loops();
    auto cycles = hn::simple_cycles(g);
    REQUIRE(cycles.size() == 5);
    CHECK(cycles[0].edges == std::vector<int>{0, 1});
    CHECK(cycles[0].start == 0);
    CHECK(cycles[0].time == 4);
    CHECK(cycles[0].rho == qvec(0, 0, 0, 0, 1));
    CHECK(cycles[1].edges == std::vector<int>{2});
    CHECK(cycles[1].rho == qvec(1, 0, 0, 0, 1));
    CHECK(cycles[2].edges == std::vector<int>{3});
    CHECK(cycles[3].edges == std::vector<int>{4});
    CHECK(cycles[3].start == 1);
    CHECK(cycles[4].edges == std::vector<int>{5});
    CHECK(cycles[4].rho == qvec(0, 0, 0, 1, 1));
}

TEST_CASE("connector paths minimize time then edge sequence") {
    HorseshoeGraph g = loops();
    CHECK(hn::connector_path(g, 0, 1) == std::vector<int>{0});
    CHECK(hn::connector_path(g, 1, 0) == std::vector<int>{1});
    CHECK(hn::connector_path(g, 0, 0).empty());
    CHECK_THROWS_AS(hn::connector_path(g, 0, 7), std::out_of_range);
    // lexicographic tie between two equal-time edges
    HorseshoeGraph tie{2, {hs("u", 1, {"a1"}), hs("v", 1, {"a2"})},
                       {Edge{"u", "v", 2, W("b1")}, Edge{"u", "v", 2, W("b2")}}};
    CHECK(hn::connector_path(tie, 0, 1) == std::vector<int>{0});
    // unreachable target
    HorseshoeGraph oneway{2, {hs("u", 1, {"a1"}), hs("v", 1, {"a2"})},
                          {Edge{"u", "v", 2, W("")}}};
    hn::materialize_self_loops(oneway);
    CHECK_THROWS_AS(hn::connector_path(oneway, 1, 0), std::runtime_error);
}

TEST_CASE("cycle combinations reproduce interior targets exactly") {
    HorseshoeGraph g = loops();
    RatVec rho = qvec(1, 1, 1, 1, 4);
    hn::CycleApprox ca = hn::approximate_by_cycles(g, rho, Rat(1, 100));
    CHECK(ca.residual == Rat(0));
    CHECK(ca.combination == rho);
    Rat total(0);
    for (const Rat& w : ca.weights) {
        CHECK(w > 0);
        total += w;
    }
    CHECK(total == Rat(1));
    REQUIRE(ca.cycles.size() == ca.weights.size());
    RatVec sum(4, Rat(0));
    for (std::size_t i = 0; i < ca.cycles.size(); ++i)
        sum = hn::vec_add(sum, hn::vec_scale(ca.cycles[i].rho, ca.weights[i]));
    CHECK(sum == rho);
    // the lazy two-cycle dilutes: points below the simplex are still exact
    CHECK(hn::approximate_by_cycles(g, qvec(1, 1, 1, 1, 8), Rat(0)).residual == Rat(0));
}

TEST_CASE("cycle combinations fail beyond tolerance and need strong connectivity") {
    HorseshoeGraph g = loops();
    CHECK_THROWS_AS(hn::approximate_by_cycles(g, qvec(1, 1, 0, 0, 1), Rat(1, 100)),
                    std::runtime_error);
    HorseshoeGraph oneway{2, {hs("u", 1, {"a1"}), hs("v", 1, {"a2"})},
                          {Edge{"u", "v", 2, W("")}}};
    hn::materialize_self_loops(oneway);
    CHECK_THROWS_AS(hn::approximate_by_cycles(oneway, qvec(1, 0, 0, 0, 1), Rat(1)),
                    std::invalid_argument);
}

TEST_CASE("finite realization meets the doubled tolerance exactly") {
    HorseshoeGraph g = loops();
    RatVec rho = qvec(1, 1, 1, 1, 4);
    hn::FiniteRealization fr = hn::realize_finite(g, rho, Rat(1, 100));
    CHECK(fr.error <= Rat(2) * Rat(1, 100));
    REQUIRE(!fr.edges.empty());
    CHECK(hn::walk_composable(g, fr.edges));
    const Edge& first = g.edges[static_cast<std::size_t>(fr.edges.front())];
    const Edge& last = g.edges[static_cast<std::size_t>(fr.edges.back())];
    CHECK(first.from == last.to);   // closed walk
    CHECK(hn::empirical_rotation(g, fr.edges) == fr.rho_emitted);
    Tally t;
    for (int e : fr.edges) t.add(g, e);
    CHECK(t.dev(rho) == fr.error * t.time);   // error is the endpoint deviation
    RatVec diff = hn::vec_sub(fr.rho_emitted, rho);
    CHECK(hn::vec_inf_norm(diff) == fr.error);
    CHECK(fr.exponents.size() == fr.plan.cycles.size());

    // anchored at the second vertex on request
    hn::FiniteRealization fr2 = hn::realize_finite(g, rho, Rat(1, 100), 1);
    CHECK(g.edges[static_cast<std::size_t>(fr2.edges.front())].from == "h2");
    CHECK(g.edges[static_cast<std::size_t>(fr2.edges.back())].to == "h2");
    CHECK(fr2.error <= Rat(1, 50));

    // a polytope vertex is realized exactly
    hn::FiniteRealization fr3 = hn::realize_finite(g, qvec(1, 0, 0, 0, 1), Rat(1, 100));
    CHECK(fr3.error == Rat(0));
}

TEST_CASE("stream prefixes respect the certified stage bounds") {
    HorseshoeGraph g = loops();
    RatVec rho = qvec(1, 1, 1, 1, 4);
    hn::RealizeStream stream(g, rho);
    Tally t;
    int violations = 0;
    for (int i = 0; i < 3000; ++i) {
        t.add(g, stream.next());
        if (t.dev(rho) > stream.current_bound() * t.time) ++violations;
    }
    CHECK(violations == 0);
    CHECK(stream.emitted() == 3000);
    CHECK(stream.current_stage() >= 1);

    for (int s = 0; s <= std::min(stream.current_stage(), 3); ++s) {
        const hn::StageInfo& si = stream.stage_info(s);
        CHECK(si.stage == s);
        CHECK(si.reps >= 1);
        CHECK(si.word_time >= 1);
        CHECK(hn::walk_composable(g, si.word));
        const Edge& first = g.edges[static_cast<std::size_t>(si.word.front())];
        const Edge& last = g.edges[static_cast<std::size_t>(si.word.back())];
        CHECK(first.from == "h1");
        CHECK(last.to == "h1");
        CHECK(si.word_error <= pow2(-s));
        if (s >= 1) CHECK(si.prefix_bound == pow2(3 - s));
        if (s == 0) CHECK(si.prefix_bound >= Rat(8));
        CHECK(si.max_prefix_dev >= Rat(0));
    }
}

TEST_CASE("stream checkpoints replay identically") {
    HorseshoeGraph g = loops();
    RatVec rho = qvec(1, 1, 1, 1, 4);
    hn::RealizeStream a(g, rho);
    for (int i = 0; i < 500; ++i) a.next();
    hn::StreamCheckpoint cp = a.checkpoint();
    std::vector<int> tail;
    for (int i = 0; i < 200; ++i) tail.push_back(a.next());

    hn::RealizeStream b(g, rho);
    b.restore(cp);
    CHECK(b.emitted() == 500);
    for (int i = 0; i < 200; ++i) CHECK(b.next() == tail[static_cast<std::size_t>(i)]);

    hn::RealizeStream c(g, rho);
    hn::StreamCheckpoint bad{0, 1LL << 40, 0};
    CHECK_THROWS_AS(c.restore(bad), std::invalid_argument);
}

TEST_CASE("target outside the rotation set is rejected") {
    HorseshoeGraph g = loops();
    CHECK_THROWS_AS(hn::RealizeStream(g, qvec(1, 1, 0, 0, 1)), std::invalid_argument);
}

TEST_CASE("set stream sweeps the net after burn-in") {
    HorseshoeGraph g = loops();
    std::vector<RatVec> net{qvec(1, 1, 1, 1, 4), qvec(4, 2, 1, 1, 8), qvec(1, 1, 4, 2, 8)};
    Rat eps(1, 4);
    hn::RealizeSetStream stream(g, net, eps);
    CHECK(stream.burn_in() == -1);

    Tally t;
    std::int64_t guard = 1000000;
    while (stream.burn_in() < 0 && stream.emitted() < guard) t.add(g, stream.next());
    REQUIRE(stream.burn_in() >= 0);

    // run three more target changes, checking the polyline guarantee
    std::vector<Rat> vertex_min(net.size(), Rat(1000));
    int changes = 0;
    int last_target = stream.current_target();
    std::int64_t steps = 0;
    while (changes < 3 && stream.emitted() < guard) {
        t.add(g, stream.next());
        ++steps;
        if (stream.current_target() != last_target) {
            last_target = stream.current_target();
            ++changes;
        }
        RatVec emp(4);
        for (std::size_t i = 0; i < 4; ++i) emp[i] = t.disp[i] / t.time;
        for (std::size_t v = 0; v < net.size(); ++v) {
            Rat d(0);
            for (std::size_t i = 0; i < 4; ++i)
                d = std::max(d, hn::rat_abs(emp[i] - net[v][i]));
            vertex_min[v] = std::min(vertex_min[v], d);
        }
        if (steps % 64 == 0) {
            Rat best(1000);
            for (std::size_t v = 0; v < net.size(); ++v) {
                const RatVec& a = net[v];
                const RatVec& b = net[(v + 1) % net.size()];
                best = std::min(best, hn::dist_inf_to_segment(a, b, emp));
            }
            CHECK(best <= eps);
        }
    }
    REQUIRE(changes == 3);
    // a full sweep passes near every net vertex
    for (std::size_t v = 0; v < net.size(); ++v) CHECK(vertex_min[v] <= eps);
}

TEST_CASE("set stream restores by replay") {
    HorseshoeGraph g = loops();
    std::vector<RatVec> net{qvec(1, 1, 1, 1, 4), qvec(4, 2, 1, 1, 8)};
    hn::RealizeSetStream a(g, net, Rat(1, 4));
    std::vector<int> first;
    for (int i = 0; i < 800; ++i) first.push_back(a.next());

    hn::RealizeSetStream b(g, net, Rat(1, 4));
    b.restore(500);
    CHECK(b.emitted() == 500);
    for (int i = 500; i < 800; ++i) CHECK(b.next() == first[static_cast<std::size_t>(i)]);

    // a net vertex outside the relative interior is rejected
    std::vector<RatVec> bad{qvec(1, 0, 0, 0, 1)};
    CHECK_THROWS_AS(hn::RealizeSetStream(g, bad, Rat(1, 4)), std::invalid_argument);
}
