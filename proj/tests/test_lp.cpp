#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hn/lp.hpp>
#include <hn/rational.hpp>

using hn::Rat;
using hn::RatVec;

namespace {

RatVec v(std::initializer_list<long long> xs) {
    RatVec out;
    for (long long x : xs) out.push_back(Rat(x));
    return out;
}

}  // namespace

TEST_CASE("convex weights reproduce the target exactly") {
    std::vector<RatVec> square = {v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})};
    RatVec p{Rat(1, 3), Rat(2, 5)};
    auto w = hn::convex_weights(square, p, Rat(0));
    REQUIRE(w.has_value());
    Rat sum(0);
    RatVec rec{Rat(0), Rat(0)};
    for (std::size_t i = 0; i < w->size(); ++i) {
        CHECK((*w)[i] >= 0);
        sum += (*w)[i];
        rec[0] += (*w)[i] * square[i][0];
        rec[1] += (*w)[i] * square[i][1];
    }
    CHECK(sum == Rat(1));
    CHECK(rec[0] == p[0]);
    CHECK(rec[1] == p[1]);
    CHECK_FALSE(hn::convex_weights(square, v({2, 0}), Rat(0)).has_value());
    // a loose eps admits nearby points
    CHECK(hn::convex_weights(square, RatVec{Rat(1), Rat(11, 10)}, Rat(1, 10)).has_value());
}

TEST_CASE("hull membership includes the boundary") {
    std::vector<RatVec> tri = {v({0, 0}), v({2, 0}), v({0, 2})};
    CHECK(hn::in_convex_hull(tri, v({1, 1})));        // on the hypotenuse
    CHECK(hn::in_convex_hull(tri, v({0, 0})));        // vertex
    CHECK(hn::in_convex_hull(tri, RatVec{Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(hn::in_convex_hull(tri, RatVec{Rat(1), Rat(1) + Rat(1, 1000000)}));
    CHECK_FALSE(hn::in_convex_hull(tri, v({-1, 0})));
}

TEST_CASE("relative interior of lower-dimensional hulls") {
    // segment embedded in the plane
    std::vector<RatVec> seg = {v({0, 0}), v({2, 2})};
    CHECK(hn::in_relative_interior(seg, v({1, 1})));
    CHECK_FALSE(hn::in_relative_interior(seg, v({0, 0})));
    CHECK_FALSE(hn::in_relative_interior(seg, v({2, 2})));
    CHECK_FALSE(hn::in_relative_interior(seg, v({1, 0})));
    // full-dimensional: boundary excluded
    std::vector<RatVec> tri = {v({0, 0}), v({2, 0}), v({0, 2})};
    CHECK(hn::in_relative_interior(tri, RatVec{Rat(1, 2), Rat(1, 2)}));
    CHECK_FALSE(hn::in_relative_interior(tri, v({1, 1})));
    // a single point is its own relative interior
    std::vector<RatVec> point = {v({3, 4})};
    CHECK(hn::in_relative_interior(point, v({3, 4})));
    CHECK_FALSE(hn::in_relative_interior(point, v({3, 5})));
}

TEST_CASE("solve_lp on equality form") {
    // minimize x1 subject to x1 + x2 = 1, x >= 0
    std::vector<std::vector<Rat>> A = {{Rat(1), Rat(1)}};
    std::vector<Rat> b = {Rat(1)};
    auto r = hn::solve_lp(A, b, {Rat(1), Rat(0)});
    REQUIRE(r.status == hn::LPStatus::Optimal);
    CHECK(r.objective == Rat(0));
    CHECK(r.x[0] + r.x[1] == Rat(1));
    // minimize x1 + x2 subject to x1 + 2 x2 = 2: optimum at x = (0, 1)
    auto r1 = hn::solve_lp({{Rat(1), Rat(2)}}, {Rat(2)}, {Rat(1), Rat(1)});
    REQUIRE(r1.status == hn::LPStatus::Optimal);
    CHECK(r1.objective == Rat(1));
    // x1 = -1 with x >= 0 is infeasible
    auto r2 = hn::solve_lp({{Rat(1)}}, {Rat(-1)}, {Rat(1)});
    CHECK(r2.status == hn::LPStatus::Infeasible);
    // minimize -x1 subject to 0 x1 = 0 is unbounded
    auto r3 = hn::solve_lp({{Rat(0)}}, {Rat(0)}, {Rat(-1)});
    CHECK(r3.status == hn::LPStatus::Unbounded);
}

TEST_CASE("sup-norm distance to a segment") {
    RatVec a = v({0, 0}), b = v({4, 0});
    CHECK(hn::dist_inf_to_segment(a, b, v({2, 0})) == Rat(0));
    CHECK(hn::dist_inf_to_segment(a, b, v({2, 3})) == Rat(3));
    CHECK(hn::dist_inf_to_segment(a, b, v({5, 0})) == Rat(1));
    CHECK(hn::dist_inf_to_segment(a, b, v({-2, 1})) == Rat(2));
    // degenerate segment
    CHECK(hn::dist_inf_to_segment(a, a, v({3, 1})) == Rat(3));
    // distance realized strictly between the endpoints
    RatVec c = v({0, 2}), d = v({2, 0});
    CHECK(hn::dist_inf_to_segment(c, d, v({0, 0})) == Rat(1));
}
