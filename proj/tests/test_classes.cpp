#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hn/classes.hpp>

#include <stdexcept>
#include <string>
#include <vector>

using hn::OrbitProxy;
using hn::Rat;
using hn::RatVec;
using hn::Tri;

namespace {

hn::GroupWord W(const std::string& s) { return hn::parse_word(2, s); }

OrbitProxy orb(std::string id, const std::string& w, int period = 1) {
    return {std::move(id), W(w), period};
}

const hn::FuchsianRep& rep() {
    static hn::FuchsianRep r = hn::fuchsian_representation(2);
    return r;
}

// closed ccw interval membership with a small margin
bool in_interval(const hn::BoundaryInterval& iv, double theta) {
    double len = hn::ccw_gap(iv.lo, iv.hi);
    double pos = hn::ccw_gap(iv.lo, theta);
    return pos <= len + 1e-9 || hn::angle_dist(theta, iv.lo) <= 1e-9;
}

}  // namespace

TEST_CASE("orbit validation needs a hyperbolic word and a positive period") {
    CHECK_NOTHROW(hn::validate_orbit(rep(), orb("o", "a1")));
    CHECK_NOTHROW(hn::validate_orbit(rep(), orb("o", "a1 b1 A1 B1")));
    CHECK_THROWS_AS(hn::validate_orbit(rep(), orb("o", "a1", 0)), std::invalid_argument);
    CHECK_THROWS_AS(hn::validate_orbit(rep(), orb("o", "")), std::invalid_argument);
    OrbitProxy relator_orbit{"o", hn::relator(2), 1};
    CHECK_THROWS_AS(hn::validate_orbit(rep(), relator_orbit), std::invalid_argument);
}

TEST_CASE("rotation vector divides the abelianization by the period") {
    RatVec v = hn::rotation_vector(orb("o", "a1 a1 b2", 2));
    CHECK(v == RatVec{Rat(1), Rat(0), Rat(0), Rat(1, 2)});
    CHECK(hn::rotation_vector(orb("o", "a1 b1 A1 B1")) == RatVec(4, Rat(0)));
}

TEST_CASE("rotation speed divides the translation length by the period") {
    double full = hn::translation_length(hn::evaluate(rep(), W("a1")));
    CHECK(hn::rotation_speed(rep(), orb("o", "a1", 2)) == doctest::Approx(full / 2.0));
    CHECK(hn::rotation_speed(rep(), orb("o", "a1")) > 0.0);
}

TEST_CASE("equal axis sets modulo conjugacy, inversion, and powers") {
    CHECK(hn::same_axis_set(W("a1"), W("a1")));
    CHECK(hn::same_axis_set(W("a1"), W("A1")));
    CHECK(hn::same_axis_set(W("a1"), W("b1 a1 B1")));
    CHECK(hn::same_axis_set(hn::power(W("a1 b1"), 2), W("a1 b1")));
    CHECK(hn::same_axis_set(W("a1"), hn::power(W("A1"), 3)));
    CHECK_FALSE(hn::same_axis_set(W("a1"), W("b1")));
    CHECK_FALSE(hn::same_axis_set(W("a1"), W("a2")));
}

TEST_CASE("transversality of handle pairs") {
    CHECK(hn::dynamically_transverse(rep(), orb("o1", "a1"), orb("o2", "b1"), 3) == Tri::Yes);
    CHECK(hn::dynamically_transverse(rep(), orb("o1", "b1"), orb("o2", "a1"), 3) == Tri::Yes);
    CHECK(hn::dynamically_transverse(rep(), orb("o1", "a2"), orb("o2", "b2"), 3) == Tri::Yes);
    CHECK(hn::dynamically_transverse(rep(), orb("o1", "a1"), orb("o2", "a2"), 3) == Tri::No);
    CHECK(hn::dynamically_transverse(rep(), orb("o1", "a1"), orb("o2", "b2"), 3) == Tri::No);
}

TEST_CASE("partition merges crossing pairs per handle") {
    std::vector<OrbitProxy> orbits{orb("o0", "a1"), orb("o1", "b1"), orb("o2", "a2"),
                                   orb("o3", "b2")};
    hn::ClassPartition part = hn::partition(rep(), orbits, 3);
    REQUIRE(part.classes.size() == 2);
    CHECK(part.classes[0].members == std::vector<int>{0, 1});
    CHECK(part.classes[1].members == std::vector<int>{2, 3});
    CHECK(part.class_of == std::vector<int>{0, 0, 1, 1});
    CHECK(part.classes[0].chaotic);
    CHECK(part.classes[1].chaotic);
}

TEST_CASE("partition merges equal axis sets") {
    std::vector<OrbitProxy> orbits{orb("o0", "a1"), orb("o1", "b1 a1 B1"), orb("o2", "a2")};
    hn::ClassPartition part = hn::partition(rep(), orbits, 2);
    REQUIRE(part.classes.size() == 2);
    CHECK(part.classes[0].members == std::vector<int>{0, 1});
    CHECK(part.classes[1].members == std::vector<int>{2});
}

TEST_CASE("separated singleton classes stay singletons") {
    std::vector<OrbitProxy> orbits{orb("h1", "a1"), orb("h2", "a1 b1 A1 B1"), orb("h3", "a2")};
    hn::ClassPartition part = hn::partition(rep(), orbits, 3);
    REQUIRE(part.classes.size() == 3);
    for (const auto& c : part.classes) {
        CHECK(c.members.size() == 1);
        CHECK_FALSE(c.chaotic);   // simple geodesics, no transverse pair
    }
}

TEST_CASE("a non-simple geodesic makes its class chaotic") {
    std::vector<OrbitProxy> orbits{orb("o", "a1 a1 b1 b1")};
    hn::ClassPartition part = hn::partition(rep(), orbits, 2);
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].chaotic);
}

TEST_CASE("limit hull covers the anchor axis endpoints") {
    std::vector<OrbitProxy> orbits{orb("o", "a1")};
    hn::ClassPartition part = hn::partition(rep(), orbits, 2);
    auto hull = hn::limit_hull(rep(), orbits, part.classes[0], 2);
    REQUIRE(!hull.empty());
    hn::OrientedGeodesic ax = hn::axis(hn::evaluate(rep(), W("a1")));
    bool from_covered = false, to_covered = false;
    for (const auto& iv : hull) {
        from_covered = from_covered || in_interval(iv, ax.from);
        to_covered = to_covered || in_interval(iv, ax.to);
    }
    CHECK(from_covered);
    CHECK(to_covered);
}

TEST_CASE("separation of singleton classes by the middle class") {
    std::vector<OrbitProxy> orbits{orb("h1", "a1"), orb("h2", "a1 b1 A1 B1"), orb("h3", "a2")};
    hn::ClassPartition part = hn::partition(rep(), orbits, 3);
    REQUIRE(part.classes.size() == 3);
    CHECK(hn::separates(rep(), orbits, part, 0, 1, 2, 3) == Tri::Yes);
    CHECK(hn::separates(rep(), orbits, part, 0, 2, 1, 3) == Tri::No);
    CHECK(hn::separates(rep(), orbits, part, 0, 1, 2, 0) == Tri::Unknown);
}
