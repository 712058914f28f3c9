#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hn/scene.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace {

std::string capture_error(const std::string& text) {
    try {
        hn::parse_scene(text);
    } catch (const std::runtime_error& e) {
        return e.what();
    }
    return {};
}

bool mentions(const std::string& msg, const std::string& needle) {
    return msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("scene parse builds graph, orbits and options") {
    std::string text = R"({
        "genus": 2,
        "horseshoes": [
            {"id": "h1", "period": 2, "decks": ["a1"]},
            {"id": "h2", "period": 1, "decks": ["b1", "b2"]}
        ],
        "edges": [{"from": "h1", "to": "h2", "n": 1, "word": ""}],
        "orbits": [{"id": "orb", "word": "a1 b1", "period": 3}, {"word": "a2", "period": 1}],
        "options": {"depth": 4, "geom_tol": 1e-8, "seed": 7}
    })";
    hn::Scene s = hn::parse_scene(text);
    CHECK(s.graph.genus == 2);
    REQUIRE(s.graph.horseshoes.size() == 2);
    CHECK(s.graph.horseshoes[0].id == "h1");
    CHECK(s.graph.horseshoes[0].period == 2);
    CHECK(s.graph.horseshoes[1].decks.size() == 2);
    // one declared edge plus one materialized loop per deck
    REQUIRE(s.graph.edges.size() == 4);
    CHECK(s.graph.edges[0].from == "h1");
    CHECK(s.graph.edges[0].to == "h2");
    CHECK(s.graph.edges[1].from == "h1");
    CHECK(s.graph.edges[1].to == "h1");
    CHECK(s.graph.edges[1].n == 2);
    CHECK(s.graph.edges[1].word == hn::parse_word(2, "a1"));
    CHECK(s.graph.edges[2].n == 1);
    CHECK(s.graph.edges[3].word == hn::parse_word(2, "b2"));
    REQUIRE(s.orbits.size() == 2);
    CHECK(s.orbits[0].id == "orb");
    CHECK(s.orbits[0].period == 3);
    CHECK(s.orbits[1].id == "o1");   // default id from position
    CHECK(s.options.depth == 4);
    CHECK(s.options.geom_tol == 1e-8);
    CHECK(s.options.seed == 7);
}

TEST_CASE("scene options default when omitted") {
    hn::Scene s = hn::parse_scene(
        R"({"genus": 2, "horseshoes": [{"id": "h", "period": 1, "decks": ["a1"]}]})");
    CHECK(s.options.depth == hn::kDefaultDepth);
    CHECK(s.options.geom_tol == hn::kGeomTol);
    CHECK(s.options.seed == 0);
    REQUIRE(s.graph.edges.size() == 1);
    CHECK(s.graph.edges[0].n == 1);
}

TEST_CASE("scene errors are aggregated with JSON paths") {
    std::string msg = capture_error(R"({
        "genus": 1,
        "horseshoes": [{"id": "h1", "period": 0, "decks": ["a9"], "extra": 1}],
        "edges": [{"from": "h1", "to": "nope", "n": 0, "word": "b1"}],
        "orbits": [{"word": "", "period": 1}],
        "options": {"depth": -3}
    })");
    REQUIRE(!msg.empty());
    CHECK(mentions(msg, "$.genus"));
    CHECK(mentions(msg, "$.horseshoes[0].period"));
    CHECK(mentions(msg, "$.horseshoes[0].decks[0]"));
    CHECK(mentions(msg, "unknown field \"extra\""));
    CHECK(mentions(msg, "$.edges[0].n"));
    CHECK(mentions(msg, "unknown horseshoe id \"nope\""));
    CHECK(mentions(msg, "$.orbits[0].word"));
    CHECK(mentions(msg, "$.options.depth"));
}

TEST_CASE("scene rejects malformed JSON and non-objects") {
    CHECK_THROWS_AS(hn::parse_scene("{"), std::runtime_error);
    CHECK_THROWS_AS(hn::parse_scene("[1, 2]"), std::runtime_error);
    CHECK(mentions(capture_error("[1, 2]"), "scene must be a JSON object"));
}

TEST_CASE("rectangle text round trips") {
    std::string text =
        "# unit square\n"
        "0 0\n1 0\n1 1\n0 1\n"
        "sides 0 1 2 3\n";
    hn::PLRectangle r = hn::parse_rectangle(text);
    REQUIRE(r.poly.size() == 4);
    CHECK(r.poly[2] == hn::P2{hn::Rat(1), hn::Rat(1)});
    CHECK(r.corner[3] == 3);
    CHECK(hn::is_unit_square(r));

    CHECK_THROWS_WITH_AS(hn::parse_rectangle("0 0\n1 0\n1 1\n0 1\n"),
                         "rectangle: missing \"sides\" line", std::runtime_error);
    CHECK_THROWS_AS(hn::parse_rectangle("0\nsides 0 1 2 3\n"), std::runtime_error);
    CHECK_THROWS_AS(hn::parse_rectangle("0 0\n1 0\n1 1\n0 1\nsides 0 1 2\n"),
                    std::runtime_error);
}

TEST_CASE("map text parses triangles with affine pieces") {
    // identity on one triangle
    hn::PLMap m = hn::parse_map("0 0 1 0 0 1 1 0 0 1 0 0\n");
    REQUIRE(m.pieces.size() == 1);
    CHECK(hn::apply(m, hn::P2{hn::Rat(1, 4), hn::Rat(1, 4)}) ==
          hn::P2{hn::Rat(1, 4), hn::Rat(1, 4)});
    CHECK_THROWS_AS(hn::parse_map("0 0 1 0 0 1 1 0 0 1 0\n"), std::runtime_error);
}

TEST_CASE("net text parses rational vectors") {
    auto net = hn::parse_net("1/4, 1/4, 1/4, 1/4\n# comment\n1/2,1/4,1/8,1/8\n", 4);
    REQUIRE(net.size() == 2);
    CHECK(net[0][0] == hn::Rat(1, 4));
    CHECK(net[1][2] == hn::Rat(1, 8));
    CHECK_THROWS_AS(hn::parse_net("1/2,1/2\n", 4), std::runtime_error);
    CHECK_THROWS_AS(hn::parse_net("# nothing\n", 4), std::runtime_error);
}

TEST_CASE("text files round trip") {
    std::string path = "scene_io_probe.txt";
    hn::write_text_file(path, "alpha\nbeta\n");
    CHECK(hn::read_text_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(hn::read_text_file("definitely_missing_file.txt"), std::runtime_error);
}
