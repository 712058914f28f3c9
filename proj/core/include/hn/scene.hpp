#pragma once

#include "hn/classes.hpp"
#include "hn/graph.hpp"
#include "hn/markov.hpp"

#include <string>
#include <vector>

namespace hn {

struct SceneOptions {
    int depth = kDefaultDepth;
    double geom_tol = kGeomTol;
    unsigned long long seed = 0;
};

struct Scene {
    HorseshoeGraph graph;
    std::vector<OrbitProxy> orbits;
    SceneOptions options;
};

// Parses and validates a scene.  Deck self loops (r, T_j) are materialized
// as ordinary edges.  On any problem throws std::runtime_error whose message
// lists every finding with its JSON path.
Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);

// Rectangle file: one "x y" vertex per line (exact rationals, "p/q"), then a
// final line "sides i j k l" giving the first vertex of each side arc in
// order bottom, right, top, left.
PLRectangle parse_rectangle(const std::string& text);
PLRectangle load_rectangle(const std::string& path);

// Map file: one triangle per line as 12 rationals
// "x1 y1 x2 y2 x3 y3 a b c d tx ty" mapping p to (a*x+b*y+tx, c*x+d*y+ty).
PLMap parse_map(const std::string& text);
PLMap load_map(const std::string& path);

// Net file: one rotation vector per line in "p/q,p/q,..." form.
std::vector<RatVec> parse_net(const std::string& text, int dim);
std::vector<RatVec> load_net(const std::string& path, int dim);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hn
