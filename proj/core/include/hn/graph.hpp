#pragma once

#include "hn/fuchsian.hpp"
#include "hn/words.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hn {

// Rotational horseshoe: period r and the deck transformations of its
// branches.
struct Horseshoe {
    std::string id;
    int period = 1;
    std::vector<GroupWord> decks;
};

// Markovian connection, labeled by the transition time n and the relative
// deck transformation.
struct Edge {
    std::string from, to;
    int n = 1;
    GroupWord word;
};

struct HorseshoeGraph {
    int genus = 2;
    std::vector<Horseshoe> horseshoes;
    std::vector<Edge> edges;
};

// Unique nonempty ids, periods >= 1, nonempty deck lists, consistent word
// genus, resolvable edge endpoints, edge n >= 1.  Throws.
void validate_graph(const HorseshoeGraph& g);

// Every horseshoe carries the implicit self loops (r, T_j); this records
// them as ordinary edges (idempotent).
void materialize_self_loops(HorseshoeGraph& g);

int vertex_index(const HorseshoeGraph& g, const std::string& id);   // -1 if absent

// translation_length(evaluate(T_j)) / r per deck.
std::vector<double> deck_speeds(const FuchsianRep& rep, const Horseshoe& h);

struct SccResult {
    std::vector<int> comp;                   // vertex -> component id
    std::vector<std::vector<int>> members;   // component -> vertices, ascending
    std::vector<std::vector<int>> dag;       // condensation adjacency, sorted
};

// Strongly connected components; component ids are a topological order of
// the condensation (every dag edge goes from lower to higher id).
SccResult scc(const HorseshoeGraph& g);

// Reflexive-transitive reachability over the condensation.
std::vector<std::vector<bool>> condensation_reach(const SccResult& s);
bool class_reach(const SccResult& s, int i, int j);

// Cross-check of the two class notions.  A mismatch either joins two
// distinct components whose vertices carry crossing (or shared) axes, or
// exhibits one component whose vertices fall into different geodesic
// classes.  Either kind is evidence the input is not realizable by a single
// homeomorphism.
struct OrderMismatch {
    int comp_a = 0, comp_b = 0;
    std::string vertex_a, vertex_b;
    bool merged_by_geodesics = false;
    bool merged_by_scc = false;
};
struct OrderReport {
    bool antisymmetric = true;
    std::vector<OrderMismatch> mismatches;
};
OrderReport order_check(const HorseshoeGraph& g, const FuchsianRep& rep,
                        int depth = kDefaultDepth);

// Edges of the reduced order graph: i -> j when j is reachable from i,
// distinct, and no third class separates them per the oracle; an Unknown
// from the oracle (with no Yes) keeps the edge but marks it dashed.
struct TEdge {
    int from = 0, to = 0;
    bool dashed = false;
};
// oracle(i, j, k): does class j separate class i from class k.
std::vector<TEdge> graph_T(const SccResult& s,
                           const std::function<Tri(int, int, int)>& oracle);

// Reachable (up) and co-reachable (down) class sets per class, both
// containing the class itself.
struct Filtration {
    std::vector<std::vector<int>> up, down;
};
Filtration filtration(const SccResult& s);

}  // namespace hn
