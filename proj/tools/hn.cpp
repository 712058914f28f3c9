// hn: batch analyzer for rotational horseshoe networks.
//
// Every command reads files, writes a deterministic report to stdout and
// exits 0 (clean), 2 (validation warnings) or 1 (errors).

#include "hn/chords.hpp"
#include "hn/classes.hpp"
#include "hn/fuchsian.hpp"
#include "hn/graph.hpp"
#include "hn/markov.hpp"
#include "hn/polytope.hpp"
#include "hn/realize.hpp"
#include "hn/scene.hpp"
#include "hn/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kEdgeListCap = 2000;

struct GlobalOpts {
    int depth = -1;                  // -1: defer to scene options
    double geom_tol = -1.0;          // <=0: defer to scene options
    unsigned long long seed = 0;     // reserved for future sampling commands
};

int eff_depth(const hn::Scene& sc, const GlobalOpts& g) {
    return g.depth >= 0 ? g.depth : sc.options.depth;
}

double eff_tol(const hn::Scene& sc, const GlobalOpts& g) {
    return g.geom_tol > 0 ? g.geom_tol : sc.options.geom_tol;
}

double eff_tol(const GlobalOpts& g) { return g.geom_tol > 0 ? g.geom_tol : hn::kGeomTol; }

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json polytope_json(const hn::RatPolytope& P) {
    ordered_json a = ordered_json::array();
    for (const auto& v : P.verts) a.push_back(hn::vec_to_string(v));
    return a;
}

ordered_json component_ids(const hn::HorseshoeGraph& g, const hn::SccResult& s) {
    ordered_json comps = ordered_json::array();
    for (const auto& members : s.members) {
        ordered_json c = ordered_json::array();
        for (int v : members) c.push_back(g.horseshoes[v].id);
        comps.push_back(c);
    }
    return comps;
}

ordered_json point_json(const hn::P2& p) {
    ordered_json j;
    j["x"] = hn::rat_to_string(p.x);
    j["y"] = hn::rat_to_string(p.y);
    return j;
}

// Walks can be long; cap the printed list and record the omission.
void put_edge_walk(ordered_json& j, const std::vector<int>& walk,
                   const std::vector<int>& edge_map) {
    ordered_json a = ordered_json::array();
    std::size_t lim = std::min(walk.size(), kEdgeListCap);
    for (std::size_t i = 0; i < lim; ++i)
        a.push_back(edge_map.empty() ? walk[i] : edge_map[walk[i]]);
    j["edges"] = a;
    if (walk.size() > lim)
        j["edges_omitted"] = static_cast<std::int64_t>(walk.size() - lim);
}

struct SubGraph {
    hn::HorseshoeGraph g;
    std::vector<int> edge_map;   // subgraph edge index -> original edge index
};

SubGraph component_subgraph(const hn::HorseshoeGraph& g, const hn::SccResult& s, int c) {
    SubGraph sub;
    sub.g.genus = g.genus;
    std::vector<int> vmap(g.horseshoes.size(), -1);
    for (int v : s.members[c]) {
        vmap[v] = static_cast<int>(sub.g.horseshoes.size());
        sub.g.horseshoes.push_back(g.horseshoes[v]);
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const hn::Edge& e = g.edges[i];
        int u = hn::vertex_index(g, e.from);
        int w = hn::vertex_index(g, e.to);
        if (s.comp[u] == c && s.comp[w] == c) {
            sub.g.edges.push_back(e);
            sub.edge_map.push_back(static_cast<int>(i));
        }
    }
    return sub;
}

// First component (ascending id) whose rotation polytope admits every
// target; rel_interior requires interior points, as the set streams do.
int select_component(const hn::HorseshoeGraph& g, const hn::SccResult& s,
                     const std::vector<hn::RatVec>& targets, bool rel_interior) {
    for (std::size_t c = 0; c < s.members.size(); ++c) {
        hn::RatPolytope piece = hn::class_polytope(g, s, static_cast<int>(c));
        bool ok = true;
        for (const auto& t : targets) {
            if (rel_interior ? !hn::in_rel_interior(piece, t) : !hn::polytope_contains(piece, t)) {
                ok = false;
                break;
            }
        }
        if (ok) return static_cast<int>(c);
    }
    return -1;
}

// Deck-proxy partition induced by the condensation: one class per strongly
// connected component, one proxy per deck transformation of its vertices.
void scc_deck_partition(const hn::HorseshoeGraph& g, const hn::SccResult& s,
                        std::vector<hn::OrbitProxy>& proxies, hn::ClassPartition& part) {
    part.classes.assign(s.members.size(), {});
    for (std::size_t c = 0; c < s.members.size(); ++c) {
        for (int v : s.members[c]) {
            const hn::Horseshoe& h = g.horseshoes[v];
            for (std::size_t j = 0; j < h.decks.size(); ++j) {
                int idx = static_cast<int>(proxies.size());
                proxies.push_back({h.id + "." + std::to_string(j), h.decks[j], h.period});
                part.classes[c].members.push_back(idx);
                part.class_of.push_back(static_cast<int>(c));
            }
        }
    }
}

int cmd_validate(const std::string& scene_path, const GlobalOpts& opts) {
    hn::Scene sc = hn::load_scene(scene_path);
    int depth = eff_depth(sc, opts);
    hn::FuchsianRep rep = hn::fuchsian_representation(sc.graph.genus);
    hn::SccResult s = hn::scc(sc.graph);
    hn::OrderReport order = hn::order_check(sc.graph, rep, depth);
    std::vector<hn::RatPolytope> pieces = hn::rot_graph(sc.graph, s);
    hn::ShapeDiagnostics shape = hn::shape_diagnostics(sc.graph, s, pieces);

    std::vector<std::string> warnings;
    for (const auto& m : order.mismatches) {
        std::ostringstream os;
        if (m.merged_by_geodesics && !m.merged_by_scc)
            os << "order: vertices '" << m.vertex_a << "' and '" << m.vertex_b
               << "' share or cross axes but lie in distinct components " << m.comp_a << " and "
               << m.comp_b;
        else if (m.merged_by_scc && !m.merged_by_geodesics)
            os << "order: component " << m.comp_a << " joins vertices '" << m.vertex_a
               << "' and '" << m.vertex_b << "' whose axes are unrelated at depth " << depth;
        else
            os << "order: inconsistent class evidence for '" << m.vertex_a << "' and '"
               << m.vertex_b << "'";
        warnings.push_back(os.str());
    }
    if (!order.antisymmetric)
        warnings.push_back("order: condensation reachability is not antisymmetric");
    if (!shape.chaotic_bound_ok) {
        std::ostringstream os;
        os << "shape: " << shape.chaotic_classes.size()
           << " chaotic components exceed the bound 2g-2 = " << 2 * sc.graph.genus - 2;
        warnings.push_back(os.str());
    }
    for (int c : shape.classes_missing_zero) {
        std::ostringstream os;
        os << "shape: component " << c << " is chaotic but its rotation polytope omits 0";
        warnings.push_back(os.str());
    }

    ordered_json orbit_table = ordered_json::array();
    for (const auto& o : sc.orbits) {
        ordered_json row;
        row["id"] = o.id;
        row["word"] = hn::word_to_string(o.word);
        row["period"] = o.period;
        try {
            hn::validate_orbit(rep, o);
            row["rotation"] = hn::vec_to_string(hn::rotation_vector(o));
            row["speed"] = hn::rotation_speed(rep, o);
        } catch (const std::exception& e) {
            warnings.push_back("orbit '" + o.id + "': " + e.what());
            row["invalid"] = true;
        }
        orbit_table.push_back(row);
    }

    ordered_json horseshoes = ordered_json::array();
    for (const auto& h : sc.graph.horseshoes) {
        ordered_json row;
        row["id"] = h.id;
        row["period"] = h.period;
        ordered_json decks = ordered_json::array();
        for (const auto& d : h.decks) decks.push_back(hn::word_to_string(d));
        row["decks"] = decks;
        horseshoes.push_back(row);
    }
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < sc.graph.edges.size(); ++i) {
        const hn::Edge& e = sc.graph.edges[i];
        ordered_json row;
        row["index"] = static_cast<std::int64_t>(i);
        row["from"] = e.from;
        row["to"] = e.to;
        row["n"] = e.n;
        row["word"] = hn::word_to_string(e.word);
        edges.push_back(row);
    }

    ordered_json j;
    j["genus"] = sc.graph.genus;
    j["depth"] = depth;
    j["horseshoes"] = horseshoes;
    j["edges"] = edges;
    j["components"] = component_ids(sc.graph, s);
    ordered_json chaotic = ordered_json::array();
    for (int c : shape.chaotic_classes) chaotic.push_back(c);
    j["chaotic_components"] = chaotic;
    j["span_dim"] = shape.span_dim;
    j["zero_in_rotation_set"] = shape.zero_in_set;
    j["orbits"] = orbit_table;
    ordered_json w = ordered_json::array();
    for (const auto& msg : warnings) w.push_back(msg);
    j["warnings"] = w;
    emit(j);
    return warnings.empty() ? 0 : 2;
}

int cmd_scc(const std::string& scene_path) {
    hn::Scene sc = hn::load_scene(scene_path);
    hn::SccResult s = hn::scc(sc.graph);
    hn::Filtration f = hn::filtration(s);

    ordered_json j;
    j["components"] = component_ids(sc.graph, s);
    ordered_json dag = ordered_json::array();
    for (const auto& row : s.dag) {
        ordered_json r = ordered_json::array();
        for (int x : row) r.push_back(x);
        dag.push_back(r);
    }
    j["dag"] = dag;
    ordered_json up = ordered_json::array(), down = ordered_json::array();
    for (const auto& row : f.up) {
        ordered_json r = ordered_json::array();
        for (int x : row) r.push_back(x);
        up.push_back(r);
    }
    for (const auto& row : f.down) {
        ordered_json r = ordered_json::array();
        for (int x : row) r.push_back(x);
        down.push_back(r);
    }
    j["filtration"]["up"] = up;
    j["filtration"]["down"] = down;
    emit(j);
    return 0;
}

int cmd_reach(const std::string& scene_path) {
    hn::Scene sc = hn::load_scene(scene_path);
    hn::SccResult s = hn::scc(sc.graph);
    auto reach = hn::condensation_reach(s);

    ordered_json j;
    j["components"] = component_ids(sc.graph, s);
    ordered_json m = ordered_json::array();
    for (const auto& row : reach) {
        ordered_json r = ordered_json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        m.push_back(r);
    }
    j["reach"] = m;
    emit(j);
    return 0;
}

int cmd_classes(const std::string& scene_path, const GlobalOpts& opts) {
    hn::Scene sc = hn::load_scene(scene_path);
    int depth = eff_depth(sc, opts);
    hn::FuchsianRep rep = hn::fuchsian_representation(sc.graph.genus);
    for (const auto& o : sc.orbits) hn::validate_orbit(rep, o);
    hn::ClassPartition part = hn::partition(rep, sc.orbits, depth);

    ordered_json j;
    j["depth"] = depth;
    j["orbits"] = static_cast<std::int64_t>(sc.orbits.size());
    ordered_json classes = ordered_json::array();
    for (const auto& cls : part.classes) {
        ordered_json row;
        ordered_json members = ordered_json::array();
        ordered_json rots = ordered_json::array();
        for (int m : cls.members) {
            members.push_back(sc.orbits[m].id);
            rots.push_back(hn::vec_to_string(hn::rotation_vector(sc.orbits[m])));
        }
        row["members"] = members;
        row["chaotic"] = cls.chaotic;
        row["rotation_vectors"] = rots;
        // Hull enumeration materializes every conjugate axis and dedups them
        // pairwise, so its cost is quadratic in an exponential count; clamp to
        // the same budget separates() uses internally.
        int hull_depth = std::min(depth, 3);
        ordered_json hull = ordered_json::array();
        for (const auto& iv : hn::limit_hull(rep, sc.orbits, cls, hull_depth)) {
            ordered_json h;
            h["lo"] = iv.lo;
            h["hi"] = iv.hi;
            hull.push_back(h);
        }
        row["limit_intervals"] = hull;
        classes.push_back(row);
    }
    j["classes"] = classes;
    emit(j);
    return 0;
}

int cmd_graph_t(const std::string& scene_path, const GlobalOpts& opts) {
    hn::Scene sc = hn::load_scene(scene_path);
    int depth = eff_depth(sc, opts);
    hn::FuchsianRep rep = hn::fuchsian_representation(sc.graph.genus);
    hn::SccResult s = hn::scc(sc.graph);

    std::vector<hn::OrbitProxy> proxies;
    hn::ClassPartition part;
    scc_deck_partition(sc.graph, s, proxies, part);
    auto oracle = [&](int a, int b, int c) {
        return hn::separates(rep, proxies, part, a, b, c, depth);
    };
    std::vector<hn::TEdge> edges = hn::graph_T(s, oracle);

    ordered_json j;
    j["depth"] = depth;
    j["classes"] = component_ids(sc.graph, s);
    ordered_json es = ordered_json::array();
    for (const auto& e : edges) {
        ordered_json row;
        row["from"] = e.from;
        row["to"] = e.to;
        row["dashed"] = e.dashed;
        es.push_back(row);
    }
    j["edges"] = es;
    emit(j);
    return 0;
}

int cmd_rotset(const std::string& scene_path) {
    hn::Scene sc = hn::load_scene(scene_path);
    hn::SccResult s = hn::scc(sc.graph);
    std::vector<hn::RatPolytope> pieces = hn::rot_graph(sc.graph, s);
    hn::ShapeDiagnostics shape = hn::shape_diagnostics(sc.graph, s, pieces);

    ordered_json j;
    j["genus"] = sc.graph.genus;
    j["components"] = static_cast<std::int64_t>(s.members.size());
    ordered_json ps = ordered_json::array();
    for (const auto& p : pieces) ps.push_back(polytope_json(p));
    j["pieces"] = ps;
    j["span_dim"] = shape.span_dim;
    j["zero_in_set"] = shape.zero_in_set;
    emit(j);
    return 0;
}

int cmd_realize(const std::string& scene_path, const std::string& target_text,
                const std::string& eps_text, long long symbols, const std::string& out_path) {
    hn::Scene sc = hn::load_scene(scene_path);
    hn::RatVec rho = hn::parse_vec(target_text, 2 * sc.graph.genus);
    hn::Rat eps = hn::parse_rat(eps_text);
    hn::SccResult s = hn::scc(sc.graph);

    int c = select_component(sc.graph, s, {rho}, /*rel_interior=*/false);
    if (c < 0)
        throw std::runtime_error("realize: target " + hn::vec_to_string(rho) +
                                 " lies in no component rotation polytope");
    SubGraph sub = component_subgraph(sc.graph, s, c);

    ordered_json j;
    j["component"] = c;
    ordered_json cv = ordered_json::array();
    for (int v : s.members[c]) cv.push_back(sc.graph.horseshoes[v].id);
    j["component_vertices"] = cv;
    j["target"] = hn::vec_to_string(rho);

    if (symbols < 0) {
        j["mode"] = "finite";
        j["eps"] = hn::rat_to_string(eps);
        hn::FiniteRealization fr = hn::realize_finite(sub.g, rho, eps);
        j["symbols"] = static_cast<std::int64_t>(fr.edges.size());
        j["empirical"] = hn::vec_to_string(fr.rho_emitted);
        j["error"] = hn::rat_to_string(fr.error);
        ordered_json cycles = ordered_json::array();
        for (std::size_t i = 0; i < fr.plan.cycles.size(); ++i) {
            ordered_json row;
            row["weight"] = hn::rat_to_string(fr.plan.weights[i]);
            row["rho"] = hn::vec_to_string(fr.plan.cycles[i].rho);
            ordered_json ce = ordered_json::array();
            for (int e : fr.plan.cycles[i].edges) ce.push_back(sub.edge_map[e]);
            row["edges"] = ce;
            row["copies"] = static_cast<std::int64_t>(fr.exponents[i]);
            cycles.push_back(row);
        }
        j["cycles"] = cycles;
        j["residual"] = hn::rat_to_string(fr.plan.residual);
        put_edge_walk(j, fr.edges, sub.edge_map);
        if (!out_path.empty()) {
            std::ostringstream os;
            for (std::size_t i = 0; i < fr.edges.size(); ++i) {
                if (i) os << ' ';
                os << sub.edge_map[fr.edges[i]];
            }
            os << '\n';
            hn::write_text_file(out_path, os.str());
        }
        emit(j);
        return 0;
    }

    j["mode"] = "stream";
    j["symbols"] = static_cast<std::int64_t>(symbols);
    hn::RealizeStream stream(sub.g, rho);
    std::vector<int> walk;
    walk.reserve(static_cast<std::size_t>(symbols));
    hn::RatVec disp(static_cast<std::size_t>(2 * sc.graph.genus), hn::Rat(0));
    hn::Rat elapsed = 0;
    hn::Rat worst_ratio = 0;   // max over emitted prefixes of dev / bound
    for (long long i = 0; i < symbols; ++i) {
        int e = stream.next();
        walk.push_back(e);
        const hn::Edge& ed = sub.g.edges[e];
        std::vector<long long> ab = hn::abelianize(ed.word);
        for (std::size_t k = 0; k < disp.size(); ++k) disp[k] += hn::Rat(ab[k]);
        elapsed += hn::Rat(ed.n);
        hn::Rat dev = 0;
        for (std::size_t k = 0; k < disp.size(); ++k)
            dev = std::max(dev, hn::rat_abs(disp[k] - elapsed * rho[k]));
        hn::Rat ratio = dev / (elapsed * stream.current_bound());
        worst_ratio = std::max(worst_ratio, ratio);
    }
    j["final_stage"] = stream.current_stage();
    ordered_json stages = ordered_json::array();
    for (int st = 0; st <= stream.current_stage(); ++st) {
        const hn::StageInfo& si = stream.stage_info(st);
        ordered_json row;
        row["stage"] = si.stage;
        row["reps"] = static_cast<std::int64_t>(si.reps);
        row["symbols"] = static_cast<std::int64_t>(si.word.size());
        row["time"] = static_cast<std::int64_t>(si.word_time);
        row["word_error"] = hn::rat_to_string(si.word_error);
        row["prefix_bound"] = hn::rat_to_string(si.prefix_bound);
        stages.push_back(row);
    }
    j["stages"] = stages;
    hn::Rat ferr = 0;
    for (std::size_t k = 0; k < disp.size(); ++k)
        ferr = std::max(ferr, hn::rat_abs(disp[k] / elapsed - rho[k]));
    j["final_error"] = hn::rat_to_string(ferr);
    j["worst_bound_ratio"] = hn::rat_to_string(worst_ratio);
    j["certified"] = worst_ratio <= hn::Rat(1);
    put_edge_walk(j, walk, sub.edge_map);
    if (!out_path.empty()) {
        std::ostringstream os;
        os << "target " << hn::vec_to_string(rho) << '\n';
        os << "symbols " << symbols << '\n';
        for (int st = 0; st <= stream.current_stage(); ++st) {
            const hn::StageInfo& si = stream.stage_info(st);
            os << "stage " << si.stage << " reps " << si.reps << " symbols " << si.word.size()
               << " time " << si.word_time << " word_error " << hn::rat_to_string(si.word_error)
               << " prefix_bound " << hn::rat_to_string(si.prefix_bound) << '\n';
        }
        hn::write_text_file(out_path, os.str());
    }
    emit(j);
    return 0;
}

int cmd_realize_set(const std::string& scene_path, const std::string& net_path,
                    const std::string& eps_text, long long symbols) {
    hn::Scene sc = hn::load_scene(scene_path);
    std::vector<hn::RatVec> net = hn::load_net(net_path, 2 * sc.graph.genus);
    hn::Rat eps = hn::parse_rat(eps_text);
    hn::SccResult s = hn::scc(sc.graph);

    int c = select_component(sc.graph, s, net, /*rel_interior=*/true);
    if (c < 0)
        throw std::runtime_error(
            "realize-set: no component rotation polytope contains every net vertex in its "
            "relative interior");
    SubGraph sub = component_subgraph(sc.graph, s, c);

    hn::RealizeSetStream stream(sub.g, net, eps);
    std::vector<int> walk;
    walk.reserve(static_cast<std::size_t>(symbols));
    ordered_json transitions = ordered_json::array();
    int prev_target = stream.current_target();
    for (long long i = 0; i < symbols; ++i) {
        walk.push_back(stream.next());
        if (stream.current_target() != prev_target) {
            ordered_json t;
            t["at"] = static_cast<std::int64_t>(i + 1);
            t["to"] = stream.current_target();
            transitions.push_back(t);
            prev_target = stream.current_target();
        }
    }

    ordered_json j;
    j["component"] = c;
    j["eps"] = hn::rat_to_string(eps);
    ordered_json nv = ordered_json::array();
    for (const auto& v : net) nv.push_back(hn::vec_to_string(v));
    j["net"] = nv;
    j["symbols"] = static_cast<std::int64_t>(symbols);
    j["burn_in"] = static_cast<std::int64_t>(stream.burn_in());
    j["final_target"] = stream.current_target();
    j["transitions"] = transitions;
    put_edge_walk(j, walk, sub.edge_map);
    emit(j);
    return 0;
}

int cmd_markov(const std::vector<std::string>& rect_paths,
               const std::vector<std::string>& map_paths, const GlobalOpts& opts) {
    std::vector<hn::PLRectangle> rects;
    for (const auto& p : rect_paths) rects.push_back(hn::load_rectangle(p));

    ordered_json j;
    if (map_paths.empty()) {
        if (rects.size() != 2)
            throw std::runtime_error("markov: intersection mode takes exactly two rectangles");
        hn::PLRectangle r1 = rects[0], r2 = rects[1];
        bool normalized = false;
        if (!hn::is_unit_square(r2)) {
            hn::BoxTransform t = hn::unit_square_transform(r2);
            r1 = hn::apply(t, r1);
            r2 = hn::apply(t, r2);
            normalized = true;
        }
        j["mode"] = "intersection";
        j["normalized"] = normalized;
        bool pre = hn::is_pre_markovian(r1, r2);
        j["pre_markovian"] = pre;
        std::optional<hn::PLRectangle> wit;
        if (pre) wit = hn::is_markovian(r1, r2);
        j["markovian"] = wit.has_value();
        if (wit) {
            ordered_json poly = ordered_json::array();
            for (const auto& p : wit->poly)
                poly.push_back(hn::rat_to_string(p.x) + " " + hn::rat_to_string(p.y));
            j["witness"] = poly;
            ordered_json corners = ordered_json::array();
            for (int k : wit->corner) corners.push_back(k);
            j["witness_corners"] = corners;
            j["margin"] = hn::rat_to_string(hn::perturbation_margin(r1, r2));
        }
        emit(j);
        return 0;
    }

    if (rects.size() != map_paths.size() + 1)
        throw std::runtime_error("markov: a chain of k maps needs k+1 rectangles");
    std::vector<hn::PLMap> maps;
    for (const auto& p : map_paths) maps.push_back(hn::load_map(p));
    hn::ChainOptions copt;
    copt.tol = eff_tol(opts);
    hn::P2 x = hn::chain_point(rects, maps, copt);
    j["mode"] = "chain";
    j["length"] = static_cast<std::int64_t>(maps.size());
    j["closed"] = rects.front() == rects.back();
    j["tol"] = copt.tol;
    j["point"] = point_json(x);
    emit(j);
    return 0;
}

int cmd_leafspace(const std::string& paths_file, const std::string& deck_text, int genus,
                  int path_index, const GlobalOpts& opts) {
    std::ifstream in(paths_file);
    if (!in) throw std::runtime_error("leafspace: cannot open " + paths_file);
    std::vector<hn::TransversePath> paths = hn::load_chord_paths(in);
    double tol = eff_tol(opts);

    ordered_json j;
    j["paths"] = static_cast<std::int64_t>(paths.size());
    ordered_json sizes = ordered_json::array();
    for (const auto& p : paths) sizes.push_back(p.size());
    j["sizes"] = sizes;

    ordered_json violations = ordered_json::array();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        auto v = hn::path_violations(paths[i], tol);
        if (v.empty()) continue;
        ordered_json row;
        row["path"] = static_cast<std::int64_t>(i);
        ordered_json pairs = ordered_json::array();
        for (const auto& [a, b] : v) {
            ordered_json pr = ordered_json::array();
            pr.push_back(a);
            pr.push_back(b);
            pairs.push_back(pr);
        }
        row["pairs"] = pairs;
        violations.push_back(row);
    }
    j["violations"] = violations;

    ordered_json crossings = ordered_json::array();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t k = i + 1; k < paths.size(); ++k) {
            for (int t1 = 0; t1 < paths[i].size(); ++t1) {
                for (int t2 = 0; t2 < paths[k].size(); ++t2) {
                    if (!hn::leaf_equal(paths[i].leaves[t1], paths[k].leaves[t2])) continue;
                    auto w = hn::f_transverse_intersection(paths[i], t1, paths[k], t2, tol);
                    ordered_json row;
                    row["path1"] = static_cast<std::int64_t>(i);
                    row["t1"] = t1;
                    row["path2"] = static_cast<std::int64_t>(k);
                    row["t2"] = t2;
                    row["transverse"] = w.has_value();
                    if (w) {
                        ordered_json wit;
                        wit["a1"] = w->a1;
                        wit["b1"] = w->b1;
                        wit["a2"] = w->a2;
                        wit["b2"] = w->b2;
                        row["witness"] = wit;
                    }
                    crossings.push_back(row);
                }
            }
        }
    }
    j["crossings"] = crossings;

    if (!deck_text.empty()) {
        if (path_index < 0 || path_index >= static_cast<int>(paths.size()))
            throw std::runtime_error("leafspace: --path-index out of range");
        hn::FuchsianRep rep = hn::fuchsian_representation(genus);
        hn::GroupWord w = hn::parse_word(genus, deck_text);
        hn::Isometry deck = hn::evaluate(rep, w);
        auto st = hn::self_transverse_with_deck(paths[static_cast<std::size_t>(path_index)],
                                                deck, tol);
        ordered_json row;
        row["deck"] = hn::word_to_string(w);
        row["path"] = path_index;
        row["found"] = st.has_value();
        if (st) {
            row["t"] = st->first;
            row["s"] = st->second;
        }
        j["self_transverse"] = row;
    }
    emit(j);
    return 0;
}

int cmd_svg(const std::string& scene_path, int ax, int ay, const std::string& out_path) {
    hn::Scene sc = hn::load_scene(scene_path);
    hn::SccResult s = hn::scc(sc.graph);
    std::vector<hn::RatPolytope> pieces = hn::rot_graph(sc.graph, s);
    std::string svg = hn::emit_svg(pieces, ax, ay);
    if (out_path.empty())
        std::cout << svg;
    else
        hn::write_text_file(out_path, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analyzer for rotational horseshoe networks on hyperbolic surfaces"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--depth", opts.depth, "conjugator search depth (overrides scene options)");
    app.add_option("--geom-tol", opts.geom_tol, "geometric tolerance (overrides scene options)");
    app.add_option("--seed", opts.seed, "seed for sampling commands (reserved)");

    std::string scene_validate, scene_scc, scene_reach, scene_classes, scene_graph_t,
        scene_rotset, scene_realize, scene_realize_set, scene_svg;

    auto* c_validate = app.add_subcommand("validate", "check a scene and report warnings");
    c_validate->fallthrough();
    c_validate->add_option("scene", scene_validate, "scene file")->required();

    auto* c_scc = app.add_subcommand("scc", "strongly connected components and filtration");
    c_scc->fallthrough();
    c_scc->add_option("scene", scene_scc, "scene file")->required();

    auto* c_reach = app.add_subcommand("reach", "condensation reachability matrix");
    c_reach->fallthrough();
    c_reach->add_option("scene", scene_reach, "scene file")->required();

    auto* c_classes = app.add_subcommand("classes", "partition the scene orbits into classes");
    c_classes->fallthrough();
    c_classes->add_option("scene", scene_classes, "scene file")->required();

    auto* c_graph_t = app.add_subcommand("graph-t", "reduced order graph of the components");
    c_graph_t->fallthrough();
    c_graph_t->add_option("scene", scene_graph_t, "scene file")->required();

    auto* c_rotset = app.add_subcommand("rotset", "rotation set of the network");
    c_rotset->fallthrough();
    c_rotset->add_option("scene", scene_rotset, "scene file")->required();

    std::string realize_target, realize_eps = "1/100", realize_out;
    long long realize_symbols = -1;
    auto* c_realize = app.add_subcommand("realize", "realize a rotation vector by a walk");
    c_realize->fallthrough();
    c_realize->add_option("scene", scene_realize, "scene file")->required();
    c_realize->add_option("target", realize_target, "rotation vector p/q,p/q,...")->required();
    c_realize->add_option("--eps", realize_eps, "tolerance for the finite mode");
    c_realize->add_option("--symbols", realize_symbols,
                          "emit this many symbols of the certified stream instead");
    c_realize->add_option("--out", realize_out, "write the walk or stage certificate here");

    std::string set_net, set_eps = "1/100";
    long long set_symbols = 1000;
    auto* c_realize_set =
        app.add_subcommand("realize-set", "track a closed polyline of rotation vectors");
    c_realize_set->fallthrough();
    c_realize_set->add_option("scene", scene_realize_set, "scene file")->required();
    c_realize_set->add_option("net", set_net, "net file, one vector per line")->required();
    c_realize_set->add_option("--eps", set_eps, "tracking tolerance");
    c_realize_set->add_option("--symbols", set_symbols, "symbols to emit");

    std::vector<std::string> markov_rects, markov_maps;
    auto* c_markov =
        app.add_subcommand("markov", "rectangle intersection analysis or chain shadowing");
    c_markov->fallthrough();
    c_markov->add_option("rects", markov_rects, "rectangle files")->required();
    c_markov->add_option("--map", markov_maps, "map files, one per chain step");

    std::string leaf_paths, leaf_deck;
    int leaf_genus = 2, leaf_index = 0;
    auto* c_leafspace = app.add_subcommand("leafspace", "transverse path diagnostics");
    c_leafspace->fallthrough();
    c_leafspace->add_option("paths", leaf_paths, "chord path file")->required();
    c_leafspace->add_option("--deck", leaf_deck, "deck word for the self-transversality scan");
    c_leafspace->add_option("--genus", leaf_genus, "genus for evaluating --deck");
    c_leafspace->add_option("--path-index", leaf_index, "path the --deck scan applies to");

    std::vector<int> svg_axes{0, 1};
    std::string svg_out;
    auto* c_svg = app.add_subcommand("svg", "draw the rotation set projection");
    c_svg->fallthrough();
    c_svg->add_option("scene", scene_svg, "scene file")->required();
    c_svg->add_option("--axes", svg_axes, "two coordinate indices to project onto")
        ->expected(2);
    c_svg->add_option("--out", svg_out, "write the drawing here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*c_validate) return cmd_validate(scene_validate, opts);
        if (*c_scc) return cmd_scc(scene_scc);
        if (*c_reach) return cmd_reach(scene_reach);
        if (*c_classes) return cmd_classes(scene_classes, opts);
        if (*c_graph_t) return cmd_graph_t(scene_graph_t, opts);
        if (*c_rotset) return cmd_rotset(scene_rotset);
        if (*c_realize)
            return cmd_realize(scene_realize, realize_target, realize_eps, realize_symbols,
                               realize_out);
        if (*c_realize_set)
            return cmd_realize_set(scene_realize_set, set_net, set_eps, set_symbols);
        if (*c_markov) return cmd_markov(markov_rects, markov_maps, opts);
        if (*c_leafspace)
            return cmd_leafspace(leaf_paths, leaf_deck, leaf_genus, leaf_index, opts);
        if (*c_svg) return cmd_svg(scene_svg, svg_axes[0], svg_axes[1], svg_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
