#include "hn/graph.hpp"

#include "hn/classes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hn {

namespace {

void check_word_genus(const GroupWord& w, int genus, const std::string& where) {
    for (int s : w.letters) {
        int k = s > 0 ? s : -s;
        if (k < 1 || k > 2 * genus)
            throw std::invalid_argument("graph: letter out of range in " + where);
    }
}

}  // namespace

void validate_graph(const HorseshoeGraph& g) {
    if (g.genus < 2) throw std::invalid_argument("graph: genus must be >= 2");
    std::set<std::string> ids;
    for (const Horseshoe& h : g.horseshoes) {
        if (h.id.empty()) throw std::invalid_argument("graph: empty horseshoe id");
        if (!ids.insert(h.id).second)
            throw std::invalid_argument("graph: duplicate horseshoe id " + h.id);
        if (h.period < 1)
            throw std::invalid_argument("graph: period must be >= 1 at " + h.id);
        if (h.decks.empty())
            throw std::invalid_argument("graph: horseshoe needs at least one deck at " + h.id);
        for (const GroupWord& d : h.decks) check_word_genus(d, g.genus, h.id);
    }
    for (const Edge& e : g.edges) {
        if (!ids.count(e.from))
            throw std::invalid_argument("graph: unknown edge source " + e.from);
        if (!ids.count(e.to))
            throw std::invalid_argument("graph: unknown edge target " + e.to);
        if (e.n < 1)
            throw std::invalid_argument("graph: edge transition time must be >= 1");
        check_word_genus(e.word, g.genus, e.from + "->" + e.to);
    }
}

void materialize_self_loops(HorseshoeGraph& g) {
    for (const Horseshoe& h : g.horseshoes) {
        for (const GroupWord& d : h.decks) {
            bool present = false;
            for (const Edge& e : g.edges) {
                if (e.from == h.id && e.to == h.id && e.n == h.period &&
                    e.word.letters == d.letters) {
                    present = true;
                    break;
                }
            }
            if (!present) g.edges.push_back(Edge{h.id, h.id, h.period, d});
        }
    }
}

int vertex_index(const HorseshoeGraph& g, const std::string& id) {
    for (std::size_t i = 0; i < g.horseshoes.size(); ++i)
        if (g.horseshoes[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<double> deck_speeds(const FuchsianRep& rep, const Horseshoe& h) {
    std::vector<double> out;
    out.reserve(h.decks.size());
    for (const GroupWord& d : h.decks)
        out.push_back(translation_length(evaluate(rep, d)) / h.period);
    return out;
}

SccResult scc(const HorseshoeGraph& g) {
    const int n = static_cast<int>(g.horseshoes.size());
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : g.edges) {
        int u = vertex_index(g, e.from), v = vertex_index(g, e.to);
        adj[u].push_back(v);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    // Tarjan, iterative so deep chains cannot overflow the stack.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stk;
    int next_index = 0, emitted = 0;

    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stk.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stk.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    while (true) {
                        int w = stk.back();
                        stk.pop_back();
                        on_stack[w] = false;
                        comp[w] = emitted;
                        if (w == f.v) break;
                    }
                    ++emitted;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }

    // Tarjan emits components in reverse topological order; flip so that
    // every condensation edge increases the id.
    SccResult r;
    r.comp.resize(n);
    for (int v = 0; v < n; ++v) r.comp[v] = emitted - 1 - comp[v];
    r.members.assign(emitted, {});
    for (int v = 0; v < n; ++v) r.members[r.comp[v]].push_back(v);
    r.dag.assign(emitted, {});
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (r.comp[v] != r.comp[w]) r.dag[r.comp[v]].push_back(r.comp[w]);
    for (auto& a : r.dag) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return r;
}

std::vector<std::vector<bool>> condensation_reach(const SccResult& s) {
    const int m = static_cast<int>(s.members.size());
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    // ids are topological, so a reverse sweep closes the relation in one pass.
    for (int c = m - 1; c >= 0; --c) {
        reach[c][c] = true;
        for (int d : s.dag[c])
            for (int e = 0; e < m; ++e)
                if (reach[d][e]) reach[c][e] = true;
    }
    return reach;
}

bool class_reach(const SccResult& s, int i, int j) {
    const int m = static_cast<int>(s.members.size());
    if (i < 0 || i >= m || j < 0 || j >= m)
        throw std::out_of_range("class_reach: component id out of range");
    if (i == j) return true;
    std::vector<bool> seen(m, false);
    std::vector<int> work{i};
    seen[i] = true;
    while (!work.empty()) {
        int c = work.back();
        work.pop_back();
        for (int d : s.dag[c]) {
            if (d == j) return true;
            if (!seen[d]) {
                seen[d] = true;
                work.push_back(d);
            }
        }
    }
    return false;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

OrderReport order_check(const HorseshoeGraph& g, const FuchsianRep& rep, int depth) {
    validate_graph(g);
    const int n = static_cast<int>(g.horseshoes.size());
    SccResult s = scc(g);

    // Merge vertices whose deck geodesics share an axis or provably cross.
    Dsu dsu(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool merged = false;
            for (const GroupWord& u : g.horseshoes[a].decks) {
                for (const GroupWord& v : g.horseshoes[b].decks) {
                    if (same_axis_set(u, v) || translates_cross(rep, u, v, depth) == Tri::Yes) {
                        merged = true;
                        break;
                    }
                }
                if (merged) break;
            }
            if (merged) dsu.unite(a, b);
        }
    }

    OrderReport rep_out;
    auto reach = condensation_reach(s);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool geo = dsu.find(a) == dsu.find(b);
            bool dyn = s.comp[a] == s.comp[b];
            if (geo == dyn) continue;
            OrderMismatch m;
            m.comp_a = s.comp[a];
            m.comp_b = s.comp[b];
            m.vertex_a = g.horseshoes[a].id;
            m.vertex_b = g.horseshoes[b].id;
            m.merged_by_geodesics = geo;
            m.merged_by_scc = dyn;
            rep_out.mismatches.push_back(m);
        }
    }

    // Antisymmetry of the condensation order (mutual reach forces equality).
    const int m = static_cast<int>(s.members.size());
    for (int i = 0; i < m && rep_out.antisymmetric; ++i)
        for (int j = i + 1; j < m; ++j)
            if (reach[i][j] && reach[j][i]) {
                rep_out.antisymmetric = false;
                break;
            }
    return rep_out;
}

std::vector<TEdge> graph_T(const SccResult& s,
                           const std::function<Tri(int, int, int)>& oracle) {
    const int m = static_cast<int>(s.members.size());
    auto reach = condensation_reach(s);
    std::vector<TEdge> out;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j || !reach[i][j]) continue;
            bool blocked = false, unknown = false;
            for (int k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                if (!(reach[i][k] && reach[k][j])) continue;
                Tri t = oracle(i, k, j);
                if (t == Tri::Yes) {
                    blocked = true;
                    break;
                }
                if (t == Tri::Unknown) unknown = true;
            }
            if (!blocked) out.push_back(TEdge{i, j, unknown});
        }
    }
    return out;
}

Filtration filtration(const SccResult& s) {
    auto reach = condensation_reach(s);
    const int m = static_cast<int>(s.members.size());
    Filtration f;
    f.up.assign(m, {});
    f.down.assign(m, {});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (reach[i][j]) {
                f.up[i].push_back(j);
                f.down[j].push_back(i);
            }
    return f;
}

}  // namespace hn
