#include "hn/realize.hpp"

#include "hn/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace hn {

namespace {

using cpp_int = hn::Int;

Rat rat_pow2(int e) {
    cpp_int one(1);
    if (e >= 0) return Rat(one << e);
    return Rat(one, one << (-e));
}

Rat dist_inf(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dist_inf: dimension mismatch");
    Rat m(0);
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, rat_abs(a[i] - b[i]));
    return m;
}

std::map<std::string, int> index_map(const HorseshoeGraph& g) {
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < g.horseshoes.size(); ++i)
        idx[g.horseshoes[i].id] = static_cast<int>(i);
    return idx;
}

RatVec edge_disp(const HorseshoeGraph& g, int e) {
    std::vector<long long> ab = abelianize(g.edges[static_cast<std::size_t>(e)].word);
    RatVec v(static_cast<std::size_t>(2 * g.genus), Rat(0));
    for (std::size_t i = 0; i < ab.size(); ++i) v[i] = Rat(ab[i]);
    return v;
}

void require_strongly_connected(const HorseshoeGraph& g) {
    validate_graph(g);
    if (g.horseshoes.empty())
        throw std::invalid_argument("realize: empty graph");
    if (scc(g).members.size() != 1)
        throw std::invalid_argument("realize: graph is not strongly connected");
}

}  // namespace

bool walk_composable(const HorseshoeGraph& g, const std::vector<int>& edges) {
    auto idx = index_map(g);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int e = edges[i];
        if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
        if (i > 0) {
            const Edge& prev = g.edges[static_cast<std::size_t>(edges[i - 1])];
            const Edge& cur = g.edges[static_cast<std::size_t>(e)];
            if (prev.to != cur.from) return false;
        }
    }
    return true;
}

RatVec empirical_rotation(const HorseshoeGraph& g, const std::vector<int>& edges) {
    if (edges.empty()) throw std::invalid_argument("empirical_rotation: empty prefix");
    if (!walk_composable(g, edges))
        throw std::invalid_argument("empirical_rotation: walk not composable");
    RatVec disp(static_cast<std::size_t>(2 * g.genus), Rat(0));
    long long time = 0;
    for (int e : edges) {
        disp = vec_add(disp, edge_disp(g, e));
        time += g.edges[static_cast<std::size_t>(e)].n;
    }
    return vec_scale(disp, Rat(1, time));
}

bool bounded_deviation_check(const HorseshoeGraph& g, const std::vector<int>& edges,
                             const RatVec& rho, const Rat& L) {
    if (!walk_composable(g, edges))
        throw std::invalid_argument("bounded_deviation_check: walk not composable");
    RatVec disp(static_cast<std::size_t>(2 * g.genus), Rat(0));
    RatVec drift(disp.size(), Rat(0));
    Rat time(0);
    for (int e : edges) {
        disp = vec_add(disp, edge_disp(g, e));
        time += Rat(g.edges[static_cast<std::size_t>(e)].n);
        drift = vec_scale(rho, time);
        if (dist_inf(disp, drift) > L) return false;
    }
    return true;
}

std::vector<Cycle> simple_cycles(const HorseshoeGraph& g) {
    const int n = static_cast<int>(g.horseshoes.size());
    auto idx = index_map(g);
    std::vector<std::vector<int>> out_edges(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out_edges[static_cast<std::size_t>(idx[g.edges[e].from])].push_back(static_cast<int>(e));

    std::vector<Cycle> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);

    auto record = [&](int anchor) {
        if (cycles.size() >= 20000)
            throw std::runtime_error("simple_cycles: cycle budget exceeded");
        Cycle c;
        c.edges = path;
        c.start = anchor;
        RatVec disp(static_cast<std::size_t>(2 * g.genus), Rat(0));
        for (int e : path) {
            c.time += g.edges[static_cast<std::size_t>(e)].n;
            disp = vec_add(disp, edge_disp(g, e));
        }
        c.rho = vec_scale(disp, Rat(1, c.time));
        cycles.push_back(std::move(c));
    };

    // Every cycle is listed once, anchored at its smallest vertex: the walk
    // only uses vertices >= anchor and closes back at the anchor.
    auto dfs = [&](auto&& self, int anchor, int v) -> void {
        for (int e : out_edges[static_cast<std::size_t>(v)]) {
            int w = idx[g.edges[static_cast<std::size_t>(e)].to];
            if (w < anchor) continue;
            path.push_back(e);
            if (w == anchor) {
                record(anchor);
            } else if (!on_path[static_cast<std::size_t>(w)]) {
                on_path[static_cast<std::size_t>(w)] = true;
                self(self, anchor, w);
                on_path[static_cast<std::size_t>(w)] = false;
            }
            path.pop_back();
        }
    };
    for (int a = 0; a < n; ++a) dfs(dfs, a, a);
    return cycles;
}

std::vector<int> connector_path(const HorseshoeGraph& g, int from, int to) {
    const int n = static_cast<int>(g.horseshoes.size());
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::out_of_range("connector_path: vertex out of range");
    if (from == to) return {};
    auto idx = index_map(g);
    std::vector<std::vector<int>> out_edges(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        out_edges[static_cast<std::size_t>(idx[g.edges[e].from])].push_back(static_cast<int>(e));

    // Dijkstra over (total n, edge-index sequence) with lexicographic ties;
    // appending an edge preserves the order, so settling once is sound.
    struct Label {
        long long dist;
        std::vector<int> seq;
        int vertex;
        bool operator<(const Label& o) const {
            if (dist != o.dist) return dist < o.dist;
            if (seq != o.seq)
                return std::lexicographical_compare(seq.begin(), seq.end(), o.seq.begin(),
                                                    o.seq.end());
            return vertex < o.vertex;
        }
    };
    std::set<Label> queue;
    std::vector<bool> settled(static_cast<std::size_t>(n), false);
    queue.insert(Label{0, {}, from});
    while (!queue.empty()) {
        Label cur = *queue.begin();
        queue.erase(queue.begin());
        if (settled[static_cast<std::size_t>(cur.vertex)]) continue;
        settled[static_cast<std::size_t>(cur.vertex)] = true;
        if (cur.vertex == to) return cur.seq;
        for (int e : out_edges[static_cast<std::size_t>(cur.vertex)]) {
            const Edge& ed = g.edges[static_cast<std::size_t>(e)];
            int w = idx[ed.to];
            if (settled[static_cast<std::size_t>(w)]) continue;
            Label nxt{cur.dist + ed.n, cur.seq, w};
            nxt.seq.push_back(e);
            queue.insert(std::move(nxt));
        }
    }
    throw std::runtime_error("connector_path: target unreachable");
}

CycleApprox approximate_by_cycles(const HorseshoeGraph& g, const RatVec& rho, const Rat& eps) {
    require_strongly_connected(g);
    const std::size_t d = static_cast<std::size_t>(2 * g.genus);
    if (rho.size() != d) throw std::invalid_argument("approximate_by_cycles: dimension mismatch");
    if (eps < 0) throw std::invalid_argument("approximate_by_cycles: negative tolerance");

    std::vector<Cycle> cycles = simple_cycles(g);
    if (cycles.empty()) throw std::runtime_error("approximate_by_cycles: graph has no cycles");
    const std::size_t k = cycles.size();

    // One exact LP minimizing the max-norm residual t:
    //   sum lambda = 1;  sum lambda_i v_i + u - w = rho;  u_j + cu_j = t;
    //   w_j + cw_j = t.  An optimum with t = 0 is an exact representation.
    const std::size_t nv = k + 1 + 4 * d;
    const std::size_t rows = 1 + 3 * d;
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(nv, Rat(0)));
    std::vector<Rat> b(rows, Rat(0));
    const std::size_t t_col = k;
    const std::size_t u0 = k + 1, w0 = u0 + d, cu0 = w0 + d, cw0 = cu0 + d;
    for (std::size_t i = 0; i < k; ++i) A[0][i] = 1;
    b[0] = 1;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[1 + j][i] = cycles[i].rho[j];
        A[1 + j][u0 + j] = 1;
        A[1 + j][w0 + j] = -1;
        b[1 + j] = rho[j];
        A[1 + d + j][u0 + j] = 1;
        A[1 + d + j][cu0 + j] = 1;
        A[1 + d + j][t_col] = -1;
        A[1 + 2 * d + j][w0 + j] = 1;
        A[1 + 2 * d + j][cw0 + j] = 1;
        A[1 + 2 * d + j][t_col] = -1;
    }
    std::vector<Rat> c(nv, Rat(0));
    c[t_col] = 1;
    LPResult r = solve_lp(A, b, c);
    if (r.status != LPStatus::Optimal)
        throw std::runtime_error("approximate_by_cycles: residual LP failed");
    if (r.objective > eps)
        throw std::runtime_error("approximate_by_cycles: best residual " +
                                 rat_to_string(r.objective) + " exceeds tolerance " +
                                 rat_to_string(eps) + " over " + std::to_string(k) + " cycles");

    CycleApprox out;
    out.combination.assign(d, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (r.x[i] == 0) continue;
        out.combination = vec_add(out.combination, vec_scale(cycles[i].rho, r.x[i]));
        out.cycles.push_back(cycles[i]);
        out.weights.push_back(r.x[i]);
    }
    out.residual = dist_inf(out.combination, rho);
    return out;
}

FiniteRealization realize_finite(const HorseshoeGraph& g, const RatVec& rho, const Rat& eps,
                                 std::optional<int> anchor) {
    CycleApprox plan = approximate_by_cycles(g, rho, eps);
    auto idx = index_map(g);
    const std::size_t ell = plan.cycles.size();

    // Base exponents proportional to weight / cycle-time make the pure cycle
    // part average exactly to the LP combination.
    cpp_int den(1);
    std::vector<Rat> q(ell);
    for (std::size_t i = 0; i < ell; ++i) {
        q[i] = plan.weights[i] / Rat(plan.cycles[i].time);
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q[i]));
    }
    std::vector<long long> base(ell);
    Rat cycle_time(0);
    for (std::size_t i = 0; i < ell; ++i) {
        Rat m = q[i] * Rat(den);
        cpp_int mi = boost::multiprecision::numerator(m);
        if (mi > cpp_int(1) << 40)
            throw std::runtime_error("realize_finite: exponent budget exceeded");
        base[i] = mi.convert_to<long long>();
        cycle_time += Rat(plan.cycles[i].time) * base[i];
    }

    const int a0 = anchor.value_or(plan.cycles[0].start);
    std::vector<std::vector<int>> conns(ell + 1);
    conns[0] = connector_path(g, a0, plan.cycles[0].start);
    for (std::size_t i = 0; i + 1 < ell; ++i)
        conns[i + 1] = connector_path(g, plan.cycles[i].start, plan.cycles[i + 1].start);
    conns[ell] = connector_path(g, plan.cycles[ell - 1].start, a0);

    RatVec conn_disp(rho.size(), Rat(0));
    Rat conn_time(0);
    for (const auto& cn : conns)
        for (int e : cn) {
            conn_disp = vec_add(conn_disp, edge_disp(g, e));
            conn_time += Rat(g.edges[static_cast<std::size_t>(e)].n);
        }

    // Dilution bound: the emitted error is at most
    //   (2^j * cycle_time * residual + |conn_disp - conn_time*rho|) /
    //   (2^j * cycle_time + conn_time)
    // so pick the smallest doubling j making it <= 2*eps, then verify.
    Rat two_eps = Rat(2) * eps;
    Rat conn_dev(0);
    for (std::size_t j = 0; j < rho.size(); ++j)
        conn_dev = std::max(conn_dev, rat_abs(conn_disp[j] - conn_time * rho[j]));
    int dbl = 0;
    if (conn_time > 0) {
        if (two_eps == plan.residual) {
            if (conn_dev != two_eps * conn_time)
                throw std::runtime_error(
                    "realize_finite: cannot reach the bound with zero tolerance");
        } else {
            while (rat_pow2(dbl) * cycle_time * (two_eps - plan.residual) <
                   conn_dev - two_eps * conn_time) {
                if (++dbl > 62) throw std::runtime_error("realize_finite: exponent overflow");
            }
        }
    }

    FiniteRealization fr;
    fr.plan = plan;
    for (int attempt = 0;; ++attempt) {
        fr.edges.clear();
        fr.exponents.assign(ell, 0);
        cpp_int total = 0;
        for (std::size_t i = 0; i <= ell; ++i) {
            total += conns[i].size();
            if (i < ell)
                total += cpp_int(base[i]) * (cpp_int(1) << dbl) * plan.cycles[i].edges.size();
        }
        if (total > 5'000'000) throw std::runtime_error("realize_finite: word budget exceeded");
        fr.edges.reserve(total.convert_to<std::size_t>());
        for (std::size_t i = 0; i < ell; ++i) {
            fr.edges.insert(fr.edges.end(), conns[i].begin(), conns[i].end());
            long long reps = base[i] * (1LL << dbl);
            fr.exponents[i] = reps;
            for (long long rcount = 0; rcount < reps; ++rcount)
                fr.edges.insert(fr.edges.end(), plan.cycles[i].edges.begin(),
                                plan.cycles[i].edges.end());
        }
        fr.edges.insert(fr.edges.end(), conns[ell].begin(), conns[ell].end());
        fr.rho_emitted = empirical_rotation(g, fr.edges);
        fr.error = dist_inf(fr.rho_emitted, rho);
        if (fr.error <= two_eps) break;
        if (attempt >= 4 || ++dbl > 62)
            throw std::runtime_error("realize_finite: bound not attained");
    }
    return fr;
}

RealizeStream::RealizeStream(const HorseshoeGraph& g, const RatVec& rho) : g_(g), rho_(rho) {
    require_strongly_connected(g_);
    if (rho_.size() != static_cast<std::size_t>(2 * g_.genus))
        throw std::invalid_argument("realize_stream: dimension mismatch");
    RatPolytope piece = rot_graph(g_, scc(g_)).front();
    if (!polytope_contains(piece, rho_))
        throw std::invalid_argument("realize_stream: target outside the rotation polytope");
}

void RealizeStream::ensure_stage(int s) {
    while (static_cast<int>(stages_.size()) <= s) {
        int t = static_cast<int>(stages_.size());
        FiniteRealization fr = realize_finite(g_, rho_, rat_pow2(-t - 1), anchor_);
        StageInfo si;
        si.stage = t;
        si.word = fr.edges;
        si.word_error = fr.error;

        RatVec disp(rho_.size(), Rat(0));
        Rat time(0);
        Rat kmax(0), ratio_max(0);
        for (int e : si.word) {
            disp = vec_add(disp, edge_disp(g_, e));
            time += Rat(g_.edges[static_cast<std::size_t>(e)].n);
            Rat dev(0);
            for (std::size_t j = 0; j < disp.size(); ++j)
                dev = std::max(dev, rat_abs(disp[j] - time * rho_[j]));
            kmax = std::max(kmax, dev);
            ratio_max = std::max(ratio_max, dev / time);
        }
        si.max_prefix_dev = kmax;
        si.word_time = boost::multiprecision::numerator(time).convert_to<long long>();
        // Certified in-stage bound: for s >= 1 the doubling rule for the
        // previous stage guarantees 2^{-s+3}; stage 0 has no elapsed mass to
        // lean on, so its bound is the exact computed maximum (at least 8).
        if (t == 0) {
            Rat tail = si.word_error + kmax / time;
            si.prefix_bound = std::max(std::max(Rat(8), ratio_max), tail);
        } else {
            si.prefix_bound = rat_pow2(3 - t);
        }
        stage_disp_.push_back(disp);
        stages_.push_back(std::move(si));
    }
}

void RealizeStream::ensure_reps(int s) {
    ensure_stage(s);
    if (stages_[static_cast<std::size_t>(s)].reps > 0) return;
    ensure_stage(s + 1);
    StageInfo& si = stages_[static_cast<std::size_t>(s)];
    const Rat k_next = stages_[static_cast<std::size_t>(s + 1)].max_prefix_dev;
    const Rat n_s = Rat(si.word_time);
    const Rat bound = rat_pow2(2 - s);
    long long p = 1;
    while (dev_mass_ + Rat(p) * n_s * si.word_error + k_next >
           bound * (elapsed_ + Rat(p) * n_s)) {
        if (p > (1LL << 61)) throw std::runtime_error("realize_stream: exponent overflow");
        p *= 2;
    }
    si.reps = p;
}

int RealizeStream::next() {
    ensure_reps(stage_);
    StageInfo& si = stages_[static_cast<std::size_t>(stage_)];
    int e = si.word[pos_];
    ++pos_;
    ++emitted_;
    if (pos_ == si.word.size()) {
        pos_ = 0;
        ++copy_;
        if (copy_ == si.reps) {
            elapsed_ += Rat(si.reps) * Rat(si.word_time);
            dev_mass_ += Rat(si.reps) * Rat(si.word_time) * si.word_error;
            copy_ = 0;
            ++stage_;
        }
    }
    return e;
}

Rat RealizeStream::current_bound() {
    ensure_stage(stage_);
    return stages_[static_cast<std::size_t>(stage_)].prefix_bound;
}

const StageInfo& RealizeStream::stage_info(int s) {
    if (s < 0) throw std::out_of_range("stage_info: negative stage");
    ensure_reps(s);
    return stages_[static_cast<std::size_t>(s)];
}

StreamCheckpoint RealizeStream::checkpoint() const {
    return StreamCheckpoint{stage_, copy_, pos_};
}

void RealizeStream::restore(const StreamCheckpoint& c) {
    if (c.stage < 0 || c.copy < 0) throw std::invalid_argument("restore: bad checkpoint");
    elapsed_ = 0;
    dev_mass_ = 0;
    emitted_ = 0;
    for (int u = 0; u < c.stage; ++u) {
        ensure_reps(u);
        const StageInfo& si = stages_[static_cast<std::size_t>(u)];
        elapsed_ += Rat(si.reps) * Rat(si.word_time);
        dev_mass_ += Rat(si.reps) * Rat(si.word_time) * si.word_error;
        emitted_ += si.reps * static_cast<std::int64_t>(si.word.size());
    }
    ensure_reps(c.stage);
    const StageInfo& si = stages_[static_cast<std::size_t>(c.stage)];
    if (c.copy >= si.reps || c.pos >= si.word.size())
        throw std::invalid_argument("restore: checkpoint outside stage");
    stage_ = c.stage;
    copy_ = c.copy;
    pos_ = c.pos;
    emitted_ += c.copy * static_cast<std::int64_t>(si.word.size()) +
                static_cast<std::int64_t>(c.pos);
}

RealizeSetStream::RealizeSetStream(const HorseshoeGraph& g, const std::vector<RatVec>& net,
                                   const Rat& eps)
    : g_(g), net_(net), eps_(eps) {
    require_strongly_connected(g_);
    if (net_.empty()) throw std::invalid_argument("realize_set: empty net");
    if (eps_ <= 0) throw std::invalid_argument("realize_set: tolerance must be positive");
    RatPolytope piece = rot_graph(g_, scc(g_)).front();
    for (const RatVec& v : net_) {
        if (v.size() != static_cast<std::size_t>(2 * g_.genus))
            throw std::invalid_argument("realize_set: dimension mismatch");
        if (!in_rel_interior(piece, v))
            throw std::invalid_argument("realize_set: net vertex outside relative interior");
    }

    for (const RatVec& v : net_) {
        FiniteRealization fr = realize_finite(g_, v, eps_ / 8, anchor_);
        RatVec disp(v.size(), Rat(0));
        Rat time(0);
        Rat kmax(0);
        RatVec wrho = fr.rho_emitted;
        for (int e : fr.edges) {
            disp = vec_add(disp, edge_disp(g_, e));
            time += Rat(g_.edges[static_cast<std::size_t>(e)].n);
            Rat dev(0);
            for (std::size_t j = 0; j < disp.size(); ++j)
                dev = std::max(dev, rat_abs(disp[j] - time * wrho[j]));
            kmax = std::max(kmax, dev);
        }
        words_.push_back(fr.edges);
        word_disp_.push_back(disp);
        word_time_.push_back(boost::multiprecision::numerator(time).convert_to<long long>());
        max_prefix_dev_ = std::max(max_prefix_dev_, kmax);
    }
    disp_.assign(net_[0].size(), Rat(0));
}

void RealizeSetStream::advance_target() {
    copies_ = 0;
    ++target_;
    if (target_ == static_cast<int>(net_.size())) {
        target_ = 0;
        ++sweep_;
    }
    // The polyline guarantee needs one full sweep behind us (so each dwell
    // starts eps/2-close to its predecessor) and enough elapsed time that
    // in-copy wobble max_prefix_dev / elapsed stays under eps/4.
    if (burn_in_ < 0 && sweep_ >= 1 && elapsed_ * eps_ >= Rat(4) * max_prefix_dev_)
        burn_in_ = emitted_;
}

int RealizeSetStream::next() {
    const std::vector<int>& w = words_[static_cast<std::size_t>(target_)];
    int e = w[pos_];
    ++pos_;
    ++emitted_;
    disp_ = vec_add(disp_, edge_disp(g_, e));
    elapsed_ += Rat(g_.edges[static_cast<std::size_t>(e)].n);
    if (pos_ == w.size()) {
        pos_ = 0;
        ++copies_;
        long long need = 1LL << std::min(sweep_, 40LL);
        if (copies_ >= need) {
            Rat dev(0);
            for (std::size_t j = 0; j < disp_.size(); ++j)
                dev = std::max(dev,
                               rat_abs(disp_[j] / elapsed_ - net_[static_cast<std::size_t>(target_)][j]));
            if (Rat(2) * dev <= eps_) advance_target();
        }
    }
    return e;
}

void RealizeSetStream::restore(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("restore: negative position");
    elapsed_ = 0;
    disp_.assign(net_[0].size(), Rat(0));
    sweep_ = 0;
    target_ = 0;
    copies_ = 0;
    pos_ = 0;
    emitted_ = 0;
    burn_in_ = -1;
    for (std::int64_t i = 0; i < k; ++i) next();
}

}  // namespace hn
