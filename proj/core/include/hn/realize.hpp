#pragma once

#include "hn/graph.hpp"
#include "hn/polytope.hpp"
#include "hn/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hn {

// Walks are edge-index sequences into g.edges.
bool walk_composable(const HorseshoeGraph& g, const std::vector<int>& edges);

// Average homology displacement per unit time of a finite walk, exact.
RatVec empirical_rotation(const HorseshoeGraph& g, const std::vector<int>& edges);

// max over prefixes of |sum of displacements - elapsed * rho|_inf <= L.
bool bounded_deviation_check(const HorseshoeGraph& g, const std::vector<int>& edges,
                             const RatVec& rho, const Rat& L);

// Vertex-simple directed cycle, anchored at its smallest vertex.
struct Cycle {
    std::vector<int> edges;
    int start = 0;
    int time = 0;    // total transition time n
    RatVec rho;      // exact rotation vector
};

// All vertex-simple cycles in deterministic order (anchors ascending, then
// edge-index lexicographic).  Throws past 20000 cycles.
std::vector<Cycle> simple_cycles(const HorseshoeGraph& g);

// Shortest walk from one vertex to another by total n, ties broken by
// lexicographically smallest edge-index sequence.  Empty when from == to.
std::vector<int> connector_path(const HorseshoeGraph& g, int from, int to);

struct CycleApprox {
    std::vector<Cycle> cycles;   // support of the combination
    std::vector<Rat> weights;    // strictly positive, summing to 1
    RatVec combination;          // sum of weights * cycle vectors
    Rat residual;                // |combination - target|_inf (0 when exact)
};

// Convex combination of simple-cycle rotation vectors reproducing rho with
// minimal max-norm residual; fails when that residual exceeds eps.
// Requires a strongly connected graph.
CycleApprox approximate_by_cycles(const HorseshoeGraph& g, const RatVec& rho, const Rat& eps);

struct FiniteRealization {
    std::vector<int> edges;              // closed walk
    RatVec rho_emitted;                  // exact empirical rotation
    Rat error;                           // |rho_emitted - rho|_inf, <= 2*eps
    std::vector<long long> exponents;    // copies per cycle block
    CycleApprox plan;
};

// Closed walk W = (w1)^p1 w'1 (w2)^p2 ... with connector paths between the
// chosen cycles and exponents computed from the explicit dilution bound,
// then verified exactly.  The walk is anchored at the first cycle's start
// unless an anchor vertex is given.
FiniteRealization realize_finite(const HorseshoeGraph& g, const RatVec& rho, const Rat& eps,
                                 std::optional<int> anchor = std::nullopt);

struct StageInfo {
    int stage = 0;
    std::vector<int> word;      // stage word W^s, a closed walk at the anchor
    long long reps = 0;         // p_s (0 while undecided)
    Rat word_error;             // |rho(W^s) - rho|_inf, <= 2^-s
    Rat prefix_bound;           // certified bound for every prefix ending in this stage
    Rat max_prefix_dev;         // max over prefixes P of W^s of |disp(P) - time(P)*rho|_inf
    long long word_time = 0;    // total n of W^s
};

struct StreamCheckpoint {
    int stage = 0;
    long long copy = 0;
    std::size_t pos = 0;
};

// Infinite schedule (W^0)^p0 (W^1)^p1 ... with stage words from
// realize_finite at eps = 2^-s-1 and exponents chosen so that every prefix
// ending in stage s stays within the stage's certified bound: 2^-s+3 for
// s >= 1, and for stage 0 the exact computed maximum (at least 8).  Ends of
// stage s additionally satisfy 2^-s+2.  Fully deterministic.
class RealizeStream {
  public:
    RealizeStream(const HorseshoeGraph& g, const RatVec& rho);

    int next();                            // next edge index
    int current_stage() const { return stage_; }
    Rat current_bound();                   // certified bound at the current stage
    const StageInfo& stage_info(int s);    // builds the stage if needed
    std::int64_t emitted() const { return emitted_; }

    StreamCheckpoint checkpoint() const;
    void restore(const StreamCheckpoint& c);

  private:
    void ensure_stage(int s);
    void ensure_reps(int s);

    HorseshoeGraph g_;
    RatVec rho_;
    int anchor_ = 0;
    std::vector<StageInfo> stages_;
    std::vector<RatVec> stage_disp_;   // displacement of one copy of W^s
    Rat elapsed_ = 0;                  // total time of completed stages
    Rat dev_mass_ = 0;                 // sum over completed stages of p*n*word_error
    int stage_ = 0;
    long long copy_ = 0;
    std::size_t pos_ = 0;
    std::int64_t emitted_ = 0;
};

// Back-and-forth schedule tracking a closed polyline of targets, each in
// the relative interior of the rotation polytope of the (strongly
// connected) graph.  Dwell blocks double per sweep; after the recorded
// burn-in prefix every empirical rotation stays within eps of the polyline,
// and every sweep passes within eps of every net vertex.
class RealizeSetStream {
  public:
    RealizeSetStream(const HorseshoeGraph& g, const std::vector<RatVec>& net, const Rat& eps);

    int next();
    std::int64_t emitted() const { return emitted_; }
    // Index of the first symbol after which the polyline guarantee holds;
    // -1 while the stream has not reached it yet.
    std::int64_t burn_in() const { return burn_in_; }
    int current_target() const { return target_; }

    // Replay-based restore: identical construction re-emits k symbols.
    std::int64_t checkpoint() const { return emitted_; }
    void restore(std::int64_t k);

  private:
    void advance_target();

    HorseshoeGraph g_;
    std::vector<RatVec> net_;
    Rat eps_;
    int anchor_ = 0;
    std::vector<std::vector<int>> words_;    // dwell word per net vertex
    std::vector<RatVec> word_disp_;
    std::vector<long long> word_time_;
    Rat max_prefix_dev_ = 0;                 // worst K' over net words
    Rat elapsed_ = 0;
    RatVec disp_;
    long long sweep_ = 0;
    int target_ = 0;
    long long copies_ = 0;                   // full copies emitted in this dwell
    std::size_t pos_ = 0;
    std::int64_t emitted_ = 0;
    std::int64_t burn_in_ = -1;
};

}  // namespace hn
