#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "admg/binary_param.hpp"
#include "admg/graph.hpp"
#include "admg/joint_table.hpp"

namespace admg {

// Deterministic random source.  mt19937_64 output is fixed by the standard
// and the [0,1) mapping avoids distribution classes, so identical seeds give
// identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 eng_;
};

// Ground-truth m-separation: enumerate every simple path (as an edge
// sequence — a pair joined by -> and <-> yields two distinct steps) between
// the sets and test each with is_m_connecting.  Exponential; n <= 10.
bool brute_force_m_separated(const Admg& g, VertexSet x, VertexSet y, VertexSet z);

// DAG with one fresh latent parent per bidirected edge; the observed margin
// of its independence model realizes the mixed graph's.
struct CanonicalDag {
    Admg dag;            // observed vertices keep their ids; latents follow
    int observed_count;  // = original n
    // latent_edge[i] = the bidirected pair (a,b) replaced by latent n+i.
    std::vector<std::pair<int, int>> latent_edge;
};
CanonicalDag canonical_dag(const Admg& g);

// Independent d-separation check for digraphs (no bidirected edges), via the
// classic route: restrict to ancestors of x|y|z, moralize, delete z, test
// undirected connectivity.  Used to cross-validate m-separation through the
// canonical DAG.
bool d_separated(const Admg& dag, VertexSet x, VertexSet y, VertexSet z);

// Exact observed joint of a canonical-DAG model with conditional tables
// drawn from the seeded generator into [0.05, 0.95]; latents summed out.
// The result provably satisfies the graph's global Markov property.
// Requires n + latent count <= 16 (BoundExceeded).
JointTable sample_markov_table(const Admg& g, std::uint64_t seed);

struct RandomSpec {
    int n = 0;
    double p_directed = 0.3;
    double p_bidirected = 0.3;
    std::uint64_t seed = 0;
};

// Sample a topological order, then independently add u->v (per p_directed)
// and u<->v (per p_bidirected) for each pair u before v.
Admg random_admg(const RandomSpec& spec);

// Every ADMG on n vertices (n <= 4): all 6^C(n,2) pair states
// {none, ->, <-, <->, -> plus <->, <- plus <->}, acyclicity-filtered, in
// mixed-radix order over pairs (0,1),(0,2),...  The callback form avoids
// materializing all graphs.
void for_each_admg(int n, const std::function<void(const Admg&)>& fn);
std::vector<Admg> enumerate_admgs(int n);

// Rejection-samples parameters with every entry shrunk toward the
// independence point by lambda, until validate_params accepts.  lambda is
// halved after every 64 consecutive rejections, so termination is certain
// (the independence point itself is valid).
MobiusParams sample_valid_params(const MobiusContext& ctx, std::uint64_t seed,
                                 double lambda = 0.5);

struct VerifyCounterexample {
    std::string direction;  // "forward" | "reverse"
    int trial = 0;
    VertexSet margin;    // forward: the ancestral margin that failed
    VertexSet x, y, z;   // reverse: the separation statement that failed
};

struct VerifyReport {
    int trials = 0;
    int forward_pass = 0;  // trials whose every ancestral margin checked out
    int reverse_pass = 0;  // trials whose every separation statement checked out
    std::vector<VerifyCounterexample> counterexamples;  // capped at 10

    bool ok() const { return forward_pass == trials && reverse_pass == trials; }
};

// The two-way equivalence harness at desk scale (n <= 8): forward, tables from
// the latent-DAG sampler must pass every ancestral-margin factorization;
// reverse, tables reconstructed from valid random parameters must satisfy
// every m-separation statement (singleton pairs, all conditioning sets).
VerifyReport verify_markov_equivalence(const Admg& g, int trials, std::uint64_t seed,
                                       double tol = 1e-9);

}  // namespace admg
